"""Runs the CLI on small graphs and validates every JSON report against the published schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items()
)


def validate(doc, name):
    jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)


def check_identity(d):
    assert abs(d["full"] - (d["partial"] + d["excluded_band"])) <= 1e-8, d


def run(*args):
    return subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    run("sbm", "--kind", "mixed", "--p", "0.6", "--q", "0.2", "--blocks", "6,6,6", "--seed", "3",
        "--out-prefix", str(tmp / "g"))
    count = 0
    for method in ("mgc", "sgc", "em", "sc"):
        for target in ("1", "5", "18"):
            prefix = tmp / f"{method}{target}"
            run("coarsen", str(tmp / "g.edges"), "--method", method, "--target-size", target,
                "--seed", "1", "--out-prefix", str(prefix))
            report = json.loads((prefix.with_suffix(".report.json")).read_text())
            validate(report, "report.schema.json")
            check_identity(report["distance"])
            for laplacian in ("built", "consistent"):
                out = run("distance", str(tmp / "g.edges"), str(prefix.with_suffix(".partition")),
                          "--laplacian", laplacian, "--verbose")
                doc = json.loads(out)
                validate(doc, "distance.schema.json")
                check_identity(doc)
            count += 1
    for mode in ("full", "partial"):
        validate(json.loads(run("distance", str(tmp / "g.edges"), str(tmp / "g.partition"), "--mode", mode)),
                 "distance.schema.json")

print(f"validated {count} coarsening reports")
