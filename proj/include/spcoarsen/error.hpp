#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spcoarsen {

enum class ErrorKind {
  IsolatedNode,
  BadWeight,
  BadIndex,
  SizeMismatch,
  EmptySupernode,
  NotSymmetric,
  NoConvergence,
  TargetTooSmall,
  NoCandidates,
  BadConfig,
  DegenerateSample,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spcoarsen
