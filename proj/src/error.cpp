#include "spcoarsen/error.hpp"

namespace spcoarsen {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IsolatedNode: return "IsolatedNode";
    case ErrorKind::BadWeight: return "BadWeight";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::EmptySupernode: return "EmptySupernode";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::TargetTooSmall: return "TargetTooSmall";
    case ErrorKind::NoCandidates: return "NoCandidates";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace spcoarsen
