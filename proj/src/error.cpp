#include "galmag/error.hpp"

namespace galmag {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroCurvature: return "zero-curvature";
    case ErrorKind::InvalidStep: return "invalid-step";
    case ErrorKind::WrongCase: return "wrong-case";
    case ErrorKind::IncompatibleIC: return "incompatible-ic";
    case ErrorKind::NonFiniteState: return "non-finite-state";
    case ErrorKind::DomainMismatch: return "domain-mismatch";
    case ErrorKind::InvalidConfig: return "invalid-config";
  }
  return "unknown";
}

}  // namespace galmag
