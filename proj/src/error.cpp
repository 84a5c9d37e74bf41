#include "qzs/error.hpp"

namespace qzs {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::input_shape: return "input-shape";
    case ErrorKind::input: return "input";
    case ErrorKind::mean_zero_violation: return "mean-zero-violation";
    case ErrorKind::singular_parameter: return "singular-parameter";
    case ErrorKind::contraction_failure: return "contraction-failure";
    case ErrorKind::blow_up: return "blow-up-detected";
    case ErrorKind::hypothesis_violation: return "hypothesis-violation";
    case ErrorKind::domain: return "domain";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::not_applicable: return "not-applicable";
  }
  return "unknown";
}

}  // namespace qzs
