#include "autorecon/error.hpp"

namespace autorecon {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_group: return "invalid-group";
    case ErrorKind::invalid_element: return "invalid-element";
    case ErrorKind::not_generating: return "not-generating";
    case ErrorKind::not_in_span: return "not-in-span";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::context_mismatch: return "context-mismatch";
    case ErrorKind::not_a_unit: return "not-a-unit";
    case ErrorKind::not_rational: return "not-rational";
    case ErrorKind::order_exceeded: return "order-exceeded";
    case ErrorKind::contradiction: return "contradiction";
    case ErrorKind::root_recovery_failed: return "root-recovery-failed";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace autorecon
