#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace autorecon {

enum class ErrorKind {
  invalid_group,
  invalid_element,
  not_generating,
  not_in_span,
  division_by_zero,
  context_mismatch,
  not_a_unit,
  not_rational,
  order_exceeded,
  contradiction,
  root_recovery_failed,
  internal_inconsistency,
  invalid_parameter,
  budget_exceeded,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the CLI
/// exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace autorecon
