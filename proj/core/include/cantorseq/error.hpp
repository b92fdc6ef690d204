#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantorseq {

enum class ErrorKind {
  invalid_argument,
  not_prime,
  degenerate_seed,
  seed_inconsistent,
  laurent_violation,
  relation_failure,
  all_zero_window,
  stuck_window,
  cap_exceeded,
  not_found_below_cap,
  bad_reduction,
  char_two,
  not_good_prime,
  hypothesis_violated,
  inconsistent_order,
  parse_error,
};

// Stable kebab-case tag, e.g. "laurent-violation".
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cantorseq
