#include "cantorseq/error.hpp"

namespace cantorseq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_prime: return "not-prime";
    case ErrorKind::degenerate_seed: return "degenerate-seed";
    case ErrorKind::seed_inconsistent: return "seed-inconsistent";
    case ErrorKind::laurent_violation: return "laurent-violation";
    case ErrorKind::relation_failure: return "relation-failure";
    case ErrorKind::all_zero_window: return "all-zero-window";
    case ErrorKind::stuck_window: return "stuck-window";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::not_found_below_cap: return "not-found-below-cap";
    case ErrorKind::bad_reduction: return "bad-reduction";
    case ErrorKind::char_two: return "char-two";
    case ErrorKind::not_good_prime: return "not-good-prime";
    case ErrorKind::hypothesis_violated: return "hypothesis-violated";
    case ErrorKind::inconsistent_order: return "inconsistent-order";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace cantorseq
