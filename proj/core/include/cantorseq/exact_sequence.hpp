#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cantorseq/seed.hpp"

namespace cantorseq {

// Default bound on |n| for exact terms.
inline constexpr long kDefaultExactCap = 300;

// Exact integer terms c_n, extended forward from the seed with the span 8..11 relations
// (first applicable in that order, exact division). With cross_check enabled, the seed is
// checked against all four relations where it can be, and each new term is checked against
// the three relations it did not come from.
class ExactSequence {
 public:
  explicit ExactSequence(SequenceSeed seed, long cap = kDefaultExactCap, bool cross_check = true);

  const SequenceSeed& seed() const noexcept { return seed_; }
  const SomosCoefficients& coefficients() const noexcept { return coefficients_; }
  long cap() const noexcept { return cap_; }
  long known_upto() const noexcept { return static_cast<long>(terms_.size()) - 1; }

  // c_n for |n| <= cap; c_{-n} = -c_n. Throws cap_exceeded, laurent_violation,
  // relation_failure or all_zero_window.
  mpz_class term(long n);
  void extend_to(long n);

 private:
  const mpz_class& known(long n) const;  // 0 <= n <= known_upto()
  mpz_class signed_known(long n) const;
  mpz_class residual(const SomosRelation& relation, long s) const;
  void append_next();

  SequenceSeed seed_;
  SomosCoefficients coefficients_;
  long cap_;
  bool cross_check_;
  std::vector<mpz_class> terms_;
};

mpz_class term_exact(const SequenceSeed& seed, long n, long cap = kDefaultExactCap);

struct IndexRange {
  long lo = 0;
  long hi = 0;  // inclusive
};

struct RelationCounterexample {
  std::string identity;  // "even", "odd" or "span-8" .. "span-11"
  long m = 0;
  long n = 0;
  mpz_class lhs;
  mpz_class rhs;
};

struct RelationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<RelationCounterexample> counterexample;
};

// The general two-index identities:
//   c4 c_{n+m} c_{n-m}       = c_{m+1}c_{m-1} c_{n+3}c_{n-3} + (c4 c_m^2 - c3^2 c_{m+1}c_{m-1}) c_{n+2}c_{n-2}
//                              + (c3^2 c_{m+2}c_{m-2} - c_{m+3}c_{m-3}) c_{n+1}c_{n-1} - c4 c_{m+2}c_{m-2} c_n^2
//   c3 c5 c_{n+m+1} c_{n-m}  = c3 c_{m+2}c_{m-1} c_{n+4}c_{n-3} + (c5 c_{m+1}c_m - c3 c4 c_{m+2}c_{m-1}) c_{n+3}c_{n-2}
//                              + (c3 c4 c_{m+3}c_{m-2} - c3 c_{m+4}c_{m-3}) c_{n+2}c_{n-1} - c5 c_{m+3}c_{m-2} c_{n+1}c_n
// checked for every (m, n) in the given ranges; stops at the first counterexample.
RelationReport verify_relations_exact(ExactSequence& sequence, IndexRange n_range, IndexRange m_range);

// The four span relations at every base index s in the range (m is reported as the span).
RelationReport verify_somos_relations(ExactSequence& sequence, IndexRange s_range);

}  // namespace cantorseq
