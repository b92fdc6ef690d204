#include "cantorseq/exact_sequence.hpp"

#include <algorithm>
#include <cstdlib>

#include "cantorseq/error.hpp"

namespace cantorseq {

ExactSequence::ExactSequence(SequenceSeed seed, long cap, bool cross_check)
    : seed_(std::move(seed)),
      coefficients_(SomosCoefficients::from_seed(seed_)),
      cap_(cap),
      cross_check_(cross_check) {
  if (cap_ < SequenceSeed::kLastIndex) {
    throw Error(ErrorKind::invalid_argument, "exact cap must be at least 9");
  }
  for (int n = 0; n <= SequenceSeed::kLastIndex; ++n) terms_.push_back(seed_.c(n));
  if (!cross_check_) return;
  // Every instance of a relation whose indices stay inside [-9, 9].
  for (const auto& relation : coefficients_.relations) {
    for (long s = -SequenceSeed::kLastIndex; s + relation.span <= SequenceSeed::kLastIndex; ++s) {
      if (residual(relation, s) != 0) {
        throw Error(ErrorKind::relation_failure, "seed violates the span-" + std::to_string(relation.span) +
                                                     " relation at s = " + std::to_string(s));
      }
    }
  }
}

const mpz_class& ExactSequence::known(long n) const { return terms_[static_cast<std::size_t>(n)]; }

mpz_class ExactSequence::signed_known(long n) const { return n >= 0 ? known(n) : mpz_class(-known(-n)); }

mpz_class ExactSequence::residual(const SomosRelation& relation, long s) const {
  const long k = relation.span;
  mpz_class rhs = 0;
  for (long i = 1; i <= k / 2; ++i) {
    const auto& coeff = relation.inner[static_cast<std::size_t>(i - 1)];
    if (coeff == 0) continue;
    rhs += coeff * signed_known(s + i) * signed_known(s + k - i);
  }
  return relation.left * signed_known(s) * signed_known(s + k) - rhs;
}

void ExactSequence::append_next() {
  const long target = static_cast<long>(terms_.size());
  bool any_pivot = false;
  for (const auto& relation : coefficients_.relations) {
    const long s = target - relation.span;
    const mpz_class pivot = signed_known(s);
    if (pivot == 0) continue;
    any_pivot = true;
    const mpz_class denominator = relation.left * pivot;
    if (denominator == 0) continue;

    mpz_class numerator = 0;
    for (long i = 1; i <= relation.span / 2; ++i) {
      const auto& coeff = relation.inner[static_cast<std::size_t>(i - 1)];
      if (coeff == 0) continue;
      numerator += coeff * signed_known(s + i) * signed_known(target - i);
    }
    mpz_class quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    if (remainder != 0) {
      throw Error(ErrorKind::laurent_violation, "span-" + std::to_string(relation.span) +
                                                    " division leaves a remainder at n = " + std::to_string(target));
    }
    terms_.push_back(std::move(quotient));

    if (cross_check_) {
      for (const auto& other : coefficients_.relations) {
        if (residual(other, target - other.span) != 0) {
          terms_.pop_back();
          throw Error(ErrorKind::relation_failure, "span-" + std::to_string(other.span) +
                                                       " relation fails at n = " + std::to_string(target));
        }
      }
    }
    return;
  }
  if (!any_pivot) {
    throw Error(ErrorKind::all_zero_window,
                "c_" + std::to_string(target - 11) + " .. c_" + std::to_string(target - 8) + " are all zero");
  }
  throw Error(ErrorKind::degenerate_seed, "every applicable relation has a zero left multiplier");
}

void ExactSequence::extend_to(long n) {
  n = std::labs(n);
  if (n > cap_) {
    throw Error(ErrorKind::cap_exceeded,
                "|n| = " + std::to_string(n) + " exceeds the exact-term cap " + std::to_string(cap_));
  }
  while (known_upto() < n) append_next();
}

mpz_class ExactSequence::term(long n) {
  extend_to(n);
  return signed_known(n);
}

mpz_class term_exact(const SequenceSeed& seed, long n, long cap) {
  ExactSequence sequence(seed, cap);
  return sequence.term(n);
}

RelationReport verify_relations_exact(ExactSequence& sequence, IndexRange n_range, IndexRange m_range) {
  RelationReport report;
  const long reach = std::max({std::labs(n_range.lo), std::labs(n_range.hi)}) +
                     std::max({std::labs(m_range.lo), std::labs(m_range.hi)}) + 5;
  sequence.extend_to(reach);
  auto c = [&](long i) { return sequence.term(i); };
  const mpz_class c3 = c(3), c4 = c(4), c5 = c(5);
  const mpz_class c3sq = c3 * c3;

  for (long m = m_range.lo; m <= m_range.hi; ++m) {
    for (long n = n_range.lo; n <= n_range.hi; ++n) {
      mpz_class lhs = c4 * c(n + m) * c(n - m);
      mpz_class rhs = c(m + 1) * c(m - 1) * c(n + 3) * c(n - 3) +
                      (c4 * c(m) * c(m) - c3sq * c(m + 1) * c(m - 1)) * c(n + 2) * c(n - 2) +
                      (c3sq * c(m + 2) * c(m - 2) - c(m + 3) * c(m - 3)) * c(n + 1) * c(n - 1) -
                      c4 * c(m + 2) * c(m - 2) * c(n) * c(n);
      ++report.checked;
      if (lhs != rhs) {
        report.ok = false;
        report.counterexample = RelationCounterexample{"even", m, n, lhs, rhs};
        return report;
      }

      lhs = c3 * c5 * c(n + m + 1) * c(n - m);
      rhs = c3 * c(m + 2) * c(m - 1) * c(n + 4) * c(n - 3) +
            (c5 * c(m + 1) * c(m) - c3 * c4 * c(m + 2) * c(m - 1)) * c(n + 3) * c(n - 2) +
            (c3 * c4 * c(m + 3) * c(m - 2) - c3 * c(m + 4) * c(m - 3)) * c(n + 2) * c(n - 1) -
            c5 * c(m + 3) * c(m - 2) * c(n + 1) * c(n);
      ++report.checked;
      if (lhs != rhs) {
        report.ok = false;
        report.counterexample = RelationCounterexample{"odd", m, n, lhs, rhs};
        return report;
      }
    }
  }
  return report;
}

RelationReport verify_somos_relations(ExactSequence& sequence, IndexRange s_range) {
  RelationReport report;
  sequence.extend_to(std::max(std::labs(s_range.lo), std::labs(s_range.hi)) + 11);
  for (long s = s_range.lo; s <= s_range.hi; ++s) {
    for (const auto& relation : sequence.coefficients().relations) {
      const long k = relation.span;
      mpz_class rhs = 0;
      for (long i = 1; i <= k / 2; ++i) {
        rhs += relation.inner[static_cast<std::size_t>(i - 1)] * sequence.term(s + i) * sequence.term(s + k - i);
      }
      mpz_class lhs = relation.left * sequence.term(s) * sequence.term(s + k);
      ++report.checked;
      if (lhs != rhs) {
        report.ok = false;
        report.counterexample = RelationCounterexample{"span-" + std::to_string(k), k, s, lhs, rhs};
        return report;
      }
    }
  }
  return report;
}

}  // namespace cantorseq
