#pragma once

#include <array>
#include <optional>

#include <gmpxx.h>

#include "cantorseq/curve.hpp"

namespace cantorseq {

// Initial segment c_2..c_9 of c_n = psi_n(x_P), with c_0 = c_1 = 0 and c_{-n} = -c_n.
class SequenceSeed {
 public:
  static constexpr int kLastIndex = 9;

  // c4_to_c9 holds c_4..c_9. With a curve attached, c_3 = 4 F(x_P) and any supplied c3 must
  // agree (Error seed_inconsistent); without one, c3 is required.
  static SequenceSeed from_table(const mpz_class& x, const std::array<mpz_class, 6>& c4_to_c9,
                                 const Curve* curve = nullptr,
                                 const std::optional<mpz_class>& c3 = std::nullopt);

  const mpz_class& x() const noexcept { return x_; }
  // Valid for |n| <= 9.
  mpz_class c(int n) const;
  const mpz_class& c_nonneg(int n) const { return c_.at(static_cast<std::size_t>(n)); }

  // c3 c4 c5 c6 c7 (c4^3 - c3^3 c5), the standing non-degeneracy product.
  mpz_class degeneracy_product() const;
  bool nondegenerate() const { return degeneracy_product() != 0; }
  // c3 c4 c5, the weaker product under which the mod-p recurrence is deterministic.
  mpz_class weak_product() const;

  bool operator==(const SequenceSeed&) const = default;

 private:
  SequenceSeed() = default;

  mpz_class x_;
  std::array<mpz_class, kLastIndex + 1> c_;
};

// One bilinear relation of Somos-k type, k = span:
//   left * c_s c_{s+k} = sum_{i=1}^{floor(k/2)} inner[i-1] * c_{s+i} c_{s+k-i}   for all s.
struct SomosRelation {
  int span = 0;
  mpz_class left;
  std::array<mpz_class, 5> inner;  // zero-padded; inner[0] = 0 for k = 10, 11

  bool operator==(const SomosRelation&) const = default;
};

// The four relations of span 8, 9, 10, 11 derived from the seed.
struct SomosCoefficients {
  std::array<SomosRelation, 4> relations;

  static SomosCoefficients from_seed(const SequenceSeed& seed);

  const SomosRelation& span(int k) const { return relations.at(static_cast<std::size_t>(k - 8)); }
  bool operator==(const SomosCoefficients&) const = default;
};

}  // namespace cantorseq
