#include "cantorseq/seed.hpp"

#include <cstdlib>

#include "cantorseq/error.hpp"

namespace cantorseq {

SequenceSeed SequenceSeed::from_table(const mpz_class& x, const std::array<mpz_class, 6>& c4_to_c9,
                                      const Curve* curve, const std::optional<mpz_class>& c3) {
  SequenceSeed seed;
  seed.x_ = x;
  seed.c_[0] = 0;
  seed.c_[1] = 0;
  seed.c_[2] = 1;
  if (curve != nullptr) {
    mpz_class expected = 4 * eval_F(*curve, x);
    if (c3 && *c3 != expected) {
      throw Error(ErrorKind::seed_inconsistent,
                  "c3 = " + c3->get_str() + " but 4 F(x_P) = " + expected.get_str());
    }
    seed.c_[3] = expected;
  } else {
    if (!c3) throw Error(ErrorKind::invalid_argument, "c3 must be supplied when no curve is attached");
    seed.c_[3] = *c3;
  }
  for (std::size_t i = 0; i < c4_to_c9.size(); ++i) seed.c_[4 + i] = c4_to_c9[i];
  return seed;
}

mpz_class SequenceSeed::c(int n) const {
  if (std::abs(n) > kLastIndex) {
    throw Error(ErrorKind::invalid_argument, "seed only covers |n| <= 9, asked for " + std::to_string(n));
  }
  return n >= 0 ? c_[static_cast<std::size_t>(n)] : mpz_class(-c_[static_cast<std::size_t>(-n)]);
}

mpz_class SequenceSeed::degeneracy_product() const {
  const auto& c3 = c_[3];
  const auto& c4 = c_[4];
  const auto& c5 = c_[5];
  mpz_class tail = c4 * c4 * c4 - c3 * c3 * c3 * c5;
  return c3 * c4 * c5 * c_[6] * c_[7] * tail;
}

mpz_class SequenceSeed::weak_product() const { return c_[3] * c_[4] * c_[5]; }

SomosCoefficients SomosCoefficients::from_seed(const SequenceSeed& seed) {
  const mpz_class c3 = seed.c(3), c4 = seed.c(4), c5 = seed.c(5), c6 = seed.c(6);
  const mpz_class c7 = seed.c(7), c8 = seed.c(8), c9 = seed.c(9);
  const mpz_class c3sq = c3 * c3;

  SomosCoefficients out;
  out.relations[0] = {8, c4, {c3 * c5, c4 * c4 * c4 - c3sq * c3 * c5, c3sq * c6, -c4 * c6, 0}};
  out.relations[1] = {9, c3 * c5, {c3sq * c6, c4 * (c5 * c5 - c3sq * c6), c3 * c4 * c7, -c5 * c7, 0}};
  out.relations[2] = {10, c4, {0, c4 * c6, c4 * (c5 * c5 - c3sq * c6), c3sq * c3 * c7 - c8, -c3 * c4 * c7}};
  out.relations[3] = {11, c3 * c5,
                      {0, c3 * c4 * c7, c5 * c5 * c6 - c3 * c4 * c4 * c7, c3 * (c3 * c4 * c8 - c9), -c3 * c5 * c8}};
  return out;
}

}  // namespace cantorseq
