#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cantorseq/factor.hpp"
#include "cantorseq/presets.hpp"
#include "cantorseq/screen.hpp"

namespace cantorseq::testing {

inline const Preset& preset() {
  static const Preset p = preset_a058231();
  return p;
}

inline std::array<mpz_class, 10> seed_terms(const SequenceSeed& seed) {
  std::array<mpz_class, 10> c;
  for (int n = 0; n <= 9; ++n) c[static_cast<std::size_t>(n)] = seed.c_nonneg(n);
  return c;
}

// F mod p as low-first coefficients a0..a4.
inline std::array<std::uint64_t, 5> reduced_coefficients(const Curve& curve, std::uint64_t p) {
  std::array<std::uint64_t, 5> a{};
  for (int i = 0; i < 5; ++i) {
    mpz_class r = curve.coefficient(i) % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    a[static_cast<std::size_t>(i)] = r.get_ui();
  }
  return a;
}

inline std::vector<std::uint64_t> good_primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(bound - 1)) {
    if (screen_prime(preset().curve, preset().seed, p).good()) out.push_back(p);
  }
  return out;
}

}  // namespace cantorseq::testing
