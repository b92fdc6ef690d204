#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cantorseq/curve.hpp"
#include "cantorseq/seed.hpp"

namespace cantorseq {

enum class PrimeStatus { good, excluded, bad_reduction, char_two };

enum class ScreenReason { divides_disc, divides_c_product, divides_weak_product, p_equals_2 };

std::string_view to_string(PrimeStatus status) noexcept;
std::string_view to_string(ScreenReason reason) noexcept;

struct ScreenResult {
  std::uint64_t p = 0;
  PrimeStatus status = PrimeStatus::good;
  std::vector<ScreenReason> reasons;
  // Which named quantities p divides: "disc", "c3", ..., "c7", "c4^3-c3^3*c5".
  std::vector<std::string> divides;
  // p odd and p does not divide disc(F) * c3 c4 c5.
  bool weak_hypothesis = false;

  bool good() const noexcept { return status == PrimeStatus::good; }
  bool good_reduction() const noexcept {
    return status != PrimeStatus::char_two && status != PrimeStatus::bad_reduction;
  }
};

// Throws Error(not_prime) for composite p.
ScreenResult screen_prime(const Curve& curve, const SequenceSeed& seed, std::uint64_t p);

struct ExcludedPrime {
  mpz_class prime;
  std::vector<std::string> sources;  // "char-two", "disc", "c3", ...
};

// {2} together with the odd prime divisors of disc(F) and of c3 c4 c5 c6 c7 (c4^3 - c3^3 c5).
// Throws Error(degenerate_seed) when that product vanishes.
std::vector<ExcludedPrime> excluded_primes_detailed(const Curve& curve, const SequenceSeed& seed);
std::vector<mpz_class> excluded_primes(const Curve& curve, const SequenceSeed& seed);

}  // namespace cantorseq
