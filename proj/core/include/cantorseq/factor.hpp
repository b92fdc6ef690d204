#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cantorseq {

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// n = sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  mpz_class value() const;
};

using SmallFactorization = std::vector<std::pair<std::uint64_t, unsigned>>;

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n) noexcept;
// Exact below 2^64, GMP probable-prime test (30 rounds) above.
bool is_prime(const mpz_class& n);

// Trial division to 10^6, then Pollard-Brent rho. Throws Error(invalid_argument) on 0.
Factorization factorize(const mpz_class& n);
SmallFactorization factorize_u64(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Exact order of a group element given a multiple `group_order` of it and that multiple's
// factorization; annihilates(e) must report whether e * element is the identity.
template <class Annihilates>
std::uint64_t element_order(std::uint64_t group_order, const SmallFactorization& factors,
                            Annihilates&& annihilates) {
  std::uint64_t order = group_order;
  for (const auto& [q, e] : factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (order % q == 0 && annihilates(order / q)) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace cantorseq
