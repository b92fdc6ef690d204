#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace cantorseq {

// Arithmetic in F_p for an odd prime p < 2^32; residues are canonical values in [0, p).
// Primality is the caller's responsibility.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t a) const noexcept;
  std::uint64_t reduce(const mpz_class& a) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % p_; }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const noexcept;
  // Throws Error(invalid_argument) on zero.
  std::uint64_t inv(std::uint64_t a) const;

  // Legendre symbol: 0, 1 or -1.
  int legendre(std::uint64_t a) const noexcept;
  // Tonelli-Shanks; nullopt for non-residues.
  std::optional<std::uint64_t> sqrt(std::uint64_t a) const;
  // Least positive quadratic non-residue.
  std::uint64_t least_non_residue() const noexcept;
  // Multiplicative order of a nonzero residue (factors p - 1).
  std::uint64_t order(std::uint64_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace cantorseq
