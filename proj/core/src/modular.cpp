#include "cantorseq/modular.hpp"

#include "cantorseq/error.hpp"
#include "cantorseq/factor.hpp"

namespace cantorseq {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p > kMaxModulus) {
    throw Error(ErrorKind::invalid_argument,
                "field modulus must be an odd prime below 2^32, got " + std::to_string(p));
  }
}

std::uint64_t PrimeField::reduce(std::int64_t a) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = a % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t PrimeField::reduce(const mpz_class& a) const {
  // mpz_fdiv_ui always yields the non-negative remainder.
  return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p_));
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exponent) const noexcept {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorKind::invalid_argument, "inverse of zero mod " + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

int PrimeField::legendre(std::uint64_t a) const noexcept {
  a %= p_;
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::uint64_t PrimeField::least_non_residue() const noexcept {
  std::uint64_t z = 2;
  while (legendre(z) != -1) ++z;
  return z;
}

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
  a %= p_;
  if (a == 0) return 0;
  if (legendre(a) != 1) return std::nullopt;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);

  std::uint64_t q = p_ - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = least_non_residue();
  unsigned m = s;
  std::uint64_t c = pow(z, q);
  std::uint64_t t = pow(a, q);
  std::uint64_t r = pow(a, (q + 1) / 2);
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::uint64_t PrimeField::order(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorKind::invalid_argument, "order of zero is undefined");
  return element_order(p_ - 1, factorize_u64(p_ - 1),
                       [&](std::uint64_t e) { return pow(a, e) == 1; });
}

}  // namespace cantorseq
