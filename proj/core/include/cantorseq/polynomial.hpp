#pragma once

#include <cstdint>
#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "cantorseq/modular.hpp"

namespace cantorseq {

// Dense univariate polynomial over F_p, coefficients low degree first, no trailing zeros.
class FpPoly {
 public:
  explicit FpPoly(PrimeField field) : field_(field) {}
  FpPoly(PrimeField field, std::vector<std::uint64_t> coefficients);
  FpPoly(PrimeField field, std::initializer_list<std::uint64_t> coefficients);

  static FpPoly constant(PrimeField field, std::uint64_t c) { return FpPoly(field, {c}); }
  // X - a
  static FpPoly linear_root(PrimeField field, std::uint64_t a);

  const PrimeField& field() const noexcept { return field_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint64_t coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }

  std::uint64_t eval(std::uint64_t x) const noexcept;
  FpPoly monic() const;
  FpPoly scaled(std::uint64_t k) const;

  FpPoly operator-() const;
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

  // Throws invalid_argument on a zero divisor.
  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

  bool operator==(const FpPoly& other) const noexcept { return field_ == other.field_ && c_ == other.c_; }

 private:
  void trim() noexcept;

  PrimeField field_;
  std::vector<std::uint64_t> c_;
};

// (g, s, t) with s a + t b = g and g monic (zero only when a = b = 0).
std::tuple<FpPoly, FpPoly, FpPoly> xgcd(const FpPoly& a, const FpPoly& b);

}  // namespace cantorseq
