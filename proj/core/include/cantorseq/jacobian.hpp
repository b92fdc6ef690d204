#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "cantorseq/curve.hpp"
#include "cantorseq/modular.hpp"
#include "cantorseq/polynomial.hpp"

namespace cantorseq {

// Point counting enumerates F_{p^2}; larger primes are refused.
inline constexpr std::uint64_t kMaxCountingPrime = 5000;

// Y^2 = F(X) over F_p with good reduction.
class CurveModP {
 public:
  // Throws char_two for p = 2, not_prime, bad_reduction when p | disc(F).
  static CurveModP reduce(const Curve& curve, std::uint64_t p);

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t prime() const noexcept { return field_.modulus(); }
  const FpPoly& f() const noexcept { return f_; }
  std::uint64_t eval(std::uint64_t x) const noexcept { return f_.eval(x); }

 private:
  CurveModP(PrimeField field, FpPoly f) : field_(field), f_(std::move(f)) {}

  PrimeField field_;
  FpPoly f_;
};

// F_{p^2} = F_p[t] / (t^2 - nu), nu the least quadratic non-residue.
struct Fp2Element {
  std::uint64_t re = 0;
  std::uint64_t im = 0;
  bool operator==(const Fp2Element&) const = default;
};

class Fp2Field {
 public:
  explicit Fp2Field(PrimeField base);

  const PrimeField& base() const noexcept { return base_; }
  std::uint64_t non_residue() const noexcept { return nu_; }

  Fp2Element add(Fp2Element a, Fp2Element b) const noexcept;
  Fp2Element mul(Fp2Element a, Fp2Element b) const noexcept;
  std::uint64_t norm(Fp2Element a) const noexcept;
  // Quadratic character of F_{p^2}: the Legendre symbol of the norm.
  int character(Fp2Element a) const noexcept;

 private:
  PrimeField base_;
  std::uint64_t nu_;
};

// Reduced divisor class (u, v): u monic, deg u <= 2, deg v < deg u, u | v^2 - F.
struct MumfordDivisor {
  FpPoly u;
  FpPoly v;

  bool is_identity() const noexcept { return u.degree() == 0; }
  bool operator==(const MumfordDivisor&) const = default;
};

// Image of the curve in the Jacobian, identity included: deg u <= 1.
inline bool in_theta(const MumfordDivisor& d) noexcept { return d.u.degree() <= 1; }

// Group law on Jac(C)(F_p) by composition and reduction.
class Jacobian {
 public:
  explicit Jacobian(CurveModP curve);

  const CurveModP& curve() const noexcept { return curve_; }
  const PrimeField& field() const noexcept { return curve_.field(); }

  MumfordDivisor identity() const;
  // [Q] - [infinity] for an affine point Q = (x, y); throws invalid_argument off the curve.
  MumfordDivisor point(std::uint64_t x, std::uint64_t y) const;
  // D_P reduced mod p.
  MumfordDivisor embed(const IntegralPoint& point) const;

  MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
  MumfordDivisor neg(const MumfordDivisor& d) const;
  MumfordDivisor scalar_mul(std::int64_t n, const MumfordDivisor& d) const;

  bool is_reduced(const MumfordDivisor& d) const;

  // Sum of two or three uniformly drawn affine F_p-points.
  MumfordDivisor random_element(std::mt19937_64& rng) const;

 private:
  MumfordDivisor reduce(FpPoly u, FpPoly v) const;

  CurveModP curve_;
};

// |C(F_p)| and |C(F_{p^2})|, the point at infinity included.
std::uint64_t count_points(const CurveModP& curve);
std::uint64_t count_points_ext(const CurveModP& curve);

struct GroupOrderInfo {
  std::uint64_t p = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t order = 0;  // |Jac(C)(F_p)|
};

// L(1) for L(T) = 1 + a1 T + a2 T^2 + p a1 T^3 + p^2 T^4 recovered from N1 and N2.
GroupOrderInfo jacobian_order(const CurveModP& curve);
GroupOrderInfo jacobian_order(const Curve& curve, std::uint64_t p);

// Exact order from the group order; throws inconsistent_order if info.order does not annihilate d.
std::uint64_t order_of(const Jacobian& jacobian, const MumfordDivisor& d, const GroupOrderInfo& info);

}  // namespace cantorseq
