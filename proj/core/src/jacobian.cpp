#include "cantorseq/jacobian.hpp"

#include <string>
#include <vector>

#include "cantorseq/error.hpp"
#include "cantorseq/factor.hpp"

namespace cantorseq {

CurveModP CurveModP::reduce(const Curve& curve, std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::char_two, "characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
  if (mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), static_cast<unsigned long>(p))) {
    throw Error(ErrorKind::bad_reduction, std::to_string(p) + " divides disc(F) = " + curve.discriminant().get_str());
  }
  PrimeField field(p);
  std::vector<std::uint64_t> coeffs;
  for (int i = 0; i < 5; ++i) coeffs.push_back(field.reduce(curve.coefficient(i)));
  coeffs.push_back(1);
  return CurveModP(field, FpPoly(field, std::move(coeffs)));
}

Fp2Field::Fp2Field(PrimeField base) : base_(base), nu_(base.least_non_residue()) {}

Fp2Element Fp2Field::add(Fp2Element a, Fp2Element b) const noexcept {
  return {base_.add(a.re, b.re), base_.add(a.im, b.im)};
}

Fp2Element Fp2Field::mul(Fp2Element a, Fp2Element b) const noexcept {
  const std::uint64_t re = base_.add(base_.mul(a.re, b.re), base_.mul(nu_, base_.mul(a.im, b.im)));
  const std::uint64_t im = base_.add(base_.mul(a.re, b.im), base_.mul(a.im, b.re));
  return {re, im};
}

std::uint64_t Fp2Field::norm(Fp2Element a) const noexcept {
  return base_.sub(base_.mul(a.re, a.re), base_.mul(nu_, base_.mul(a.im, a.im)));
}

int Fp2Field::character(Fp2Element a) const noexcept { return base_.legendre(norm(a)); }

Jacobian::Jacobian(CurveModP curve) : curve_(std::move(curve)) {}

MumfordDivisor Jacobian::identity() const {
  return {FpPoly::constant(field(), 1), FpPoly(field())};
}

MumfordDivisor Jacobian::point(std::uint64_t x, std::uint64_t y) const {
  const auto& f = field();
  x %= f.modulus();
  y %= f.modulus();
  if (f.mul(y, y) != curve_.eval(x)) {
    throw Error(ErrorKind::invalid_argument,
                "(" + std::to_string(x) + ", " + std::to_string(y) + ") is not on the curve mod " +
                    std::to_string(f.modulus()));
  }
  return {FpPoly::linear_root(f, x), FpPoly::constant(f, y)};
}

MumfordDivisor Jacobian::embed(const IntegralPoint& point) const {
  return this->point(field().reduce(point.x), field().reduce(point.y));
}

MumfordDivisor Jacobian::neg(const MumfordDivisor& d) const { return {d.u, -d.v}; }

MumfordDivisor Jacobian::reduce(FpPoly u, FpPoly v) const {
  const FpPoly& f = curve_.f();
  while (u.degree() > 2) {
    auto [next_u, remainder] = divmod(f - v * v, u);
    if (!remainder.is_zero()) throw Error(ErrorKind::invalid_argument, "u does not divide F - v^2");
    u = next_u.monic();
    v = (-v) % u;
  }
  u = u.monic();
  v = v % u;
  return {std::move(u), std::move(v)};
}

MumfordDivisor Jacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;

  auto [d1, e1, e2] = xgcd(a.u, b.u);
  auto [d, c1, c2] = xgcd(d1, a.v + b.v);
  const FpPoly s1 = c1 * e1;
  const FpPoly s2 = c1 * e2;
  const FpPoly& s3 = c2;

  FpPoly u = (a.u * b.u) / (d * d);
  auto [v, rem] = divmod(s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + curve_.f()), d);
  if (!rem.is_zero()) throw Error(ErrorKind::invalid_argument, "composition: inexact division by gcd");
  v = v % u;
  return reduce(std::move(u), std::move(v));
}

MumfordDivisor Jacobian::scalar_mul(std::int64_t n, const MumfordDivisor& d) const {
  if (n < 0) return scalar_mul(-n, neg(d));
  MumfordDivisor result = identity();
  MumfordDivisor base = d;
  auto k = static_cast<std::uint64_t>(n);
  while (k != 0) {
    if (k & 1U) result = add(result, base);
    k >>= 1U;
    if (k != 0) base = add(base, base);
  }
  return result;
}

bool Jacobian::is_reduced(const MumfordDivisor& d) const {
  if (d.u.degree() < 0 || d.u.degree() > 2 || d.u.leading() != 1) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  return ((d.v * d.v - curve_.f()) % d.u).is_zero();
}

MumfordDivisor Jacobian::random_element(std::mt19937_64& rng) const {
  const auto& f = field();
  std::uniform_int_distribution<std::uint64_t> pick(0, f.modulus() - 1);
  auto random_point = [&] {
    for (;;) {
      const std::uint64_t x = pick(rng);
      if (auto y = f.sqrt(curve_.eval(x))) {
        return point(x, (rng() & 1U) ? *y : f.neg(*y));
      }
    }
  };
  MumfordDivisor d = add(random_point(), random_point());
  if (rng() & 1U) d = add(d, random_point());
  return d;
}

std::uint64_t count_points(const CurveModP& curve) {
  const std::uint64_t p = curve.prime();
  if (p > kMaxCountingPrime) {
    throw Error(ErrorKind::invalid_argument, "point counting is capped at p <= " + std::to_string(kMaxCountingPrime));
  }
  std::int64_t total = 1;
  for (std::uint64_t x = 0; x < p; ++x) total += 1 + curve.field().legendre(curve.eval(x));
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_points_ext(const CurveModP& curve) {
  const std::uint64_t p = curve.prime();
  if (p > kMaxCountingPrime) {
    throw Error(ErrorKind::invalid_argument, "point counting is capped at p <= " + std::to_string(kMaxCountingPrime));
  }
  const PrimeField& base = curve.field();
  const Fp2Field ext(base);
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t a = 1; a < p; ++a) chi[base.mul(a, a)] = 1;

  std::array<std::uint64_t, 6> coeffs{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = curve.f().coefficient(i);

  std::int64_t total = 1;
  for (std::uint64_t re = 0; re < p; ++re) {
    for (std::uint64_t im = 0; im < p; ++im) {
      const Fp2Element x{re, im};
      Fp2Element acc{1, 0};
      for (int i = 4; i >= 0; --i) acc = ext.add(ext.mul(acc, x), {coeffs[static_cast<std::size_t>(i)], 0});
      total += 1 + chi[ext.norm(acc)];
    }
  }
  return static_cast<std::uint64_t>(total);
}

GroupOrderInfo jacobian_order(const CurveModP& curve) {
  GroupOrderInfo info;
  info.p = curve.prime();
  info.n1 = count_points(curve);
  info.n2 = count_points_ext(curve);
  const auto p = static_cast<std::int64_t>(info.p);
  const std::int64_t t1 = p + 1 - static_cast<std::int64_t>(info.n1);
  const std::int64_t t2 = p * p + 1 - static_cast<std::int64_t>(info.n2);
  const std::int64_t twice_a2 = t1 * t1 - t2;
  if (twice_a2 % 2 != 0) {
    throw Error(ErrorKind::hypothesis_violated, "t1^2 - t2 is odd; point counts are inconsistent");
  }
  const std::int64_t order = 1 - t1 + twice_a2 / 2 - p * t1 + p * p;
  info.order = static_cast<std::uint64_t>(order);
  return info;
}

GroupOrderInfo jacobian_order(const Curve& curve, std::uint64_t p) {
  return jacobian_order(CurveModP::reduce(curve, p));
}

std::uint64_t order_of(const Jacobian& jacobian, const MumfordDivisor& d, const GroupOrderInfo& info) {
  if (!jacobian.scalar_mul(static_cast<std::int64_t>(info.order), d).is_identity()) {
    throw Error(ErrorKind::inconsistent_order, "|Jac| = " + std::to_string(info.order) + " does not annihilate the divisor");
  }
  return element_order(info.order, factorize_u64(info.order), [&](std::uint64_t e) {
    return jacobian.scalar_mul(static_cast<std::int64_t>(e), d).is_identity();
  });
}

}  // namespace cantorseq
