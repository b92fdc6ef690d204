#include "cantorseq/polynomial.hpp"

#include <algorithm>

#include "cantorseq/error.hpp"

namespace cantorseq {

FpPoly::FpPoly(PrimeField field, std::vector<std::uint64_t> coefficients)
    : field_(field), c_(std::move(coefficients)) {
  for (auto& c : c_) c %= field_.modulus();
  trim();
}

FpPoly::FpPoly(PrimeField field, std::initializer_list<std::uint64_t> coefficients)
    : FpPoly(field, std::vector<std::uint64_t>(coefficients)) {}

FpPoly FpPoly::linear_root(PrimeField field, std::uint64_t a) { return FpPoly(field, {field.neg(a % field.modulus()), 1}); }

void FpPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const noexcept {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

FpPoly FpPoly::scaled(std::uint64_t k) const {
  FpPoly out = *this;
  for (auto& c : out.c_) c = field_.mul(c, k);
  out.trim();
  return out;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FpPoly FpPoly::operator-() const {
  FpPoly out = *this;
  for (auto& c : out.c_) c = field_.neg(c);
  return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  const auto& f = a.field_;
  FpPoly out(f);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = f.add(a.coefficient(i), b.coefficient(i));
  out.trim();
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  const auto& f = a.field_;
  FpPoly out(f);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = f.sub(a.coefficient(i), b.coefficient(i));
  out.trim();
  return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  const auto& f = a.field_;
  FpPoly out(f);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] = f.add(out.c_[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "polynomial division by zero");
  const auto& f = a.field_;
  FpPoly quotient(f);
  FpPoly remainder = a;
  if (a.degree() < b.degree()) return {quotient, remainder};

  const std::uint64_t inv_lead = f.inv(b.leading());
  const int db = b.degree();
  quotient.c_.assign(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int d = remainder.degree(); d >= db; --d) {
    const std::uint64_t coeff = f.mul(remainder.c_[static_cast<std::size_t>(d)], inv_lead);
    quotient.c_[static_cast<std::size_t>(d - db)] = coeff;
    if (coeff == 0) continue;
    for (int i = 0; i <= db; ++i) {
      auto& slot = remainder.c_[static_cast<std::size_t>(d - db + i)];
      slot = f.sub(slot, f.mul(coeff, b.c_[static_cast<std::size_t>(i)]));
    }
  }
  remainder.c_.resize(static_cast<std::size_t>(db));
  remainder.trim();
  quotient.trim();
  return {quotient, remainder};
}

std::tuple<FpPoly, FpPoly, FpPoly> xgcd(const FpPoly& a, const FpPoly& b) {
  const PrimeField& f = a.field();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(f, 1), s1(f);
  FpPoly t0(f), t1 = FpPoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t inv = f.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace cantorseq
