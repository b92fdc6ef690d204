#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace cantorseq {

// F(X) = X^5 + a4 X^4 + a3 X^3 + a2 X^2 + a1 X + a0 over the integers.
struct MonicQuintic {
  // coefficients[i] multiplies X^i, i = 0..4; the X^5 coefficient is implicitly 1.
  std::array<mpz_class, 5> coefficients;

  static MonicQuintic from_high(const mpz_class& a4, const mpz_class& a3, const mpz_class& a2,
                                const mpz_class& a1, const mpz_class& a0);

  mpz_class eval(const mpz_class& x) const;
  bool operator==(const MonicQuintic&) const = default;
};

// disc(F) = Res(F, F') for the monic quintic: determinant of the 9x9 Sylvester matrix.
mpz_class discriminant(const MonicQuintic& f);

// Genus-2 model Y^2 = F(X). Construction rejects disc(F) = 0.
class Curve {
 public:
  explicit Curve(MonicQuintic f);

  const MonicQuintic& polynomial() const noexcept { return f_; }
  const mpz_class& coefficient(int i) const { return f_.coefficients.at(static_cast<std::size_t>(i)); }
  const mpz_class& discriminant() const noexcept { return disc_; }

  // "a4,a3,a2,a1,a0", the command-line spelling.
  std::string to_string() const;

  bool operator==(const Curve& other) const { return f_ == other.f_; }

 private:
  MonicQuintic f_;
  mpz_class disc_;
};

struct IntegralPoint {
  mpz_class x;
  mpz_class y;

  IntegralPoint conjugate() const { return {x, -y}; }
  bool operator==(const IntegralPoint&) const = default;
};

mpz_class eval_F(const Curve& curve, const mpz_class& x);
bool validate_point(const Curve& curve, const IntegralPoint& point);

}  // namespace cantorseq
