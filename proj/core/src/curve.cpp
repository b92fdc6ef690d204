#include "cantorseq/curve.hpp"

#include <utility>
#include <vector>

#include "cantorseq/error.hpp"

namespace cantorseq {
namespace {

// Fraction-free Gaussian elimination; exact over the integers.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

MonicQuintic MonicQuintic::from_high(const mpz_class& a4, const mpz_class& a3, const mpz_class& a2,
                                     const mpz_class& a1, const mpz_class& a0) {
  return MonicQuintic{{a0, a1, a2, a3, a4}};
}

mpz_class MonicQuintic::eval(const mpz_class& x) const {
  mpz_class acc = 1;
  for (int i = 4; i >= 0; --i) acc = acc * x + coefficients[static_cast<std::size_t>(i)];
  return acc;
}

mpz_class discriminant(const MonicQuintic& f) {
  // Rows 0..3: shifts of F (degree 5); rows 4..8: shifts of F' (degree 4).
  std::array<mpz_class, 6> fc;  // descending powers
  fc[0] = 1;
  for (int i = 0; i < 5; ++i) fc[static_cast<std::size_t>(i + 1)] = f.coefficients[static_cast<std::size_t>(4 - i)];
  std::array<mpz_class, 5> dc;
  for (int i = 0; i < 5; ++i) dc[static_cast<std::size_t>(i)] = fc[static_cast<std::size_t>(i)] * (5 - i);

  std::vector<std::vector<mpz_class>> sylvester(9, std::vector<mpz_class>(9, 0));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t j = 0; j < fc.size(); ++j) sylvester[r][r + j] = fc[j];
  }
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t j = 0; j < dc.size(); ++j) sylvester[4 + r][r + j] = dc[j];
  }
  // (-1)^{n(n-1)/2} with n = 5 is +1, and the leading coefficient is 1.
  return bareiss_determinant(std::move(sylvester));
}

Curve::Curve(MonicQuintic f) : f_(std::move(f)), disc_(cantorseq::discriminant(f_)) {
  if (disc_ == 0) {
    throw Error(ErrorKind::invalid_argument, "singular model: disc(F) = 0 for F with coefficients " + to_string());
  }
}

std::string Curve::to_string() const {
  std::string out;
  for (int i = 4; i >= 0; --i) {
    out += f_.coefficients[static_cast<std::size_t>(i)].get_str();
    if (i) out += ',';
  }
  return out;
}

mpz_class eval_F(const Curve& curve, const mpz_class& x) { return curve.polynomial().eval(x); }

bool validate_point(const Curve& curve, const IntegralPoint& point) {
  return point.y * point.y == eval_F(curve, point.x);
}

}  // namespace cantorseq
