#pragma once

// Reference computations for the tests, independent of the library.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace cantorseq::oracle {

inline std::uint64_t mod(const mpz_class& a, std::uint64_t p) {
  mpz_class r = a % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e != 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Somos-k coefficients written out from c3..c9: left * c_s c_{s+k} = sum_i K_i c_{s+i} c_{s+k-i}.
struct Relation {
  int k;
  mpz_class left;
  std::vector<mpz_class> inner;  // K_1 .. K_{floor(k/2)}
};

inline std::array<Relation, 4> relations(const std::array<mpz_class, 10>& c) {
  const mpz_class &c3 = c[3], &c4 = c[4], &c5 = c[5], &c6 = c[6], &c7 = c[7], &c8 = c[8], &c9 = c[9];
  return {{
      {8, c4, {c3 * c5, c4 * c4 * c4 - c3 * c3 * c3 * c5, c3 * c3 * c6, -c4 * c6}},
      {9, c3 * c5, {c3 * c3 * c6, c4 * (c5 * c5 - c3 * c3 * c6), c3 * c4 * c7, -c5 * c7}},
      {10, c4, {0, c4 * c6, c4 * (c5 * c5 - c3 * c3 * c6), c3 * c3 * c3 * c7 - c8, -c3 * c4 * c7}},
      {11, c3 * c5, {0, c3 * c4 * c7, c5 * c5 * c6 - c3 * c4 * c4 * c7, c3 * (c3 * c4 * c8 - c9), -c3 * c5 * c8}},
  }};
}

// Exact c_0 .. c_n from Somos-8 alone, dividing by c4 c_{n-8}; requires those to be nonzero.
inline std::vector<mpz_class> exact_terms(const std::array<mpz_class, 10>& c, int n) {
  const Relation s8 = relations(c)[0];
  std::vector<mpz_class> t(c.begin(), c.end());
  auto at = [&](long i) -> mpz_class { return i >= 0 ? t[static_cast<std::size_t>(i)] : mpz_class(-t[static_cast<std::size_t>(-i)]); };
  for (long target = 10; target <= n; ++target) {
    const long s = target - 8;
    mpz_class rhs = 0;
    for (int i = 1; i <= 4; ++i) rhs += s8.inner[static_cast<std::size_t>(i - 1)] * at(s + i) * at(s + 8 - i);
    const mpz_class denominator = s8.left * at(s);
    if (denominator == 0 || rhs % denominator != 0) throw std::runtime_error("oracle: Somos-8 division fails");
    t.push_back(rhs / denominator);
  }
  return t;
}

// c_0 .. c_n mod p by stepping forward with the first usable relation (k = 8, 9, 10, 11).
inline std::vector<std::uint64_t> scan(const std::array<mpz_class, 10>& c, std::uint64_t p, long n) {
  const auto rel = relations(c);
  std::array<std::uint64_t, 4> left{};
  std::array<std::vector<std::uint64_t>, 4> inner;
  for (std::size_t j = 0; j < 4; ++j) {
    left[j] = mod(rel[j].left, p);
    for (const auto& k : rel[j].inner) inner[j].push_back(mod(k, p));
  }
  std::vector<std::uint64_t> t;
  for (const auto& v : c) t.push_back(mod(v, p));
  auto at = [&](long i) -> std::uint64_t {
    if (i >= 0) return t[static_cast<std::size_t>(i)];
    const std::uint64_t v = t[static_cast<std::size_t>(-i)];
    return v == 0 ? 0 : p - v;
  };
  for (long target = 10; target <= n; ++target) {
    bool done = false;
    for (std::size_t j = 0; j < 4 && !done; ++j) {
      const int k = rel[j].k;
      const long s = target - k;
      const std::uint64_t d = left[j] * at(s) % p;
      if (d == 0) continue;
      std::uint64_t rhs = 0;
      for (int i = 1; i <= k / 2; ++i) {
        rhs = (rhs + inner[j][static_cast<std::size_t>(i - 1)] * (at(s + i) * at(s + k - i) % p)) % p;
      }
      t.push_back(rhs * inverse(d, p) % p);
      done = true;
    }
    if (!done) throw std::runtime_error("oracle: no usable relation");
  }
  return t;
}

// Least period of a sequence known to be purely periodic, judged on the given prefix.
inline std::optional<std::size_t> prefix_period(const std::vector<std::uint64_t>& a, std::size_t min_checks) {
  for (std::size_t s = 1; s + min_checks <= a.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i + s < a.size() && ok; ++i) ok = a[i] == a[i + s];
    if (ok) return s;
  }
  return std::nullopt;
}

// F(x) mod p for F = x^5 + a[4] x^4 + ... + a[0].
inline std::uint64_t eval_f(const std::array<std::uint64_t, 5>& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 1;
  for (int i = 4; i >= 0; --i) r = (r * x + a[static_cast<std::size_t>(i)]) % p;
  return r;
}

// |C(F_p)| with Euler's criterion.
inline std::uint64_t point_count(const std::array<std::uint64_t, 5>& a, std::uint64_t p) {
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t f = eval_f(a, x, p);
    if (f == 0) {
      n += 1;
    } else if (powmod(f, (p - 1) / 2, p) == 1) {
      n += 2;
    }
  }
  return n;
}

// |Jac(C)(F_p)| as the number of reduced pairs (u, v): u monic of degree <= 2, deg v < deg u,
// u | v^2 - F. Cost p^4; keep p small.
inline std::uint64_t jacobian_order_by_enumeration(const std::array<std::uint64_t, 5>& a, std::uint64_t p) {
  std::uint64_t count = 1;  // u = 1
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t f = eval_f(a, x, p);
    for (std::uint64_t y = 0; y < p; ++y) count += (y * y % p == f) ? 1 : 0;
  }
  // u = X^2 + u1 X + u0. Reduce X^k mod u to (alpha X + beta) and test that v^2 - F vanishes.
  for (std::uint64_t u1 = 0; u1 < p; ++u1) {
    for (std::uint64_t u0 = 0; u0 < p; ++u0) {
      // X^k mod u for k = 0..5 as pairs (coefficient of X, constant).
      std::array<std::pair<std::uint64_t, std::uint64_t>, 6> xp{};
      xp[0] = {0, 1};
      xp[1] = {1, 0};
      for (std::size_t k = 2; k < 6; ++k) {
        const auto [h, l] = xp[k - 1];
        // X (h X + l) = h X^2 + l X = h (-u1 X - u0) + l X
        xp[k] = {(l + p - h * u1 % p) % p, (p - h * u0 % p) % p};
      }
      std::uint64_t f1 = 0, f0 = 0;
      for (std::size_t k = 0; k < 6; ++k) {
        const std::uint64_t coeff = k == 5 ? 1 : a[k];
        f1 = (f1 + coeff * xp[k].first) % p;
        f0 = (f0 + coeff * xp[k].second) % p;
      }
      for (std::uint64_t v1 = 0; v1 < p; ++v1) {
        for (std::uint64_t v0 = 0; v0 < p; ++v0) {
          // (v1 X + v0)^2 = v1^2 X^2 + 2 v1 v0 X + v0^2
          const std::uint64_t s = v1 * v1 % p;
          const std::uint64_t q1 = (2 * v1 * v0 % p + p - s * u1 % p) % p;
          const std::uint64_t q0 = (v0 * v0 % p + p - s * u0 % p) % p;
          if (q1 == f1 && q0 == f0) ++count;
        }
      }
    }
  }
  return count;
}

inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = a % p;
  for (std::uint64_t k = 1; k < p; ++k) {
    if (x == 1) return k;
    x = x * a % p;
  }
  throw std::runtime_error("oracle: zero has no order");
}

inline std::uint64_t least_d(std::uint64_t alpha, std::uint64_t beta, std::uint64_t p) {
  for (std::uint64_t d = 1;; ++d) {
    if (powmod(alpha, d, p) == 1 && powmod(beta, d * d, p) == 1) return d;
  }
}

}  // namespace cantorseq::oracle
