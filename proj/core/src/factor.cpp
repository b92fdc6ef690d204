#include "cantorseq/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cantorseq/error.hpp"

namespace cantorseq {
namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;
constexpr std::uint64_t kWordTrialBound = 1'000;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialBound);
  return primes;
}

// Pollard-Brent; n odd composite.
std::uint64_t rho_u64(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    for (std::uint64_t r = 1; g == 1; r <<= 1U) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(std::uint64_t n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[mpz_class(static_cast<unsigned long>(n))];
    return;
  }
  std::uint64_t d = rho_u64(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

mpz_class rho_mpz(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, g = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (g != n) return g;
  }
}

void split_mpz(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    split_u64(n.get_ui(), out);
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = rho_mpz(n);
  split_mpz(d, out);
  split_mpz(n / d, out);
}

}  // namespace

mpz_class Factorization::value() const {
  mpz_class v = sign;
  for (const auto& pp : factors) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    v *= power;
  }
  return v;
}

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

Factorization factorize(const mpz_class& n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "cannot factorize 0");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  mpz_class m = abs(n);

  std::map<mpz_class, unsigned> found;
  for (std::uint64_t p : small_primes()) {
    if (m == 1) break;
    // Word-sized cofactors go straight to Miller-Rabin + rho once the tiny primes are out.
    if (p > kWordTrialBound && m.fits_ulong_p()) break;
    mpz_class pz(static_cast<unsigned long>(p));
    if (pz * pz > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      m /= pz;
      ++found[pz];
    }
  }
  if (m > 1) split_mpz(m, found);
  for (auto& [prime, exponent] : found) result.factors.push_back({prime, exponent});
  return result;
}

SmallFactorization factorize_u64(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "cannot factorize 0");
  SmallFactorization out;
  for (const auto& pp : factorize(mpz_class(static_cast<unsigned long>(n))).factors) {
    out.emplace_back(pp.prime.get_ui(), pp.exponent);
  }
  return out;
}

}  // namespace cantorseq
