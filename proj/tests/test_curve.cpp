#include <random>

#include "doctest.h"

#include "cantorseq/curve.hpp"
#include "cantorseq/error.hpp"
#include "cantorseq/factor.hpp"
#include "cantorseq/screen.hpp"
#include "support.hpp"
#include "table_data.hpp"

using namespace cantorseq;
using cantorseq::testing::preset;

namespace {

MonicQuintic from_roots(const std::array<long, 5>& r) {
  // prod (X - r_i), high coefficients by repeated multiplication.
  std::array<mpz_class, 6> c{};
  c[0] = 1;
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<mpz_class, 6> next{};
    for (std::size_t k = 0; k <= i; ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * r[i];
    }
    c = next;
  }
  return MonicQuintic::from_high(c[4], c[3], c[2], c[1], c[0]);
}

int expect_error(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
    return 1;
  }
  FAIL("no error thrown");
  return 0;
}

}  // namespace

TEST_CASE("F evaluates exactly at integer points") {
  const Curve& c = preset().curve;
  CHECK(eval_F(c, 0) == 9);
  CHECK(eval_F(c, 1) == 5);
  CHECK(eval_F(c, -2) == -32 - 48 + 4 + 9);
  CHECK(c.to_string() == "-3,0,0,-2,9");
}

TEST_CASE("point validation") {
  const Curve& c = preset().curve;
  CHECK(validate_point(c, {0, 3}));
  CHECK(validate_point(c, {0, -3}));
  CHECK_FALSE(validate_point(c, {0, 2}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const IntegralPoint q{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 2001) - 1000};
    CHECK(validate_point(c, q) == validate_point(c, q.conjugate()));
  }
}

TEST_CASE("discriminant of the reference quintic") {
  CHECK(preset().curve.discriminant() == mpz_class(testdata::kDiscriminant));
  const Factorization f = factorize(preset().curve.discriminant());
  CHECK(f.sign == -1);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{5, 2});
  CHECK(f.factors[1] == PrimePower{29, 1});
  CHECK(f.factors[2] == PrimePower{49711, 1});
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  CHECK(discriminant(MonicQuintic::from_high(0, 0, 0, 0, 0)) == 0);
  expect_error(ErrorKind::invalid_argument, [] { Curve(MonicQuintic::from_high(0, 0, 0, 0, 0)); });

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<long, 5> r{};
    for (auto& x : r) x = static_cast<long>(rng() % 21) - 10;
    if (trial % 2 == 0) r[4] = r[1];
    mpz_class expected = 1;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) expected *= mpz_class(r[i] - r[j]) * (r[i] - r[j]);
    }
    CHECK(discriminant(from_roots(r)) == expected);
  }
}

TEST_CASE("factorize") {
  const Factorization f = factorize(mpz_class("314101616640"));
  const std::vector<PrimePower> expected = {{2, 12}, {3, 1}, {5, 1}, {7, 1}, {41, 1}, {47, 1}, {379, 1}};
  CHECK(f.sign == 1);
  CHECK(f.factors == expected);
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(-1).sign == -1);
  expect_error(ErrorKind::invalid_argument, [] { factorize(0); });

  // c4 * c6 from the listed factorizations.
  CHECK(mpz_class(-16) * mpz_class(-19631351040) == mpz_class("314101616640"));
}

TEST_CASE("factorize recomposes random integers below 10^12") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    long n = static_cast<long>(rng() % 1'000'000'000'000ULL) + 1;
    if (i % 2 == 1) n = -n;
    const Factorization f = factorize(n);
    CHECK(f.value() == n);
    mpz_class previous = 1;
    for (const auto& pp : f.factors) {
      CHECK(mpz_probab_prime_p(pp.prime.get_mpz_t(), 30) != 0);
      CHECK(pp.prime > previous);
      previous = pp.prime;
    }
  }
}

TEST_CASE("factorize handles products of two large primes") {
  const mpz_class a("1000000007"), b("998244353"), c("4294967311");
  const Factorization f = factorize(a * b * c * c);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{b, 1});
  CHECK(f.factors[1] == PrimePower{a, 1});
  CHECK(f.factors[2] == PrimePower{c, 2});
}

TEST_CASE("is_prime_u64 agrees with a sieve and known hard cases") {
  const auto primes = primes_up_to(100000);
  std::vector<bool> flag(100001, false);
  for (auto p : primes) flag[p] = true;
  for (std::uint64_t n = 0; n <= 100000; ++n) CHECK(is_prime_u64(n) == flag[n]);
  CHECK(is_prime_u64((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(is_prime_u64(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime_u64(3825123056546413051ULL));  // strong pseudoprime to the first nine primes
  CHECK(is_prime_u64(18446744073709551557ULL));
}

TEST_CASE("screen_prime statuses") {
  const auto& [name, curve, point, seed] = preset();
  CHECK(screen_prime(curve, seed, 13).status == PrimeStatus::good);
  CHECK(screen_prime(curve, seed, 13).reasons.empty());

  const ScreenResult s7 = screen_prime(curve, seed, 7);
  CHECK(s7.status == PrimeStatus::excluded);
  CHECK(std::find(s7.divides.begin(), s7.divides.end(), "c6") != s7.divides.end());
  CHECK(std::find(s7.divides.begin(), s7.divides.end(), "c7") != s7.divides.end());
  CHECK(s7.weak_hypothesis);

  const ScreenResult s29 = screen_prime(curve, seed, 29);
  CHECK(s29.status == PrimeStatus::bad_reduction);
  CHECK_FALSE(s29.weak_hypothesis);

  CHECK(screen_prime(curve, seed, 2).status == PrimeStatus::char_two);
  CHECK_FALSE(screen_prime(curve, seed, 3).weak_hypothesis);
  expect_error(ErrorKind::not_prime, [&] { screen_prime(curve, seed, 15); });
}

TEST_CASE("good primes divide none of the screened quantities") {
  const auto& [name, curve, point, seed] = preset();
  const mpz_class product = seed.degeneracy_product();
  for (auto p : primes_up_to(3000)) {
    const ScreenResult s = screen_prime(curve, seed, p);
    CHECK(s.good() == s.reasons.empty());
    if (!s.good()) continue;
    CHECK(p != 2);
    CHECK(mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), p) == 0);
    CHECK(mpz_divisible_ui_p(product.get_mpz_t(), p) == 0);
  }
}

TEST_CASE("excluded primes of the reference data") {
  const auto& [name, curve, point, seed] = preset();
  const auto primes = excluded_primes(curve, seed);
  REQUIRE(primes.size() == testdata::kExcludedPrimes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) CHECK(primes[i] == testdata::kExcludedPrimes[i]);

  const mpz_class c3 = seed.c(3), c4 = seed.c(4), c5 = seed.c(5);
  CHECK(c4 * c4 * c4 - c3 * c3 * c3 * c5 == mpz_class(-8192) * 7 * 509 * 8059);
  const Factorization f3 = factorize(c3);
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].prime == 2);
  CHECK(f3.factors[1].prime == 3);

  for (const auto& e : excluded_primes_detailed(curve, seed)) {
    if (e.prime == 8753) CHECK(e.sources == std::vector<std::string>{"c5"});
    if (e.prime == 2) CHECK(e.sources.front() == "char-two");
  }
}

TEST_CASE("degenerate seeds are rejected by excluded_primes") {
  const Curve& curve = preset().curve;
  std::array<mpz_class, 6> c{mpz_class(-16), 0, 1, 1, 1, 1};
  const SequenceSeed seed = SequenceSeed::from_table(0, c, &curve);
  CHECK_FALSE(seed.nondegenerate());
  expect_error(ErrorKind::degenerate_seed, [&] { excluded_primes(curve, seed); });
}
