#include <random>

#include "doctest.h"

#include "cantorseq/error.hpp"
#include "cantorseq/exact_sequence.hpp"
#include "cantorseq/modular_sequence.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "table_data.hpp"

using namespace cantorseq;
using cantorseq::testing::good_primes_below;
using cantorseq::testing::preset;
using cantorseq::testing::seed_terms;

namespace {

const char* const kC10 = "6452140445339288271043778576384";  // OEIS A058231, next term after c_9
const char* const kC11 = "-30464666973776461531165746768673505280";

SequenceSeed corrupted_seed(long delta) {
  std::array<mpz_class, 6> c;
  for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = preset().seed.c(i + 4);
  c[1] += delta;
  return SequenceSeed::from_table(0, c, &preset().curve);
}

std::uint64_t residue(const mpz_class& v, std::uint64_t p) { return oracle::mod(v, p); }

}  // namespace

TEST_CASE("seed construction") {
  const SequenceSeed& seed = preset().seed;
  CHECK(seed.c(3) == 36);
  CHECK(seed.c(2) == 1);
  CHECK(seed.c(0) == 0);
  CHECK(seed.c(-5) == -5041728);
  CHECK(seed.nondegenerate());

  std::array<mpz_class, 6> c;
  for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = seed.c(i + 4);
  CHECK_THROWS_AS(SequenceSeed::from_table(0, c, &preset().curve, mpz_class(35)), Error);
  try {
    SequenceSeed::from_table(0, c, &preset().curve, mpz_class(35));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::seed_inconsistent);
  }
  CHECK(SequenceSeed::from_table(0, c, &preset().curve, mpz_class(36)) == seed);
  CHECK(SequenceSeed::from_table(0, c, nullptr, mpz_class(36)) == seed);
}

TEST_CASE("Somos coefficients match the printed span-8 relation") {
  const SomosCoefficients k = SomosCoefficients::from_seed(preset().seed);
  const SomosRelation& s8 = k.span(8);
  CHECK(s8.left == -16);
  CHECK(s8.inner[0] == mpz_class("181502208"));
  CHECK(s8.inner[1] == mpz_class("-235226865664"));
  CHECK(s8.inner[2] == mpz_class("-25442230947840"));
  CHECK(s8.inner[3] == mpz_class("-314101616640"));
  CHECK(SomosCoefficients::from_seed(preset().seed) == k);

  const auto ref = oracle::relations(seed_terms(preset().seed));
  for (int j = 0; j < 4; ++j) {
    const SomosRelation& r = k.span(8 + j);
    CHECK(r.left == ref[static_cast<std::size_t>(j)].left);
    for (std::size_t i = 0; i < ref[static_cast<std::size_t>(j)].inner.size(); ++i) {
      CHECK(r.inner[i] == ref[static_cast<std::size_t>(j)].inner[i]);
    }
  }
}

TEST_CASE("exact terms") {
  ExactSequence seq(preset().seed);
  for (int n = 0; n <= 9; ++n) CHECK(seq.term(n) == mpz_class(testdata::kInitialTerms[static_cast<std::size_t>(n)]));
  CHECK(seq.term(9) == mpz_class("-1213280369793911777918976"));
  CHECK(seq.term(-4) == 16);
  CHECK(seq.term(10) == mpz_class(kC10));
  CHECK(seq.term(11) == mpz_class(kC11));
  CHECK(term_exact(preset().seed, -9) == mpz_class("1213280369793911777918976"));

  const auto oracle_terms = oracle::exact_terms(seed_terms(preset().seed), 120);
  for (int n = 0; n <= 120; ++n) CHECK(seq.term(n) == oracle_terms[static_cast<std::size_t>(n)]);
}

TEST_CASE("oddness and the cap") {
  ExactSequence seq(preset().seed);
  for (long n = 0; n <= 200; ++n) CHECK(seq.term(-n) == -seq.term(n));
  CHECK_THROWS_AS(seq.term(301), Error);
  ExactSequence small(preset().seed, 40);
  CHECK_THROWS_AS(small.extend_to(41), Error);
}

TEST_CASE("the four span relations hold for -50 <= s <= 50") {
  ExactSequence seq(preset().seed);
  const RelationReport report = verify_somos_relations(seq, {-50, 50});
  CHECK(report.ok);
  CHECK(report.checked == 4 * 101);

  // The span-8 relation with the printed integers, evaluated independently.
  for (long s = -50; s <= 50; ++s) {
    const mpz_class v = mpz_class(-16) * seq.term(s) * seq.term(s + 8) -
                        mpz_class("181502208") * seq.term(s + 1) * seq.term(s + 7) +
                        mpz_class("235226865664") * seq.term(s + 2) * seq.term(s + 6) +
                        mpz_class("25442230947840") * seq.term(s + 3) * seq.term(s + 5) +
                        mpz_class("314101616640") * seq.term(s + 4) * seq.term(s + 4);
    CHECK(v == 0);
  }
}

TEST_CASE("the general two-index identities hold for |m|, |n| <= 20") {
  ExactSequence seq(preset().seed);
  const RelationReport report = verify_relations_exact(seq, {-20, 20}, {-20, 20});
  CHECK(report.ok);
  CHECK(report.checked == 2 * 41 * 41);
  CHECK_FALSE(report.counterexample.has_value());
}

TEST_CASE("corrupted seeds are caught") {
  for (long delta : {-1L, 1L}) {
    bool caught = false;
    try {
      ExactSequence seq(corrupted_seed(delta));
      seq.extend_to(29);
    } catch (const Error& e) {
      caught = e.kind() == ErrorKind::laurent_violation || e.kind() == ErrorKind::relation_failure;
    }
    CHECK(caught);

    bool laurent = false;
    try {
      ExactSequence seq(corrupted_seed(delta), kDefaultExactCap, false);
      seq.extend_to(29);
    } catch (const Error& e) {
      laurent = e.kind() == ErrorKind::laurent_violation;
    }
    CHECK(laurent);
  }
}

TEST_CASE("window_init") {
  const Window w = window_init(preset().seed, 13, 8);
  CHECK(w.base() == 0);
  CHECK(w.values().size() == 17);
  CHECK(w.at(0) == 0);
  CHECK(w.at(2) == 1);
  for (int n = -8; n <= 8; ++n) CHECK(w.at(n) == residue(preset().seed.c(n), 13));
  CHECK_THROWS_AS(w.at(9), Error);

  ExactSequence seq(preset().seed);
  const Window wide = window_init(seq, 13, 20);
  for (int n = -20; n <= 20; ++n) CHECK(wide.at(n) == residue(seq.term(n), 13));
}

TEST_CASE("step is invertible and wraps after (p-1) r steps") {
  const std::uint64_t p = 13;
  const ModularRecurrence rec(SomosCoefficients::from_seed(preset().seed), p);
  const Window origin = window_init(preset().seed, p, 8);
  Window w = origin;
  for (int i = 0; i < 50; ++i) {
    const Window right = step(w, rec, Direction::right);
    CHECK(step(right, rec, Direction::left) == w);
    w = right;
  }
  w = origin;
  for (std::uint64_t i = 0; i < (p - 1) * 127; ++i) w = step(w, rec, Direction::right);
  CHECK(w.same_values(origin));
  CHECK(w.base() == static_cast<std::int64_t>((p - 1) * 127));

  // Left from the origin agrees with oddness.
  Window left = origin;
  for (int i = 0; i < 30; ++i) left = step(left, rec, Direction::left);
  const auto forward = oracle::scan(seed_terms(preset().seed), p, 40);
  for (int n = -38; n <= -22; ++n) CHECK(left.at(n) == (forward[static_cast<std::size_t>(-n)] == 0 ? 0 : p - forward[static_cast<std::size_t>(-n)]));
}

TEST_CASE("term_mod_p") {
  const SequenceSeed& seed = preset().seed;
  CHECK(term_mod_p(seed, 7, 6) == 0);
  CHECK(term_mod_p(seed, 13, 127) == 0);
  for (long n = 1; n < 60; ++n) {
    const std::uint64_t a = term_mod_p(seed, 13, n);
    CHECK(term_mod_p(seed, 13, -n) == (a == 0 ? 0 : 13 - a));
  }
}

TEST_CASE("reduction of exact terms matches term_mod_p for good p < 100") {
  ExactSequence seq(preset().seed);
  for (auto p : good_primes_below(100)) {
    const ModularSequence ms(preset().seed, p);
    for (long n = -200; n <= 200; ++n) {
      const std::uint64_t expected = residue(seq.term(n), p);
      CHECK(ms.term(n) == expected);
      if (n % 17 == 0) CHECK(term_mod_p(preset().seed, p, n) == expected);
    }
  }
}

TEST_CASE("the recurrence sticks at p = 3 and runs at weak-good primes") {
  const ModularRecurrence rec(SomosCoefficients::from_seed(preset().seed), 3);
  ModularScanner scanner(preset().seed, rec);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 100; ++i) scanner.advance();
      }(),
      Error);
  CHECK(term_mod_p(preset().seed, 7, 1000) == oracle::scan(seed_terms(preset().seed), 7, 1000).back());
}

TEST_CASE("jump windows agree with a linear scan") {
  const SequenceSeed& seed = preset().seed;
  std::mt19937_64 rng(99);
  const std::vector<std::uint64_t> primes = {11, 13, 17, 19, 23, 31, 37, 43, 53, 397};
  for (auto p : primes) {
    const auto scan = oracle::scan(seed_terms(seed), p, 100'008);
    const ModularSequence ms(seed, p);
    REQUIRE(ms.can_jump());
    for (int i = 0; i < 20; ++i) {
      const auto n = static_cast<std::int64_t>(8 + rng() % 100'000);
      const Window w = ms.jump(n);
      for (std::int64_t k = n - 8; k <= n + 8; ++k) CHECK(w.at(k) == scan[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("jump at 0, at the period, and at negative indices") {
  const SequenceSeed& seed = preset().seed;
  const ModularSequence ms(seed, 13);
  CHECK(ms.jump(0) == window_init(seed, 13, 8));
  const Window back = ms.jump(-1000);
  const Window fwd = ms.jump(1000);
  for (int k = -8; k <= 8; ++k) {
    const std::uint64_t v = fwd.at(1000 - k);
    CHECK(back.at(-1000 + k) == (v == 0 ? 0 : 13 - v));
  }

  const ModularSequence m397(seed, 397);
  const Window at_period = m397.jump(1362834);
  CHECK(at_period.base() == 1362834);
  CHECK(at_period.same_values(window_init(seed, 397, 8)));

  CHECK_THROWS_AS(ModularSequence(seed, 3).jump(100), Error);
}

TEST_CASE("find_triple_zero") {
  const SequenceSeed& seed = preset().seed;
  CHECK(find_triple_zero(seed, 7) == 7);
  CHECK(find_triple_zero(seed, 11) == 56);
  CHECK(find_triple_zero(seed, 31) == 997);
  CHECK(find_triple_zero(seed, 13) == 127);
  CHECK_THROWS_AS(find_triple_zero(seed, 13, 100), Error);
}

TEST_CASE("no four consecutive zeros over a full period, good p < 400") {
  const SequenceSeed& seed = preset().seed;
  const SomosCoefficients k = SomosCoefficients::from_seed(seed);
  for (auto p : good_primes_below(400)) {
    const ModularRecurrence rec(k, p);
    ModularScanner scanner(seed, rec);
    const std::vector<std::uint64_t> start(scanner.tail().begin(), scanner.tail().end());
    int run = 0;
    bool four = false;
    std::uint64_t steps = 0;
    for (;;) {
      const std::uint64_t v = scanner.advance();
      ++steps;
      run = v == 0 ? run + 1 : 0;
      four = four || run >= 4;
      if (std::equal(start.begin(), start.end(), scanner.tail().begin())) break;
    }
    CHECK_MESSAGE(!four, "p = " << p);
    CHECK(steps > 0);
  }
}
