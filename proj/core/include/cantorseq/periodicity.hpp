#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantorseq/curve.hpp"
#include "cantorseq/exact_sequence.hpp"
#include "cantorseq/modular_sequence.hpp"
#include "cantorseq/screen.hpp"
#include "cantorseq/seed.hpp"

namespace cantorseq {

enum class Check {
  hasse_weil,
  order_cross_check,
  alpha_r_beta_sq,
  translation_identity,
  divisibility_chain,
  period_cross_check,
  theta_equivalence,
  d_cross_check,
};

inline constexpr std::array<Check, 8> kAllChecks = {
    Check::hasse_weil,         Check::order_cross_check,  Check::alpha_r_beta_sq,   Check::translation_identity,
    Check::divisibility_chain, Check::period_cross_check, Check::theta_equivalence, Check::d_cross_check,
};

std::string_view to_string(Check check) noexcept;

enum class PeriodMethod {
  none,
  certified,        // d * r, confirmed by jump-window equality and minimality
  recurrence_scan,  // window repeat found by stepping the mod-p recurrence
  exact_scan,       // window repeat found among exact terms reduced mod p
};

std::string_view to_string(PeriodMethod method) noexcept;

// Per-prime record. Optional fields stay empty where a quantity is undefined for that prime.
struct PeriodReport {
  std::uint64_t p = 0;
  ScreenResult screen;
  std::optional<std::uint64_t> jac_order;
  std::optional<std::uint64_t> r;  // ord_p(D_P)
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> beta;
  std::optional<std::uint64_t> d;
  std::optional<std::uint64_t> period;
  std::optional<std::uint64_t> ratio;
  std::optional<std::uint64_t> preperiod;
  PeriodMethod method = PeriodMethod::none;
  std::array<std::optional<bool>, kAllChecks.size()> checks{};
  std::vector<std::string> notes;

  std::optional<bool> check(Check c) const { return checks[static_cast<std::size_t>(c)]; }
  void set(Check c, bool value) { checks[static_cast<std::size_t>(c)] = value; }
  std::vector<Check> failed_checks() const;
  bool all_checks_pass() const { return failed_checks().empty(); }
};

struct AnalyzeOptions {
  std::uint64_t brute_cap = 0;  // 0: (p - 1) * ceil((1 + sqrt p)^4)
  long exact_cap = kDefaultExactCap;
  // Theta equivalence is walked for 3 <= n <= 2r when 2r stays within this limit.
  std::uint64_t theta_limit = 400'000;
  int translation_random_samples = 50;
};

struct AlphaBeta {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
};

// alpha = c_{r+3} / (c3 c_{r+2}), beta = c3^2 c_{r+2}^3 / c_{r+3}^2 mod p.
// Throws hypothesis_violated when c3, c_{r+2} or c_{r+3} vanishes mod p.
AlphaBeta alpha_beta(const ModularSequence& sequence, std::uint64_t r);
AlphaBeta alpha_beta(const SequenceSeed& seed, std::uint64_t p, std::uint64_t r);

// Least d >= 1 with alpha^d = beta^(d^2) = 1, from the orders a, b of alpha, beta:
// d = prod q^max(v_q(a), ceil(v_q(b) / 2)).
std::uint64_t least_d(std::uint64_t alpha, std::uint64_t beta, std::uint64_t p);
// Same by trying d = 1, 2, ...
std::uint64_t least_d_brute(std::uint64_t alpha, std::uint64_t beta, std::uint64_t p);

struct BrutePeriod {
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
  PeriodMethod method = PeriodMethod::none;
};

std::uint64_t default_brute_cap(std::uint64_t p);

// Smallest s such that the 11-wide window of residues repeats after s steps. Steps the mod-p
// recurrence; if it sticks, falls back to exact terms up to exact_cap. Throws cap_exceeded.
BrutePeriod brute_period(const SequenceSeed& seed, std::uint64_t p, std::uint64_t cap = 0,
                         long exact_cap = kDefaultExactCap);

// Full per-prime analysis. Throws not_prime; everything else is recorded in the report.
PeriodReport analyze(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed, std::uint64_t p,
                     const AnalyzeOptions& options = {});

// Reports in ascending prime order, computed on `jobs` worker threads. With stop_on_failure,
// the result ends at the first good prime whose checks fail.
std::vector<PeriodReport> analyze_primes(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed,
                                         std::span<const std::uint64_t> primes, const AnalyzeOptions& options = {},
                                         unsigned jobs = 1, bool stop_on_failure = false);

// The p = 3 case of the reference curve: ord | Per holds but Per | (p - 1) ord does not.
struct ChainCounterexample {
  std::uint64_t p = 0;
  std::uint64_t jac_order = 0;
  std::uint64_t order = 0;
  std::uint64_t period = 0;
  std::uint64_t ratio = 0;
  bool order_divides_period = false;
  bool period_divides_bound = false;  // Per | (p - 1) ord
  bool excluded = false;
};

ChainCounterexample negative_example_p3(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed);

struct DStatistics {
  struct Entry {
    std::uint64_t p = 0;
    std::uint64_t d = 0;
    PrimeStatus status = PrimeStatus::good;
  };
  std::vector<Entry> entries;                    // every prime whose report carries d
  std::array<std::uint64_t, 10> histogram{};     // d / (p - 1) in (0, 0.1], ..., (0.9, 1]
  std::vector<std::uint64_t> d_equals_one;       // Per = ord
  std::vector<std::uint64_t> d_equals_p_minus_1; // Per = (p - 1) ord
  std::size_t good_primes = 0;
  bool all_divide_p_minus_1 = true;
};

DStatistics d_statistics(std::span<const PeriodReport> reports);
DStatistics d_statistics(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed,
                         std::uint64_t prime_bound, const AnalyzeOptions& options = {}, unsigned jobs = 1);

}  // namespace cantorseq
