#include "cantorseq/periodicity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "cantorseq/error.hpp"
#include "cantorseq/factor.hpp"
#include "cantorseq/jacobian.hpp"

namespace cantorseq {
namespace {

using State = std::array<std::uint64_t, kRecurrenceWidth>;

std::uint64_t exponent_mod(std::int64_t e, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p - 1);
  std::int64_t r = e % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

// Brent's cycle detection on 11-wide windows; used when the start window never recurs.
BrutePeriod brent(const ModularRecurrence& recurrence, const State& start, std::uint64_t budget) {
  auto advance = [&](State& s) {
    const std::uint64_t next = recurrence.next(s);
    std::copy(s.begin() + 1, s.end(), s.begin());
    s.back() = next;
  };
  std::uint64_t steps = 0;
  auto charge = [&] {
    if (++steps > budget) throw Error(ErrorKind::cap_exceeded, "no repeating window within the brute cap");
  };

  std::uint64_t power = 1, lambda = 1;
  State tortoise = start, hare = start;
  advance(hare);
  charge();
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    advance(hare);
    charge();
    ++lambda;
  }
  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < lambda; ++i) advance(hare);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    advance(tortoise);
    advance(hare);
    ++mu;
  }
  return {lambda, mu, PeriodMethod::recurrence_scan};
}

BrutePeriod exact_period(const SequenceSeed& seed, std::uint64_t p, long exact_cap) {
  ExactSequence sequence(seed, exact_cap);
  const PrimeField field(p);
  std::vector<std::uint64_t> a;
  for (long n = 0; n <= exact_cap; ++n) a.push_back(field.reduce(sequence.term(n)));
  const std::size_t len = a.size();
  for (std::size_t mu = 0; mu + kRecurrenceWidth < len; ++mu) {
    for (std::size_t lambda = 1; mu + lambda + kRecurrenceWidth <= len; ++lambda) {
      bool repeats = true;
      for (std::size_t n = mu; n + lambda < len; ++n) {
        if (a[n + lambda] != a[n]) {
          repeats = false;
          break;
        }
      }
      if (repeats) return {lambda, mu, PeriodMethod::exact_scan};
    }
  }
  throw Error(ErrorKind::cap_exceeded,
              "no repeating window among exact terms up to " + std::to_string(exact_cap) + " mod " + std::to_string(p));
}

// Window equality at `period`, and inequality at period / q for each prime q | ratio.
bool certify_period(const ModularSequence& sequence, std::uint64_t period, std::uint64_t ratio) {
  if (!sequence.jump(static_cast<std::int64_t>(period)).same_values(sequence.origin())) return false;
  if (ratio <= 1) return true;
  for (const auto& [q, e] : factorize_u64(ratio)) {
    (void)e;
    if (sequence.jump(static_cast<std::int64_t>(period / q)).same_values(sequence.origin())) return false;
  }
  return true;
}

bool translation_identity_holds(const ModularSequence& sequence, std::uint64_t r, AlphaBeta ab, int random_samples,
                                std::uint64_t p) {
  const PrimeField& f = sequence.field();
  const auto rr = static_cast<std::int64_t>(r);
  auto holds = [&](std::int64_t k, std::int64_t n) {
    const std::uint64_t lhs = sequence.term(k * rr + n);
    const std::uint64_t scale =
        f.mul(f.pow(ab.alpha, exponent_mod(k * n, p)), f.pow(ab.beta, exponent_mod(k * k, p)));
    return lhs == f.mul(scale, sequence.term(n));
  };
  for (std::int64_t k = -2; k <= 3; ++k) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      if (!holds(k, n)) return false;
    }
  }
  std::mt19937_64 rng(p);
  std::uniform_int_distribution<std::int64_t> pick_k(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> pick_n(-1'000'000, 1'000'000);
  for (int i = 0; i < random_samples; ++i) {
    const std::int64_t k = pick_k(rng);
    const std::int64_t n = pick_n(rng);
    if (!holds(k, n)) return false;
  }
  return true;
}

// Walks n D_P and c_n together for 3 <= n <= 2r.
bool theta_equivalence_holds(const Jacobian& jacobian, const MumfordDivisor& base, const SequenceSeed& seed,
                             const ModularRecurrence& recurrence, std::uint64_t r) {
  ModularScanner scanner(seed, recurrence);
  const PrimeField& f = recurrence.field();
  std::vector<std::uint64_t> head;
  for (int n = 0; n <= SequenceSeed::kLastIndex; ++n) head.push_back(f.reduce(seed.c(n)));

  MumfordDivisor multiple = base;
  for (std::uint64_t n = 2; n <= 2 * r; ++n) {
    multiple = jacobian.add(multiple, base);
    if (n < 3) continue;
    std::uint64_t c_n = 0;
    if (n <= static_cast<std::uint64_t>(SequenceSeed::kLastIndex)) {
      c_n = head[n];
    } else {
      while (scanner.index() < static_cast<std::int64_t>(n)) scanner.advance();
      c_n = scanner.newest();
    }
    if (in_theta(multiple) != (c_n == 0)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Check check) noexcept {
  switch (check) {
    case Check::hasse_weil: return "hasse-weil";
    case Check::order_cross_check: return "order-cross-check";
    case Check::alpha_r_beta_sq: return "alpha-r-beta-sq";
    case Check::translation_identity: return "translation-identity";
    case Check::divisibility_chain: return "divisibility-chain";
    case Check::period_cross_check: return "period-cross-check";
    case Check::theta_equivalence: return "theta-equivalence";
    case Check::d_cross_check: return "d-cross-check";
  }
  return "unknown";
}

std::string_view to_string(PeriodMethod method) noexcept {
  switch (method) {
    case PeriodMethod::none: return "none";
    case PeriodMethod::certified: return "certified";
    case PeriodMethod::recurrence_scan: return "recurrence-scan";
    case PeriodMethod::exact_scan: return "exact-scan";
  }
  return "unknown";
}

std::vector<Check> PeriodReport::failed_checks() const {
  std::vector<Check> failed;
  for (Check c : kAllChecks) {
    if (auto v = check(c); v && !*v) failed.push_back(c);
  }
  return failed;
}

AlphaBeta alpha_beta(const ModularSequence& sequence, std::uint64_t r) {
  const PrimeField& f = sequence.field();
  const std::uint64_t c3 = sequence.origin().at(3);
  const Window w = sequence.jump(static_cast<std::int64_t>(r));
  const std::uint64_t c_r2 = w.at(static_cast<std::int64_t>(r) + 2);
  const std::uint64_t c_r3 = w.at(static_cast<std::int64_t>(r) + 3);
  if (c3 == 0 || c_r2 == 0 || c_r3 == 0) {
    throw Error(ErrorKind::hypothesis_violated, "c3, c_{r+2} or c_{r+3} vanishes mod " + std::to_string(f.modulus()));
  }
  AlphaBeta ab;
  ab.alpha = f.mul(c_r3, f.inv(f.mul(c3, c_r2)));
  ab.beta = f.mul(f.mul(f.mul(c3, c3), f.pow(c_r2, 3)), f.inv(f.mul(c_r3, c_r3)));
  return ab;
}

AlphaBeta alpha_beta(const SequenceSeed& seed, std::uint64_t p, std::uint64_t r) {
  return alpha_beta(ModularSequence(seed, p), r);
}

std::uint64_t least_d(std::uint64_t alpha, std::uint64_t beta, std::uint64_t p) {
  const PrimeField f(p);
  const std::uint64_t a = f.order(alpha);
  const std::uint64_t b = f.order(beta);
  std::uint64_t d = 1;
  for (const auto& [q, e] : factorize_u64(p - 1)) {
    (void)e;
    unsigned va = 0, vb = 0;
    for (std::uint64_t t = a; t % q == 0; t /= q) ++va;
    for (std::uint64_t t = b; t % q == 0; t /= q) ++vb;
    const unsigned v = std::max(va, (vb + 1) / 2);
    for (unsigned i = 0; i < v; ++i) d *= q;
  }
  return d;
}

std::uint64_t least_d_brute(std::uint64_t alpha, std::uint64_t beta, std::uint64_t p) {
  const PrimeField f(p);
  for (std::uint64_t d = 1;; ++d) {
    if (f.pow(alpha, d) == 1 && f.pow(beta, (d * d) % (p - 1)) == 1) return d;
  }
}

std::uint64_t default_brute_cap(std::uint64_t p) { return (p - 1) * hasse_weil_bound(p); }

BrutePeriod brute_period(const SequenceSeed& seed, std::uint64_t p, std::uint64_t cap, long exact_cap) {
  if (cap == 0) cap = default_brute_cap(p);
  ModularRecurrence recurrence(SomosCoefficients::from_seed(seed), p);
  ModularScanner scanner(seed, recurrence);
  State start;
  std::copy(scanner.tail().begin(), scanner.tail().end(), start.begin());
  try {
    // The start window holds c_{-1} .. c_9; a repeat ending at index k has period k - 9.
    for (std::uint64_t s = 1; s <= cap; ++s) {
      scanner.advance();
      const auto tail = scanner.tail();
      if (tail[0] == start[0] && std::equal(tail.begin(), tail.end(), start.begin())) {
        return {s, 0, PeriodMethod::recurrence_scan};
      }
    }
    return brent(recurrence, start, 2 * cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::stuck_window) throw;
  }
  BrutePeriod result = exact_period(seed, p, exact_cap);
  if (result.period > cap) throw Error(ErrorKind::cap_exceeded, "exact-scan period exceeds the brute cap");
  return result;
}

PeriodReport analyze(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed, std::uint64_t p,
                     const AnalyzeOptions& options) {
  PeriodReport report;
  report.p = p;
  report.screen = screen_prime(curve, seed, p);
  if (p == 2) {
    report.notes.push_back("characteristic 2 is outside the model");
    return report;
  }
  const ScreenResult& screen = report.screen;
  const bool good = screen.good();

  std::optional<Jacobian> jacobian;
  std::optional<MumfordDivisor> base;
  if (screen.good_reduction()) {
    jacobian.emplace(CurveModP::reduce(curve, p));
    base = jacobian->embed(point);
    if (p <= kMaxCountingPrime) {
      const GroupOrderInfo info = jacobian_order(jacobian->curve());
      report.jac_order = info.order;
      report.r = order_of(*jacobian, *base, info);
      const auto deviation = static_cast<std::int64_t>(info.n1) - static_cast<std::int64_t>(p + 1);
      const bool weil_curve = static_cast<std::uint64_t>(deviation * deviation) <= 16 * p;
      report.set(Check::hasse_weil, weil_curve && info.order <= hasse_weil_bound(p));
    } else {
      report.notes.push_back("p exceeds the point-counting cap; ord taken from the triple-zero scan");
    }
  }

  ModularSequence sequence(seed, p);

  if (screen.weak_hypothesis) {
    try {
      const auto triple = static_cast<std::uint64_t>(find_triple_zero(seed, p));
      if (report.r) {
        report.set(Check::order_cross_check, triple == *report.r);
      } else {
        report.r = triple;
      }
    } catch (const Error& e) {
      report.notes.push_back(std::string("triple-zero scan: ") + e.what());
      if (good) report.set(Check::order_cross_check, false);
    }
  }

  std::optional<AlphaBeta> ab;
  if (report.r && sequence.can_jump()) {
    try {
      ab = alpha_beta(sequence, *report.r);
    } catch (const Error& e) {
      report.notes.push_back(std::string("alpha/beta: ") + e.what());
    }
  }
  if (ab) {
    const PrimeField& f = sequence.field();
    const std::uint64_t r = *report.r;
    report.alpha = ab->alpha;
    report.beta = ab->beta;
    report.d = least_d(ab->alpha, ab->beta, p);
    report.set(Check::d_cross_check, least_d_brute(ab->alpha, ab->beta, p) == *report.d);
    report.set(Check::alpha_r_beta_sq, f.pow(ab->alpha, r) == f.mul(ab->beta, ab->beta));
    report.set(Check::translation_identity,
               translation_identity_holds(sequence, r, *ab, options.translation_random_samples, p));

    // Per = d r when the window repeats at d r and at no d r / q.
    if (screen.weak_hypothesis) {
      const std::uint64_t candidate = *report.d * r;
      const bool certified = certify_period(sequence, candidate, *report.d);
      report.set(Check::period_cross_check, certified);
      if (certified) {
        report.period = candidate;
        report.preperiod = 0;
        report.method = PeriodMethod::certified;
      }
    }
  }

  if (!report.period) {
    try {
      const BrutePeriod brute =
          brute_period(seed, p, options.brute_cap == 0 ? default_brute_cap(p) : options.brute_cap, options.exact_cap);
      report.period = brute.period;
      report.preperiod = brute.preperiod;
      report.method = brute.method;
      if (report.d && report.r) report.set(Check::period_cross_check, brute.period == *report.d * *report.r);
    } catch (const Error& e) {
      report.notes.push_back(std::string("brute period: ") + e.what());
    }
  }

  if (report.r && report.period) {
    const std::uint64_t r = *report.r;
    const std::uint64_t per = *report.period;
    if (per % r == 0) report.ratio = per / r;
    report.set(Check::divisibility_chain, per % r == 0 && ((p - 1) * r) % per == 0);
    if (report.check(Check::hasse_weil).has_value()) {
      const long double bound = static_cast<long double>(p - 1) * std::pow(1.0L + std::sqrt(static_cast<long double>(p)), 4);
      report.set(Check::hasse_weil, *report.check(Check::hasse_weil) && static_cast<long double>(per) <= bound);
    }
  }

  if (jacobian && report.r && screen.weak_hypothesis && 2 * *report.r <= options.theta_limit) {
    try {
      report.set(Check::theta_equivalence,
                 theta_equivalence_holds(*jacobian, *base, seed, sequence.recurrence(), *report.r));
    } catch (const Error& e) {
      report.notes.push_back(std::string("theta walk: ") + e.what());
      report.set(Check::theta_equivalence, false);
    }
  }

  if (!good) report.notes.push_back("screening hypotheses fail at this prime; values are best-effort");
  return report;
}

std::vector<PeriodReport> analyze_primes(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed,
                                         std::span<const std::uint64_t> primes, const AnalyzeOptions& options,
                                         unsigned jobs, bool stop_on_failure) {
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::optional<PeriodReport>> slots(sorted.size());
  std::vector<std::exception_ptr> errors(sorted.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{sorted.size()};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sorted.size()) return;
      if (stop_on_failure && i > first_failure.load()) continue;
      try {
        PeriodReport report = analyze(curve, point, seed, sorted[i], options);
        if (stop_on_failure && report.screen.good() && !report.all_checks_pass()) {
          std::size_t current = first_failure.load();
          while (i < current && !first_failure.compare_exchange_weak(current, i)) {
          }
        }
        slots[i] = std::move(report);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  jobs = std::max(1U, jobs);
  if (jobs == 1 || sorted.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, sorted.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<PeriodReport> out;
  const std::size_t last = stop_on_failure ? std::min(first_failure.load(), sorted.size() - 1) : sorted.size() - 1;
  for (std::size_t i = 0; i < sorted.size() && i <= last; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

ChainCounterexample negative_example_p3(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed) {
  const PeriodReport report = analyze(curve, point, seed, 3);
  ChainCounterexample out;
  out.p = 3;
  out.excluded = !report.screen.good();
  if (!report.jac_order || !report.r || !report.period) {
    throw Error(ErrorKind::hypothesis_violated, "p = 3 analysis did not produce |Jac|, ord and Per");
  }
  out.jac_order = *report.jac_order;
  out.order = *report.r;
  out.period = *report.period;
  out.ratio = report.ratio.value_or(0);
  out.order_divides_period = out.period % out.order == 0;
  out.period_divides_bound = ((out.p - 1) * out.order) % out.period == 0;
  return out;
}

DStatistics d_statistics(std::span<const PeriodReport> reports) {
  DStatistics stats;
  for (const auto& report : reports) {
    if (report.screen.good()) ++stats.good_primes;
    if (!report.d) continue;
    const std::uint64_t p = report.p;
    const std::uint64_t d = *report.d;
    stats.entries.push_back({p, d, report.screen.status});
    if ((p - 1) % d != 0) stats.all_divide_p_minus_1 = false;
    // Bin k holds d / (p - 1) in (k/10, (k+1)/10].
    std::uint64_t bin = (10 * d + (p - 1) - 1) / (p - 1);
    bin = std::clamp<std::uint64_t>(bin, 1, 10) - 1;
    ++stats.histogram[bin];
    if (d == 1) stats.d_equals_one.push_back(p);
    if (d == p - 1) stats.d_equals_p_minus_1.push_back(p);
  }
  return stats;
}

DStatistics d_statistics(const Curve& curve, const IntegralPoint& point, const SequenceSeed& seed,
                         std::uint64_t prime_bound, const AnalyzeOptions& options, unsigned jobs) {
  const auto primes = primes_up_to(prime_bound);
  const auto reports = analyze_primes(curve, point, seed, primes, options, jobs);
  return d_statistics(reports);
}

}  // namespace cantorseq
