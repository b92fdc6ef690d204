#include "cantorseq/screen.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cantorseq/error.hpp"
#include "cantorseq/factor.hpp"

namespace cantorseq {
namespace {

std::vector<std::pair<std::string, mpz_class>> named_quantities(const Curve& curve, const SequenceSeed& seed) {
  const mpz_class c3 = seed.c(3), c4 = seed.c(4), c5 = seed.c(5);
  return {
      {"disc", curve.discriminant()},
      {"c3", c3},
      {"c4", c4},
      {"c5", c5},
      {"c6", seed.c(6)},
      {"c7", seed.c(7)},
      {"c4^3-c3^3*c5", c4 * c4 * c4 - c3 * c3 * c3 * c5},
  };
}

}  // namespace

std::string_view to_string(PrimeStatus status) noexcept {
  switch (status) {
    case PrimeStatus::good: return "good";
    case PrimeStatus::excluded: return "excluded";
    case PrimeStatus::bad_reduction: return "bad-reduction";
    case PrimeStatus::char_two: return "char-two";
  }
  return "unknown";
}

std::string_view to_string(ScreenReason reason) noexcept {
  switch (reason) {
    case ScreenReason::divides_disc: return "divides-disc";
    case ScreenReason::divides_c_product: return "divides-c-product";
    case ScreenReason::divides_weak_product: return "divides-weak-product";
    case ScreenReason::p_equals_2: return "p-equals-2";
  }
  return "unknown";
}

ScreenResult screen_prime(const Curve& curve, const SequenceSeed& seed, std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
  ScreenResult result;
  result.p = p;

  const auto pz = static_cast<unsigned long>(p);
  bool in_disc = false, in_product = false, in_weak = false;
  for (const auto& [name, value] : named_quantities(curve, seed)) {
    if (!mpz_divisible_ui_p(value.get_mpz_t(), pz)) continue;
    result.divides.push_back(name);
    if (name == "disc") {
      in_disc = true;
    } else {
      in_product = true;
      if (name == "c3" || name == "c4" || name == "c5") in_weak = true;
    }
  }

  if (p == 2) result.reasons.push_back(ScreenReason::p_equals_2);
  if (in_disc) result.reasons.push_back(ScreenReason::divides_disc);
  if (in_product) result.reasons.push_back(ScreenReason::divides_c_product);
  if (in_weak) result.reasons.push_back(ScreenReason::divides_weak_product);

  if (p == 2) {
    result.status = PrimeStatus::char_two;
  } else if (in_disc) {
    result.status = PrimeStatus::bad_reduction;
  } else if (in_product) {
    result.status = PrimeStatus::excluded;
  } else {
    result.status = PrimeStatus::good;
  }
  result.weak_hypothesis = p != 2 && !in_disc && !in_weak;
  return result;
}

std::vector<ExcludedPrime> excluded_primes_detailed(const Curve& curve, const SequenceSeed& seed) {
  if (!seed.nondegenerate()) {
    throw Error(ErrorKind::degenerate_seed, "c3 c4 c5 c6 c7 (c4^3 - c3^3 c5) = 0");
  }
  std::map<mpz_class, std::vector<std::string>> sources;
  sources[2].push_back("char-two");
  for (const auto& [name, value] : named_quantities(curve, seed)) {
    for (const auto& pp : factorize(value).factors) {
      auto& tags = sources[pp.prime];
      if (std::find(tags.begin(), tags.end(), name) == tags.end()) tags.push_back(name);
    }
  }
  std::vector<ExcludedPrime> out;
  out.reserve(sources.size());
  for (auto& [prime, tags] : sources) out.push_back({prime, std::move(tags)});
  return out;
}

std::vector<mpz_class> excluded_primes(const Curve& curve, const SequenceSeed& seed) {
  std::vector<mpz_class> out;
  for (const auto& e : excluded_primes_detailed(curve, seed)) out.push_back(e.prime);
  return out;
}

}  // namespace cantorseq
