#include "cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "cantorseq/error.hpp"
#include "cantorseq/factor.hpp"
#include "cantorseq/presets.hpp"

namespace cantorseq::cli {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::parse_error, message); }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<mpz_class> parse_integer(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-") return std::nullopt;
  for (std::size_t i = s.front() == '-' ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
  }
  return mpz_class(s, 10);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<mpz_class> parse_integers(const std::string& text, std::size_t expected, const std::string& flag) {
  const auto parts = split(text, ',');
  if (parts.size() != expected) {
    fail(flag + ": expected " + std::to_string(expected) + " comma-separated integers, got '" + text + "'");
  }
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto v = parse_integer(parts[i]);
    if (!v) fail(flag + ": field " + std::to_string(i + 1) + " is not an integer: '" + trim(parts[i]) + "'");
    out.push_back(*v);
  }
  return out;
}

std::uint64_t checked_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorKind::invalid_argument, "primes must be below 2^32");
  return p;
}

}  // namespace

SeedFile parse_seed_file(std::istream& in, const std::string& name) {
  static const std::array<std::string, 8> keys = {"x", "c3", "c4", "c5", "c6", "c7", "c8", "c9"};
  std::map<std::string, mpz_class> values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string where = name + ":" + std::to_string(number) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(where + "expected key=value");
    const std::string key = trim(body.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(where + "unknown key '" + key + "'");
    if (values.count(key) != 0) fail(where + "duplicate key '" + key + "'");
    auto value = parse_integer(body.substr(eq + 1));
    if (!value) fail(where + "value of '" + key + "' is not a decimal integer");
    values.emplace(key, *value);
  }
  SeedFile seed;
  for (const auto& key : keys) {
    if (key == "c3") continue;
    if (values.count(key) == 0) fail(name + ": missing key '" + key + "'");
  }
  seed.x = values.at("x");
  for (int i = 0; i < 6; ++i) seed.c4_to_c9[static_cast<std::size_t>(i)] = values.at("c" + std::to_string(i + 4));
  if (values.count("c3") != 0) seed.c3 = values.at("c3");
  return seed;
}

SeedFile load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open seed file '" + path + "'");
  return parse_seed_file(in, path);
}

Curve parse_curve(const std::string& text) {
  const auto a = parse_integers(text, 5, "--curve");
  return Curve(MonicQuintic::from_high(a[0], a[1], a[2], a[3], a[4]));
}

IntegralPoint parse_point(const std::string& text) {
  const auto v = parse_integers(text, 2, "--point");
  return {v[0], v[1]};
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> primes;
  for (const auto& part : split(text, ',')) {
    auto v = parse_integer(part);
    if (!v || *v < 0 || !v->fits_ulong_p()) fail("--primes: not a non-negative integer: '" + trim(part) + "'");
    primes.push_back(checked_prime(v->get_ui()));
  }
  if (primes.empty()) fail("--primes: empty list");
  return primes;
}

JobConfig resolve(const RawOptions& raw, bool require_primes) {
  const bool custom = !raw.curve.empty() || !raw.point.empty() || !raw.seed_file.empty();
  if (custom && !raw.preset.empty()) fail("--preset cannot be combined with --curve, --point or --seed-file");

  std::optional<Preset> preset;
  if (!custom) {
    const std::string name = raw.preset.empty() ? "a058231" : raw.preset;
    preset = find_preset(name);
    if (!preset) fail("unknown preset '" + name + "'");
  } else if (raw.curve.empty() || raw.point.empty() || raw.seed_file.empty()) {
    fail("a custom curve needs --curve, --point and --seed-file together");
  }

  auto build = [&]() -> JobConfig {
    if (preset) return {preset->name, preset->curve, preset->point, preset->seed, PrimeSelection::none, {}};
    Curve curve = parse_curve(raw.curve);
    IntegralPoint point = parse_point(raw.point);
    if (!validate_point(curve, point)) {
      fail("--point: (" + point.x.get_str() + ", " + point.y.get_str() + ") is not on the curve");
    }
    const SeedFile file = load_seed_file(raw.seed_file);
    if (file.x != point.x) fail(raw.seed_file + ": x = " + file.x.get_str() + " differs from the point's x");
    SequenceSeed seed = SequenceSeed::from_table(file.x, file.c4_to_c9, &curve, file.c3);
    return {"custom", std::move(curve), std::move(point), std::move(seed), PrimeSelection::none, {}};
  };
  JobConfig config = build();

  const int forms = (raw.prime ? 1 : 0) + (raw.primes.empty() ? 0 : 1) + (raw.pmax ? 1 : 0);
  if (forms > 1) fail("use exactly one of --prime, --primes, --pmax");
  if (forms == 0 && require_primes) fail("one of --prime, --primes, --pmax is required");
  if (raw.prime) {
    config.selection = PrimeSelection::single;
    config.primes = {checked_prime(*raw.prime)};
  } else if (!raw.primes.empty()) {
    config.selection = PrimeSelection::list;
    config.primes = parse_prime_list(raw.primes);
  } else if (raw.pmax) {
    if (*raw.pmax >= (std::uint64_t{1} << 32)) fail("--pmax must be below 2^32");
    config.selection = PrimeSelection::bound;
    config.primes = primes_up_to(*raw.pmax);
  }
  std::sort(config.primes.begin(), config.primes.end());
  config.primes.erase(std::unique(config.primes.begin(), config.primes.end()), config.primes.end());

  if (raw.format == "table") {
    config.format = OutputFormat::table;
  } else if (raw.format == "csv") {
    config.format = OutputFormat::csv;
  } else if (raw.format == "json") {
    config.format = OutputFormat::json;
  } else {
    fail("--format: expected table, csv or json");
  }
  if (raw.mode == "strict") {
    config.mode = Mode::strict;
  } else if (raw.mode == "best-effort") {
    config.mode = Mode::best_effort;
  } else {
    fail("--mode: expected strict or best-effort");
  }
  if (raw.cap_exact < 20) fail("--cap-exact must be at least 20");
  config.cap_exact = raw.cap_exact;
  config.cap_brute = raw.cap_brute;
  config.jobs = raw.jobs != 0 ? raw.jobs : std::max(1U, std::thread::hardware_concurrency());
  return config;
}

}  // namespace cantorseq::cli
