#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cantorseq/curve.hpp"
#include "cantorseq/exact_sequence.hpp"
#include "cantorseq/seed.hpp"

namespace cantorseq::cli {

enum class OutputFormat { table, csv, json };
enum class Mode { strict, best_effort };
enum class PrimeSelection { none, single, list, bound };

// Flag values as typed on the command line, before any validation.
struct RawOptions {
  std::string preset;
  std::string curve;       // "a4,a3,a2,a1,a0"
  std::string point;       // "x,y"
  std::string seed_file;
  std::optional<std::uint64_t> prime;
  std::string primes;      // "p1,p2,..."
  std::optional<std::uint64_t> pmax;
  std::string format = "table";
  std::string mode = "strict";
  long cap_exact = kDefaultExactCap;
  std::uint64_t cap_brute = 0;
  unsigned jobs = 0;       // 0: hardware concurrency
};

struct JobConfig {
  std::string source;      // preset name, or "custom"
  Curve curve;
  IntegralPoint point;
  SequenceSeed seed;
  PrimeSelection selection = PrimeSelection::none;
  std::vector<std::uint64_t> primes;  // ascending, deduplicated
  OutputFormat format = OutputFormat::table;
  Mode mode = Mode::strict;
  long cap_exact = kDefaultExactCap;
  std::uint64_t cap_brute = 0;
  unsigned jobs = 1;
};

struct SeedFile {
  mpz_class x;
  std::array<mpz_class, 6> c4_to_c9;
  std::optional<mpz_class> c3;
};

// key=value lines with keys x, c3 (optional), c4..c9; '#' starts a comment.
// Errors are Error(parse_error) naming the line and key.
SeedFile parse_seed_file(std::istream& in, const std::string& name = "<seed>");
SeedFile load_seed_file(const std::string& path);

Curve parse_curve(const std::string& text);
IntegralPoint parse_point(const std::string& text);
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

// Without --preset or --curve the built-in a058231 preset is used. Throws Error(parse_error),
// Error(invalid_argument) or Error(not_prime).
JobConfig resolve(const RawOptions& raw, bool require_primes);

}  // namespace cantorseq::cli
