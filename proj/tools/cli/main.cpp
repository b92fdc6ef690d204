#include <iostream>

#include "CLI11.hpp"

#include "cantorseq/error.hpp"
#include "cli/commands.hpp"

namespace {

using cantorseq::Error;
using cantorseq::ErrorKind;
namespace cli = cantorseq::cli;

void add_common(CLI::App& sub, cli::RawOptions& raw) {
  sub.add_option("--preset", raw.preset, "Built-in curve, point and seed (a058231)");
  sub.add_option("--curve", raw.curve, "a4,a3,a2,a1,a0 of F(X) = X^5 + a4 X^4 + ... + a0");
  sub.add_option("--point", raw.point, "x,y of the integral point");
  sub.add_option("--seed-file", raw.seed_file, "key=value file with x, c4..c9");
  sub.add_option("--prime", raw.prime, "A single prime");
  sub.add_option("--primes", raw.primes, "Comma-separated primes");
  sub.add_option("--pmax", raw.pmax, "All primes up to N");
  sub.add_option("--format", raw.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  sub.add_option("--mode", raw.mode, "strict | best-effort")->check(CLI::IsMember({"strict", "best-effort"}));
  sub.add_option("--cap-exact", raw.cap_exact, "Largest |n| for exact terms");
  sub.add_option("--cap-brute", raw.cap_brute, "Step cap for window-repeat scans (0: Hasse-Weil default)");
  sub.add_option("--jobs", raw.jobs, "Worker threads (0: all processors)");
}

bool usage_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::not_prime:
    case ErrorKind::invalid_argument:
    case ErrorKind::seed_inconsistent:
    case ErrorKind::degenerate_seed:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Division-polynomial sequences of genus-2 curves and their periods modulo p"};
  app.require_subcommand(1);

  cli::RawOptions raw;
  long from = 0;
  long to = 9;

  auto* analyze = app.add_subcommand("analyze", "Per-prime |Jac|, ord, Per, ratio, alpha, beta and checks");
  auto* sequence = app.add_subcommand("sequence", "Exact terms c_n");
  auto* screen = app.add_subcommand("screen", "Excluded primes, or the status of selected primes");
  auto* verify = app.add_subcommand("verify", "Identity, group-law, theta and periodicity suites");
  auto* stats = app.add_subcommand("stats", "Distribution of d = Per/ord");
  for (auto* sub : {analyze, sequence, screen, verify, stats}) add_common(*sub, raw);
  sequence->add_option("--from", from, "First index");
  sequence->add_option("--to", to, "Last index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    const cli::JobConfig config = cli::resolve(raw, analyze->parsed());
    if (analyze->parsed()) return cli::cmd_analyze(config, std::cout, std::cerr);
    if (sequence->parsed()) return cli::cmd_sequence(config, from, to, std::cout, std::cerr);
    if (screen->parsed()) return cli::cmd_screen(config, std::cout, std::cerr);
    if (verify->parsed()) return cli::cmd_verify(config, std::cout, std::cerr);
    return cli::cmd_stats(config, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_kind(e.kind()) ? cli::kExitUsage : cli::kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitCheckFailure;
  }
}
