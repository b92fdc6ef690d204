#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cantorseq/periodicity.hpp"
#include "cantorseq/screen.hpp"
#include "cli/config.hpp"

namespace cantorseq::cli {

// The seven table cells p, |Jac|, ord, Per, Per/ord, alpha, beta; blank where absent.
std::vector<std::string> table_cells(const PeriodReport& report);

void emit_reports(std::ostream& out, std::span<const PeriodReport> reports, OutputFormat format);

struct TermLine {
  long n = 0;
  mpz_class value;
};
void emit_terms(std::ostream& out, std::span<const TermLine> terms, OutputFormat format);

void emit_excluded(std::ostream& out, const mpz_class& discriminant, std::span<const ExcludedPrime> primes,
                   OutputFormat format);
void emit_screen(std::ostream& out, std::span<const ScreenResult> results, OutputFormat format);

void emit_statistics(std::ostream& out, const DStatistics& stats, OutputFormat format);

}  // namespace cantorseq::cli
