#include "cli/emit.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "cantorseq/factor.hpp"

namespace cantorseq::cli {
namespace {

using json = nlohmann::ordered_json;

std::string cell(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }

json nullable(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::string joined(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string failed_list(const PeriodReport& report) {
  std::vector<std::string> names;
  for (Check c : report.failed_checks()) names.emplace_back(to_string(c));
  return joined(names, ",");
}

std::string factorization_text(const mpz_class& n) {
  const Factorization f = factorize(n);
  std::vector<std::string> parts;
  if (f.sign < 0) parts.emplace_back("-1");
  for (const auto& [q, e] : f.factors) parts.push_back(q.get_str() + (e > 1 ? "^" + std::to_string(e) : ""));
  return joined(parts, " * ");
}

}  // namespace

std::vector<std::string> table_cells(const PeriodReport& report) {
  return {std::to_string(report.p), cell(report.jac_order), cell(report.r),    cell(report.period),
          cell(report.ratio),       cell(report.alpha),     cell(report.beta)};
}

void emit_reports(std::ostream& out, std::span<const PeriodReport> reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      out << "p | |Jac| | ord | Per | Per/ord | alpha | beta | status | failed checks\n";
      for (const auto& r : reports) {
        auto cells = table_cells(r);
        cells.emplace_back(to_string(r.screen.status));
        cells.push_back(failed_list(r));
        out << joined(cells, " | ") << '\n';
      }
      return;
    }
    case OutputFormat::csv: {
      out << "p,jac_order,ord,per,ratio,alpha,beta,status,method,d,preperiod";
      for (Check c : kAllChecks) out << ',' << to_string(c);
      out << '\n';
      for (const auto& r : reports) {
        auto cells = table_cells(r);
        cells.emplace_back(to_string(r.screen.status));
        cells.emplace_back(r.method == PeriodMethod::none ? "" : std::string(to_string(r.method)));
        cells.push_back(cell(r.d));
        cells.push_back(cell(r.preperiod));
        for (Check c : kAllChecks) {
          const auto v = r.check(c);
          cells.emplace_back(!v ? "" : (*v ? "pass" : "fail"));
        }
        out << joined(cells, ",") << '\n';
      }
      return;
    }
    case OutputFormat::json: {
      json all = json::array();
      for (const auto& r : reports) {
        json reasons = json::array();
        for (auto reason : r.screen.reasons) reasons.push_back(std::string(to_string(reason)));
        json checks = json::object();
        for (Check c : kAllChecks) {
          if (const auto v = r.check(c)) checks[std::string(to_string(c))] = *v;
        }
        all.push_back({
            {"p", r.p},
            {"jac_order", nullable(r.jac_order)},
            {"ord", nullable(r.r)},
            {"per", nullable(r.period)},
            {"ratio", nullable(r.ratio)},
            {"alpha", nullable(r.alpha)},
            {"beta", nullable(r.beta)},
            {"d", nullable(r.d)},
            {"preperiod", nullable(r.preperiod)},
            {"status", std::string(to_string(r.screen.status))},
            {"reasons", reasons},
            {"divides", r.screen.divides},
            {"weak_hypothesis", r.screen.weak_hypothesis},
            {"method", r.method == PeriodMethod::none ? json(nullptr) : json(std::string(to_string(r.method)))},
            {"checks", checks},
            {"notes", r.notes},
        });
      }
      out << all.dump(2) << '\n';
      return;
    }
  }
}

void emit_terms(std::ostream& out, std::span<const TermLine> terms, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      for (const auto& t : terms) out << t.n << ' ' << t.value.get_str() << '\n';
      return;
    case OutputFormat::csv:
      out << "n,c\n";
      for (const auto& t : terms) out << t.n << ',' << t.value.get_str() << '\n';
      return;
    case OutputFormat::json: {
      // Decimal strings.
      json all = json::array();
      for (const auto& t : terms) all.push_back({{"n", t.n}, {"c", t.value.get_str()}});
      out << all.dump(2) << '\n';
      return;
    }
  }
}

void emit_excluded(std::ostream& out, const mpz_class& discriminant, std::span<const ExcludedPrime> primes,
                   OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      out << "disc(F) = " << discriminant.get_str() << " = " << factorization_text(discriminant) << '\n';
      out << "p | divides\n";
      for (const auto& e : primes) out << e.prime.get_str() << " | " << joined(e.sources, ",") << '\n';
      return;
    case OutputFormat::csv:
      out << "p,divides\n";
      for (const auto& e : primes) out << e.prime.get_str() << ',' << joined(e.sources, ";") << '\n';
      return;
    case OutputFormat::json: {
      json list = json::array();
      for (const auto& e : primes) list.push_back({{"p", e.prime.get_str()}, {"divides", e.sources}});
      const json doc = {{"discriminant", discriminant.get_str()}, {"excluded", list}};
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

void emit_screen(std::ostream& out, std::span<const ScreenResult> results, OutputFormat format) {
  auto reasons_of = [](const ScreenResult& s) {
    std::vector<std::string> tags;
    for (auto r : s.reasons) tags.emplace_back(to_string(r));
    return tags;
  };
  switch (format) {
    case OutputFormat::table:
      out << "p | status | reasons | divides | weak hypothesis\n";
      for (const auto& s : results) {
        out << s.p << " | " << to_string(s.status) << " | " << joined(reasons_of(s), ",") << " | "
            << joined(s.divides, ",") << " | " << (s.weak_hypothesis ? "yes" : "no") << '\n';
      }
      return;
    case OutputFormat::csv:
      out << "p,status,reasons,divides,weak_hypothesis\n";
      for (const auto& s : results) {
        out << s.p << ',' << to_string(s.status) << ',' << joined(reasons_of(s), ";") << ','
            << joined(s.divides, ";") << ',' << (s.weak_hypothesis ? "true" : "false") << '\n';
      }
      return;
    case OutputFormat::json: {
      json all = json::array();
      for (const auto& s : results) {
        all.push_back({{"p", s.p},
                       {"status", std::string(to_string(s.status))},
                       {"reasons", reasons_of(s)},
                       {"divides", s.divides},
                       {"weak_hypothesis", s.weak_hypothesis}});
      }
      out << all.dump(2) << '\n';
      return;
    }
  }
}

void emit_statistics(std::ostream& out, const DStatistics& stats, OutputFormat format) {
  auto primes_text = [](const std::vector<std::uint64_t>& ps) {
    std::vector<std::string> parts;
    for (auto p : ps) parts.push_back(std::to_string(p));
    return parts;
  };
  switch (format) {
    case OutputFormat::table: {
      out << "primes with d: " << stats.entries.size() << " (good: " << stats.good_primes << ")\n";
      out << "d = 1: " << joined(primes_text(stats.d_equals_one), ", ") << '\n';
      out << "d = p - 1: " << joined(primes_text(stats.d_equals_p_minus_1), ", ") << '\n';
      out << "d | p - 1 everywhere: " << (stats.all_divide_p_minus_1 ? "yes" : "no") << '\n';
      out << "d/(p-1) histogram:\n";
      for (std::size_t k = 0; k < stats.histogram.size(); ++k) {
        out << "  (" << std::fixed << std::setprecision(1) << k / 10.0 << ", " << (k + 1) / 10.0 << "] "
            << stats.histogram[k] << '\n';
      }
      out << "p | d | (p-1)/d | status\n";
      for (const auto& e : stats.entries) {
        out << e.p << " | " << e.d << " | " << ((e.p - 1) % e.d == 0 ? std::to_string((e.p - 1) / e.d) : "-")
            << " | " << to_string(e.status) << '\n';
      }
      return;
    }
    case OutputFormat::csv:
      out << "p,d,p_minus_1_over_d,status\n";
      for (const auto& e : stats.entries) {
        out << e.p << ',' << e.d << ',' << ((e.p - 1) % e.d == 0 ? std::to_string((e.p - 1) / e.d) : "") << ','
            << to_string(e.status) << '\n';
      }
      return;
    case OutputFormat::json: {
      json entries = json::array();
      for (const auto& e : stats.entries) {
        entries.push_back({{"p", e.p}, {"d", e.d}, {"status", std::string(to_string(e.status))}});
      }
      const json doc = {{"good_primes", stats.good_primes},
                        {"d_equals_one", stats.d_equals_one},
                        {"d_equals_p_minus_1", stats.d_equals_p_minus_1},
                        {"all_divide_p_minus_1", stats.all_divide_p_minus_1},
                        {"histogram", stats.histogram},
                        {"entries", entries}};
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

}  // namespace cantorseq::cli
