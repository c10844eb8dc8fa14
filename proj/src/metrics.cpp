#include "sbpdct/metrics.hpp"

#include <array>
#include <bit>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sbpdct {

std::size_t min_mult_bound(std::size_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw std::invalid_argument("min_mult_bound: N must be a power of two >= 2");
  }
  const std::size_t r = static_cast<std::size_t>(std::countr_zero(n));
  return (std::size_t{1} << (r + 1)) - r - 2;
}

namespace {

// Fixed probe data; any values satisfying the scenario preconditions give
// the same tally.
std::array<double, 8> probe_input(Scenario scenario) {
  std::array<double, 8> x{};
  if (is_null_mean(scenario)) {
    x = {3.0, -1.0, 4.0, -1.0, -5.0, 9.0, -2.0, -7.0};
  } else {
    x = {3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0};
  }
  if (is_accumulated(scenario)) {
    const std::vector<double> u = accumulate(std::span<const double>(x));
    std::copy(u.begin(), u.end(), x.begin());
  }
  return x;
}

}  // namespace

OpTally measure_ops(AlgorithmId alg, Scenario scenario, bool scaled) {
  if (scaled && !supports_scaled(alg)) {
    throw std::invalid_argument("measure_ops: " + std::string(to_string(alg)) +
                                " has no scaled form");
  }
  const std::array<double, 8> data = probe_input(scenario);
  OpTally tally;
  const std::vector<CountingScalar> in = instrument(data, tally);
  (void)run_algorithm(alg, std::span<const CountingScalar>(in), scenario, scaled);
  return tally;
}

OpTally measure_dc_removal_accumulated() {
  const std::array<double, 8> u = probe_input(Scenario::Accumulated);
  OpTally tally;
  const std::vector<CountingScalar> in = instrument(u, tally);
  (void)remove_dc_accumulated(std::span<const CountingScalar>(in));
  return tally;
}

OpTally measure_dc_removal() {
  const std::array<double, 8> x = probe_input(Scenario::Arbitrary);
  OpTally tally;
  const std::vector<CountingScalar> in = instrument(x, tally);
  (void)remove_dc_head(std::span<const CountingScalar>(in));
  return tally;
}

bool ComplexityRow::matches_paper() const {
  if (!paper) return false;
  return paper->scaled_mults == scaled_mults && paper->full_mults == full_mults &&
         paper->additions == additions;
}

namespace {

struct PublishedRow {
  const char* algorithm;
  bool scaled;
  std::array<CitedCount, 4> counts;  // scenarios (i)..(iv)
};

// Comparison table for the 8-point DCT. Unscaled methods repeat the exact
// count in the scaled column.
constexpr PublishedRow kPublished[] = {
    {"loeffler", false, {{{11, 11, 29}, {11, 11, 26}, {11, 11, 36}, {11, 11, 33}}}},
    {"lee", false, {{{12, 12, 29}, {11, 11, 26}, {12, 12, 36}, {11, 11, 33}}}},
    {"chen", false, {{{13, 13, 26}, {12, 12, 23}, {13, 13, 33}, {12, 12, 30}}}},
    {"arai", true, {{{5, 13, 28}, {5, 12, 25}, {5, 13, 35}, {5, 12, 32}}}},
    {"proposed", true, {{{5, 11, 39}, {5, 11, 25}, {5, 11, 30}, {5, 11, 19}}}},
};

std::optional<CitedCount> published(std::string_view alg, Scenario s) {
  for (const auto& row : kPublished) {
    if (alg == row.algorithm) return row.counts[static_cast<std::size_t>(s)];
  }
  return std::nullopt;
}

std::string paper_value(const ComplexityRow& r) {
  if (!r.paper) return "";
  std::ostringstream os;
  if (r.scaled_method) {
    os << r.paper->scaled_mults << "(" << r.paper->full_mults << ")/" << r.paper->additions;
  } else {
    os << r.paper->full_mults << "/" << r.paper->additions;
  }
  return os.str();
}

std::string match_flag(const ComplexityRow& r) {
  if (r.source == ComplexityRow::Source::Cited || !r.paper) return "n/a";
  return r.matches_paper() ? "match" : "mismatch";
}

std::string mult_cell(const ComplexityRow& r) {
  std::ostringstream os;
  if (r.scaled_method) {
    os << r.scaled_mults << " (" << r.full_mults << ")";
  } else {
    os << r.full_mults;
  }
  return os.str();
}

}  // namespace

std::vector<ComplexityRow> complexity_report() {
  std::vector<ComplexityRow> rows;
  const auto measured_row = [&](AlgorithmId alg) {
    for (Scenario s : kAllScenarios) {
      ComplexityRow row;
      row.algorithm = std::string(to_string(alg));
      row.scaled_method = supports_scaled(alg);
      row.scenario = s;
      const OpTally full = measure_ops(alg, s, false);
      const OpTally scaled = row.scaled_method ? measure_ops(alg, s, true) : full;
      row.full_mults = full.nontrivial_mults;
      row.scaled_mults = scaled.nontrivial_mults;
      row.additions = scaled.additions;
      row.source = ComplexityRow::Source::Measured;
      row.paper = published(row.algorithm, s);
      rows.push_back(row);
    }
  };
  const auto cited_row = [&](const char* name) {
    for (Scenario s : kAllScenarios) {
      const CitedCount c = *published(name, s);
      ComplexityRow row;
      row.algorithm = name;
      row.scaled_method = false;
      row.scenario = s;
      row.scaled_mults = c.scaled_mults;
      row.full_mults = c.full_mults;
      row.additions = c.additions;
      row.source = ComplexityRow::Source::Cited;
      row.paper = c;
      rows.push_back(row);
    }
  };
  measured_row(AlgorithmId::Naive);
  measured_row(AlgorithmId::Loeffler);
  cited_row("lee");
  cited_row("chen");
  measured_row(AlgorithmId::Arai);
  measured_row(AlgorithmId::Proposed);
  return rows;
}

std::string render_table(const std::vector<ComplexityRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "algorithm" << std::setw(8) << "scaled" << std::setw(10)
     << "scenario" << std::setw(10) << "mult" << std::setw(11) << "additions" << std::setw(10)
     << "source" << std::setw(12) << "paper" << "match\n";
  os << std::string(79, '-') << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(10) << r.algorithm << std::setw(8)
       << (r.scaled_method ? "yes" : "no") << std::setw(10)
       << ("(" + std::string(roman(r.scenario)) + ")") << std::setw(10) << mult_cell(r)
       << std::setw(11) << r.additions << std::setw(10)
       << (r.source == ComplexityRow::Source::Measured ? "measured" : "cited") << std::setw(12)
       << paper_value(r) << match_flag(r) << "\n";
  }
  os << "\nminimum multiplicative complexity mu(8) = " << min_mult_bound(8) << "\n";

  std::vector<std::string> notes;
  for (const auto& r : rows) {
    if (r.source != ComplexityRow::Source::Measured || !r.paper || r.matches_paper()) continue;
    std::ostringstream n;
    n << r.algorithm << " (" << roman(r.scenario) << "): measured " << mult_cell(r) << " mults / "
      << r.additions << " additions, paper " << paper_value(r);
    if (r.algorithm == "proposed" && r.scenario == Scenario::Accumulated) {
      const OpTally block = measure_dc_removal_accumulated();
      n << "; accumulated-input DC removal measured at " << block.additions
        << " additions (the text states 10, the table total implies 11)";
    }
    if (r.algorithm == "arai" && r.full_mults != r.paper->full_mults) {
      n << "; under this normalization the X[0] and X[4] scale factors are 1, so only 6 of 8 "
           "descaling products are non-trivial";
    }
    notes.push_back(n.str());
  }
  if (!notes.empty()) {
    os << "\ndiscrepancies:\n";
    for (const auto& n : notes) os << "  - " << n << "\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<ComplexityRow>& rows) {
  std::ostringstream os;
  os << "algorithm,scenario,scaled_mults,full_mults,additions,source,paper_value,match\n";
  for (const auto& r : rows) {
    os << r.algorithm << "," << roman(r.scenario) << "," << r.scaled_mults << "," << r.full_mults
       << "," << r.additions << ","
       << (r.source == ComplexityRow::Source::Measured ? "measured" : "cited") << ","
       << paper_value(r) << "," << match_flag(r) << "\n";
  }
  return os.str();
}

}  // namespace sbpdct
