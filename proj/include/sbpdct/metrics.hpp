#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sbpdct/counting.hpp"
#include "sbpdct/rivals.hpp"
#include "sbpdct/sbp.hpp"

namespace sbpdct {

/// Minimum number of non-trivial products for an exact 2^r-point DCT,
/// 2^(r+1) - r - 2. N must be a power of two >= 2.
std::size_t min_mult_bound(std::size_t n);

/// Runs one 8-point algorithm on instrumented inputs and returns its tally.
/// Straight-line code, so the result does not depend on the sample values.
OpTally measure_ops(AlgorithmId alg, Scenario scenario, bool scaled);

/// Cost of the remove_dc_accumulated block alone for N = 8.
OpTally measure_dc_removal_accumulated();
/// Cost of the remove_dc pipeline stage alone for N = 8.
OpTally measure_dc_removal();

struct CitedCount {
  std::size_t scaled_mults;
  std::size_t full_mults;
  std::size_t additions;
};

struct ComplexityRow {
  enum class Source { Measured, Cited };

  std::string algorithm;
  bool scaled_method = false;
  Scenario scenario = Scenario::Arbitrary;
  std::size_t scaled_mults = 0;
  std::size_t full_mults = 0;
  std::size_t additions = 0;
  Source source = Source::Measured;
  std::optional<CitedCount> paper;  ///< comparison-table entry, when there is one

  bool matches_paper() const;
};

std::vector<ComplexityRow> complexity_report();

/// Aligned text table, followed by the multiplicative bound and a note for
/// every measured row that differs from the published count.
std::string render_table(const std::vector<ComplexityRow>& rows);

/// CSV with header algorithm,scenario,scaled_mults,full_mults,additions,source,paper_value,match
std::string render_csv(const std::vector<ComplexityRow>& rows);

}  // namespace sbpdct
