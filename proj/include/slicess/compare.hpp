#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicess/column.hpp"

namespace slicess {

// Closed-form counterpart of compute_page, entry by entry. Throws NO_ORACLE
// where none exists (finite pages of 2-complete or Morava spectra, table
// bases at finite pages).
Page oracle_page(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                 std::optional<std::int64_t> page);

struct Mismatch {
  TriDegree tri;
  std::string engine;
  std::string oracle;
};

// Additive comparison (orders of cyclic summands) over the union of the two
// pages' tri-degrees; a missing entry counts as the trivial group.
std::vector<Mismatch> compare_pages(const Page& engine, const Page& oracle);

}  // namespace slicess
