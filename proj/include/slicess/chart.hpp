#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicess/column.hpp"

namespace slicess {

// d^r from (p, q, w) to (p - 1, q + r, w), nonzero on `classes` basis classes.
struct Arrow {
  TriDegree source;
  std::int64_t r = 0;
  std::uint64_t classes = 0;
};

// Differentials leaving the window on page r. Available for the finite real
// models (MGL/2^n, K(n)); empty otherwise.
std::vector<Arrow> page_differentials(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                                      std::int64_t r);

// Short group name for a chart box: "4", "2^3", "Z", "Z+2", "Z^inf".
std::string group_shorthand(const GroupDescriptor& g);

// One grid per weight: stems p left to right, slices q bottom to top.
std::string render_chart_ascii(const Page& page, const std::vector<Arrow>& arrows);
// Same layout as SVG; the page's records are embedded in <metadata>.
std::string render_chart_svg(const Page& page, const std::vector<Arrow>& arrows);

}  // namespace slicess
