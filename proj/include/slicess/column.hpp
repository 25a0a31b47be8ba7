#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicess/group.hpp"
#include "slicess/spectrum.hpp"

namespace slicess {

struct Region {
  std::int64_t pmin = 0, pmax = -1, wmin = 0, wmax = -1;

  static Region column(std::int64_t p, std::int64_t w) { return {p, p, w, w}; }
  static Region window(std::int64_t pmin, std::int64_t pmax, std::int64_t wmin, std::int64_t wmax) {
    return {pmin, pmax, wmin, wmax};
  }
  bool empty() const { return pmin > pmax || wmin > wmax; }
  std::string to_string() const;
};

struct PageEntry {
  TriDegree tri;
  GroupDescriptor group;
  std::int64_t stabilized_at = 0;  // first page from which the entry is fixed; 0 if not reported
};

// Snapshot of E^r (or E^infinity) on a region, entries sorted by (w, p, q).
struct Page {
  std::string spectrum;
  std::string base;
  Region region;
  std::optional<std::int64_t> r;  // empty: E^infinity
  std::vector<std::string> metadata;
  std::vector<PageEntry> entries;

  std::string page_name() const { return r ? std::to_string(*r) : "inf"; }
  const PageEntry* find(const TriDegree& t) const;
};

Page assemble_e1(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region, int workers = 1);
// E^r for a finite page, E^infinity when `page` is empty. Columns are
// computed per weight on up to `workers` threads; the result does not depend on
// the worker count.
Page compute_page(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                  std::optional<std::int64_t> page, int workers = 1);

struct ColumnReport {
  std::int64_t p = 0, w = 0;
  std::vector<PageEntry> entries;  // E^infinity by slice degree q
  bool finite = true;
  std::int64_t log2_order = 0;  // of the abutment when finite
  // One line per filtration level: "q=<q> <group>".
  std::vector<std::string> filtration() const;
};
ColumnReport compute_column(const SpectrumSpec& spectrum, const BaseSpec& base, std::int64_t p, std::int64_t w);

// Largest slice degree an E^infinity computation on the region touches over the reals.
std::int64_t required_ring_degree(const Region& region);

}  // namespace slicess
