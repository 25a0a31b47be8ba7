#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slicess/band.hpp"
#include "slicess/basis_table.hpp"
#include "slicess/int_matrix.hpp"
#include "slicess/spectrum.hpp"

namespace slicess {

// Matrix of d^r from the E^1 term at `source` to the term at (p-1, q+r, w),
// in ring-basis coordinates, entries modulo the target order. Zero rows when
// the target is empty.
IntMatrix synthesize_differential(const EngineModel& model, const GradedBasisTable& basis, std::int64_t r,
                                  const TriDegree& source);

// Explicit lattice route for small windows: Z_r and B_r are kept as integer
// lattices inside Z^size (containing 2^order Z^size) and E^r = Z_r / B_r.
class DenseLatticeRun {
 public:
  DenseLatticeRun(const EngineModel& model, const GradedBasisTable& basis, std::int64_t weight, std::int64_t pmin,
                  std::int64_t pmax);

  std::int64_t page() const { return page_; }
  void turn_page();
  void run_to(std::int64_t page) {
    while (page_ < page) turn_page();
  }
  GroupDescriptor group(std::int64_t p, std::int64_t q) const;
  std::vector<TriDegree> window() const;

 private:
  struct Term {
    TriDegree tri;
    RealMonomial mono;
    int order_log2 = 1;
    IntMatrix cycles, boundaries;
  };
  EngineModel model_;
  const GradedBasisTable& basis_;
  std::int64_t weight_, pmin_, pmax_;
  std::int64_t page_ = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, Term> terms_;
};

// E^{r+1} at one entry computed as the homology of (E^r, d^r), with E^r read
// off the band engine as a presentation (generators 2^z m of order 2^(b-z)).
GroupDescriptor homology_of_page(const RealBand& band, std::int64_t p, std::int64_t q);

}  // namespace slicess
