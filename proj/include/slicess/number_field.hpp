#pragma once

#include <compare>
#include <map>
#include <memory>
#include <tuple>

#include "slicess/base_data.hpp"
#include "slicess/f2.hpp"
#include "slicess/sparse.hpp"

namespace slicess {

// Term H^{p,q}(F) x_K of the E^1 page for MGL over a number-field-like base.
struct FieldTerm {
  int p = 0, q = 0;
  MultiIndex ring;
  friend auto operator<=>(const FieldTerm&, const FieldTerm&) = default;
};

// Runs the slice spectral sequence of a table base at the level of
// descriptors. Each term keeps W, a subspace of F_2^{r1} whose preimage under
// the map to the real embeddings is the current cycle group, and for p >= 3
// (where the map is an isomorphism) B, the boundaries in the same
// coordinates. A differential d^r on the base is nonzero exactly where the
// real one is, and then it is the map to the real embeddings followed by the
// identification of the target with F_2^{r1}.
class NumberFieldEngine {
 public:
  explicit NumberFieldEngine(std::shared_ptr<const CohomologyTable> table);

  GroupDescriptor er(const FieldTerm& term, std::int64_t page);
  GroupDescriptor einfty(const FieldTerm& term);
  // Page after which the term can no longer change.
  static std::int64_t infinity_page(const FieldTerm& term);
  const CohomologyTable& table() const { return *table_; }

 private:
  struct State {
    F2Subspace cycles;
    F2Subspace boundaries;
  };
  State state(const FieldTerm& term, std::int64_t page);
  bool real_differential(const FieldTerm& term, std::int64_t page);
  F2Subspace image(const FieldTerm& term) const;

  std::shared_ptr<const CohomologyTable> table_;
  SparseRealEngine real_;
  std::map<std::pair<FieldTerm, std::int64_t>, State> memo_;
};

// E^infinity contributions for all terms with 0 <= p <= q <= qmax (plus the
// (2,1) slot) and ring monomials of degree <= max_ring_degree.
std::map<FieldTerm, GroupDescriptor> number_field_einfty(std::shared_ptr<const CohomologyTable> table, int qmax,
                                                         int max_ring_degree);

}  // namespace slicess
