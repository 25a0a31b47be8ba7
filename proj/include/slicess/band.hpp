#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicess/basis_table.hpp"
#include "slicess/group.hpp"
#include "slicess/spectrum.hpp"

namespace slicess {

// Spectral sequence over the real numbers along one weight, for stems
// pmin..pmax. Every E^1 term is cyclic-by-ring-monomial and each differential
// sends a basis class to a multiple of a single basis class, so the state of a
// class m is two exponents: Z_r contains 2^z m and B_r contains 2^b m, giving a
// cyclic summand of order 2^(b-z) on E^r.
//
// Columns pmin-1 and pmax+1 are carried along to feed the window; their groups
// are not exact and are never reported.
class RealBand {
 public:
  struct Entry {
    TriDegree tri;
    RealMonomial mono;
    int order_log2 = 1;
    std::uint32_t size = 0;
    std::size_t offset = 0;
    std::int64_t last_change = 0;  // last page whose differential touched this entry
  };
  struct ClassState {
    std::uint8_t cycle = 0;     // z
    std::uint8_t boundary = 0;  // b
  };

  RealBand(const EngineModel& model, const GradedBasisTable& basis, std::int64_t weight, std::int64_t pmin,
           std::int64_t pmax, bool verify = true);

  std::int64_t page() const { return page_; }
  std::int64_t weight() const { return weight_; }
  std::int64_t pmin() const { return pmin_; }
  std::int64_t pmax() const { return pmax_; }
  const EngineModel& model() const { return model_; }
  const GradedBasisTable& basis() const { return basis_; }

  // Applies d^r for the current page r and moves to E^{r+1}.
  void turn_page();
  void run_to(std::int64_t page);
  // Past this page nothing in the window can change.
  std::int64_t infinity_page() const;
  void run_to_infinity() { run_to(infinity_page()); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool in_window(const Entry& e) const { return e.tri.p >= pmin_ && e.tri.p <= pmax_; }
  const Entry* find(std::int64_t p, std::int64_t q) const;

  ClassState state(const Entry& e, std::uint32_t index) const { return {cycle_[e.offset + index], boundary_[e.offset + index]}; }
  OrderProfile profile(const Entry& e) const;
  GroupDescriptor group(const Entry& e, bool labeled) const;
  // First page from which the entry no longer changes.
  std::int64_t stabilization_page(const Entry& e) const { return e.last_change + 1; }

  // Consistency failures seen while turning pages (image outside cycles,
  // boundaries not mapped to boundaries, d∘d != 0). Always empty for a sound
  // rule set.
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  Entry* find_mutable(std::int64_t p, std::int64_t q);
  std::uint32_t target_index(int k, std::int64_t q, std::uint32_t index) const;
  void verify_page(std::int64_t r);

  EngineModel model_;
  const GradedBasisTable& basis_;
  std::int64_t weight_, pmin_, pmax_;
  bool verify_;
  std::int64_t page_ = 1;
  std::vector<Entry> entries_;
  struct Column {
    std::int64_t qlo = 0;
    std::vector<std::int32_t> slot;  // q - qlo -> entry index or -1
  };
  std::vector<Column> columns_;  // p - (pmin - 1)
  std::vector<std::uint8_t> cycle_, boundary_;
  std::vector<std::string> violations_;
};

}  // namespace slicess
