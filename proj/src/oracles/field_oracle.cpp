#include "slicess/arith.hpp"
#include "slicess/oracles.hpp"

namespace slicess {

bool collapse_shaped(const CohomologyTable& table) {
  if (table.r1 != 0) return false;
  for (const auto& [key, entry] : table.entries) {
    const auto [p, q] = key;
    if ((p > 2 || (p == 0 && q != 0)) && !entry.group.is_trivial()) return false;
  }
  return true;
}

GroupDescriptor field_einfty_oracle(const CohomologyTable& table, int p, int q, const MultiIndex& ring) {
  if (p < 0 || q < 0) return {};
  if (collapse_shaped(table) || q < p) return table.group(p, q);
  // nu2(0) is infinite: every level is below it.
  constexpr int kUnbounded = 30;
  const int gap = q == p ? kUnbounded : nu2(static_cast<std::int64_t>(q - p));
  if (gap == 0) return table.group(p, q);
  for (int level = 1; level < gap; ++level)
    if (ring.divisible_by((1 << level) - 1)) return cokernel_bar(table, p, q, level);
  return gap == kUnbounded ? table.group(p, q) : kernel_tilde(table, p, q);
}

}  // namespace slicess
