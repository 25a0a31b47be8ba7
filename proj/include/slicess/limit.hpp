#pragma once

#include "slicess/band.hpp"
#include "slicess/group.hpp"

namespace slicess {

// 2-adic limit of one E^infinity entry from two consecutive finite stages
// 2^n and 2^{n+1} of the same spectrum and weight. Classes are sorted into
// tau-multiples (vanish), rho-multiples (Z/2 with identity structure maps) and
// the rest (Z_2 towers, order growing by one per stage); anything else throws
// PATTERN_MISMATCH. Free summands of the result stand for Z_2.
struct LimitEntry {
  TriDegree tri;
  OrderProfile profile;
  GroupDescriptor group;  // labeled when requested
};
LimitEntry limit_2adic(const RealBand& low, const RealBand& high, const RealBand::Entry& entry, bool labeled);

}  // namespace slicess
