#include "slicess/limit.hpp"

#include "slicess/error.hpp"

namespace slicess {

LimitEntry limit_2adic(const RealBand& low, const RealBand& high, const RealBand::Entry& entry, bool labeled) {
  if (high.model().coeff.n != low.model().coeff.n + 1 || !(high.model().ring == low.model().ring))
    throw Error(ErrorKind::INVALID_ARGUMENT, "limit needs consecutive stages of one spectrum");
  const RealBand::Entry* upper = high.find(entry.tri.p, entry.tri.q);
  if (!upper || upper->size != entry.size || !(upper->mono == entry.mono))
    throw Error(ErrorKind::PATTERN_MISMATCH, "stages disagree on the E^1 term at " + entry.tri.to_string());
  LimitEntry out;
  out.tri = entry.tri;
  auto mismatch = [&](std::uint32_t i, const char* what) {
    return Error(ErrorKind::PATTERN_MISMATCH,
                 std::string(what) + " at " + entry.tri.to_string() + ", class " + std::to_string(i));
  };
  for (std::uint32_t i = 0; i < entry.size; ++i) {
    const auto a = low.state(entry, i), b = high.state(*upper, i);
    const int order_low = a.boundary - a.cycle, order_high = b.boundary - b.cycle;
    const bool tower = entry.mono.rho == 0 && entry.mono.tau == 0;
    if (!tower) {
      if (order_low != order_high) throw mismatch(i, "torsion class changes order between stages");
      if (entry.mono.tau != 0 || order_low == 0) continue;
      out.profile.add(1);
      if (labeled) {
        std::string ring = low.basis().unrank(entry.tri.q, i).label(low.model().ring.symbol());
        out.group.add_cyclic(1, class_label(0, entry.mono, ring));
      }
      continue;
    }
    if (order_low == 0 && order_high == 0) continue;
    if (order_high != order_low + 1 || a.cycle != b.cycle) throw mismatch(i, "tower does not grow by one");
    out.profile.add(0);
    if (labeled) {
      std::string ring = low.basis().unrank(entry.tri.q, i).label(low.model().ring.symbol());
      out.group.add_free(class_label(a.cycle, entry.mono, ring));
    }
  }
  if (!labeled) out.group = out.profile.to_descriptor();
  return out;
}

}  // namespace slicess
