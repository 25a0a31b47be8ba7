#include "slicess/compare.hpp"

#include <algorithm>
#include <map>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"
#include "slicess/oracles.hpp"

namespace slicess {

namespace {

// Slice degrees with a nonzero E^1 term; v_n is invertible in K(n), so there
// q may be negative.
std::vector<std::int64_t> slices(std::int64_t p, std::int64_t w, bool with_picard, bool negative_slices = false) {
  std::vector<std::int64_t> out;
  const std::int64_t lowest = negative_slices ? ceil_div(p, 2) : std::max<std::int64_t>(0, ceil_div(p, 2));
  for (std::int64_t q = lowest; q <= p - w; ++q) out.push_back(q);
  if (with_picard && w + 1 >= 0 && 2 * (w + 1) - p == 2 && p - w < w + 1) out.push_back(w + 1);
  return out;
}

GroupDescriptor presentation_group(const std::vector<PresentationBasisElement>& basis, std::int64_t q,
                                   const RingSpec& ring) {
  GroupDescriptor g;
  for (const auto& e : basis) {
    if (e.slice != q) continue;
    if (e.log2_order == 0)
      g.add_free(e.label(ring));
    else
      g.add_cyclic(e.log2_order, e.label(ring));
  }
  return g;
}

}  // namespace

Page oracle_page(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                 std::optional<std::int64_t> page) {
  Page out;
  out.spectrum = spectrum.name();
  out.base = base.label + " (oracle)";
  out.region = region;
  out.r = page;
  if (region.empty()) return out;

  auto no_oracle = [&] {
    return Error(ErrorKind::NO_ORACLE, "no closed form for " + spectrum.name() + " over " + base.label +
                                           (page ? " at page " + std::to_string(*page) : std::string(" at infinity")));
  };

  if (base.kind == BaseSpec::Kind::TABLE) {
    if (spectrum.kind != SpectrumKind::MGL_2COMPLETE)
      throw Error(ErrorKind::UNSUPPORTED_PAIRING, spectrum.name() + " over a table base is not supported");
    if (page) throw no_oracle();
    for (std::int64_t w = region.wmin; w <= region.wmax; ++w)
      for (std::int64_t p = region.pmin; p <= region.pmax; ++p)
        for (std::int64_t q : slices(p, w, true)) {
          GroupDescriptor g;
          for (const MultiIndex& k : graded_basis(RingSpec::lazard(), q))
            g.add(field_einfty_oracle(*base.table, static_cast<int>(2 * q - p), static_cast<int>(q - w), k));
          out.entries.push_back({{p, q, w}, std::move(g), 0});
        }
    return out;
  }

  switch (spectrum.kind) {
    case SpectrumKind::MGL_MOD: {
      const RealOracle oracle(RingSpec::lazard(), static_cast<int>(required_ring_degree(region)));
      for (std::int64_t w = region.wmin; w <= region.wmax; ++w)
        for (std::int64_t p = region.pmin; p <= region.pmax; ++p)
          for (std::int64_t q : slices(p, w, false)) {
            const TriDegree t{p, q, w};
            const OrderProfile prof = page ? oracle.er_profile(*page, t, spectrum.n) : oracle.einfty_profile(t, spectrum.n);
            out.entries.push_back({t, prof.to_descriptor(), 0});
          }
      return out;
    }
    case SpectrumKind::MORAVA: {
      if (page) throw no_oracle();
      for (std::int64_t w = region.wmin; w <= region.wmax; ++w)
        for (std::int64_t p = region.pmin; p <= region.pmax; ++p)
          for (std::int64_t q : slices(p, w, false, true)) {
            const TriDegree t{p, q, w};
            out.entries.push_back({t, kn_einfty_oracle(spectrum.n, t, base), 0});
          }
      return out;
    }
    default: {
      if (page) throw no_oracle();
      const RingSpec ring = spectrum.ring();
      for (std::int64_t w = region.wmin; w <= region.wmax; ++w)
        for (std::int64_t p = region.pmin; p <= region.pmax; ++p) {
          const auto basis = presentation_basis(spectrum, p, w);
          for (std::int64_t q : slices(p, w, false))
            out.entries.push_back({{p, q, w}, presentation_group(basis, q, ring), 0});
        }
      return out;
    }
  }
}

std::vector<Mismatch> compare_pages(const Page& engine, const Page& oracle) {
  std::map<TriDegree, std::pair<const GroupDescriptor*, const GroupDescriptor*>> joined;
  for (const auto& e : engine.entries) joined[e.tri].first = &e.group;
  for (const auto& e : oracle.entries) joined[e.tri].second = &e.group;
  const GroupDescriptor trivial;
  std::vector<Mismatch> out;
  for (const auto& [tri, pair] : joined) {
    const GroupDescriptor& a = pair.first ? *pair.first : trivial;
    const GroupDescriptor& b = pair.second ? *pair.second : trivial;
    if (!(OrderProfile::of(a) == OrderProfile::of(b))) out.push_back({tri, a.to_string(), b.to_string()});
  }
  return out;
}

}  // namespace slicess
