#include "slicess/dense.hpp"

#include <algorithm>
#include <numeric>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"

namespace slicess {

namespace {

IntMatrix concat_columns(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
  }
  return out;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t count) {
  IntMatrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

std::uint32_t ring_target(const EngineModel& model, const GradedBasisTable& basis, int k, std::int64_t q, std::uint32_t i) {
  return model.morava ? 0 : basis.times_prime_power(k, q, i);
}

}  // namespace

IntMatrix synthesize_differential(const EngineModel& model, const GradedBasisTable& basis, std::int64_t r,
                                  const TriDegree& source) {
  auto mono = e1_monomial(model, source);
  if (!mono) return {};
  const std::uint64_t source_size = basis.count(source.q);
  const TriDegree target{source.p - 1, source.q + r, source.w};
  auto target_mono = e1_monomial(model, target);
  auto rule = differential_rule(model, r, *mono);
  if (!target_mono) return IntMatrix(0, source_size);
  const int order = real_order_log2(*target_mono, model.coeff);
  IntMatrix d(basis.count(target.q), source_size, BigInt(1) << order);
  if (!rule || !(rule->target == *target_mono)) return d;
  for (std::uint32_t i = 0; i < source_size; ++i)
    d.set(ring_target(model, basis, rule->generator_k, source.q, i), i, BigInt(rule->scalar));
  return d;
}

DenseLatticeRun::DenseLatticeRun(const EngineModel& model, const GradedBasisTable& basis, std::int64_t weight,
                                 std::int64_t pmin, std::int64_t pmax)
    : model_(model), basis_(basis), weight_(weight), pmin_(pmin), pmax_(pmax) {
  for (std::int64_t p = pmin - 1; p <= pmax + 1; ++p) {
    for (std::int64_t q = std::max<std::int64_t>(ceil_div(p, 2), model.morava ? ceil_div(p, 2) : 0); q <= p - weight; ++q) {
      const TriDegree tri{p, q, weight};
      auto mono = e1_monomial(model, tri);
      if (!mono || basis.count(q) == 0) continue;
      if (!model.morava && q > basis.max_degree()) throw Error(ErrorKind::REGION_TOO_SMALL, "ring basis table too small");
      Term t;
      t.tri = tri;
      t.mono = *mono;
      t.order_log2 = real_order_log2(*mono, model.coeff);
      const std::size_t n = basis.count(q);
      t.cycles = IntMatrix::identity(n);
      t.boundaries = IntMatrix(n, n);
      for (std::size_t i = 0; i < n; ++i) t.boundaries.set(i, i, BigInt(1) << t.order_log2);
      terms_.emplace(std::make_pair(p, q), std::move(t));
    }
  }
}

void DenseLatticeRun::turn_page() {
  const std::int64_t r = page_++;
  if (!page_can_be_nonzero(model_, r)) return;
  std::map<std::pair<std::int64_t, std::int64_t>, IntMatrix> new_cycles, new_boundaries;
  for (const auto& [key, s] : terms_) {
    auto it = terms_.find({key.first - 1, key.second + r});
    if (it == terms_.end()) continue;
    const Term& t = it->second;
    const IntMatrix d = synthesize_differential(model_, basis_, r, s.tri).lifted();
    if (d.is_zero()) continue;
    const IntMatrix image = d * s.cycles;
    // x = cycles * y with d x in B_r(target).
    const IntMatrix kernel = integer_kernel(concat_columns(image, t.boundaries));
    new_cycles[key] = lattice_basis(s.cycles * top_rows(kernel, s.cycles.cols()));
    new_boundaries[it->first] = lattice_basis(concat_columns(t.boundaries, image));
  }
  for (auto& [key, m] : new_cycles) terms_.at(key).cycles = std::move(m);
  for (auto& [key, m] : new_boundaries) terms_.at(key).boundaries = std::move(m);
}

GroupDescriptor DenseLatticeRun::group(std::int64_t p, std::int64_t q) const {
  if (p < pmin_ || p > pmax_) throw Error(ErrorKind::INVALID_ARGUMENT, "stem outside the exact window");
  auto it = terms_.find({p, q});
  if (it == terms_.end()) return {};
  return lattice_quotient(it->second.cycles, it->second.boundaries);
}

std::vector<TriDegree> DenseLatticeRun::window() const {
  std::vector<TriDegree> out;
  for (const auto& [key, t] : terms_)
    if (key.first >= pmin_ && key.first <= pmax_) out.push_back(t.tri);
  return out;
}

namespace {

struct Presentation {
  std::vector<std::uint32_t> classes;  // ring indices of live classes, canonical order
  std::vector<int> cycle;              // z of each live class
  std::vector<int> order;              // b - z
  GroupDescriptor group;
};

Presentation present(const RealBand& band, const RealBand::Entry* e) {
  Presentation out;
  if (!e) return out;
  std::vector<std::uint32_t> live;
  for (std::uint32_t i = 0; i < e->size; ++i)
    if (band.state(*e, i).cycle < band.state(*e, i).boundary) live.push_back(i);
  std::stable_sort(live.begin(), live.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto sa = band.state(*e, a), sb = band.state(*e, b);
    return sa.boundary - sa.cycle < sb.boundary - sb.cycle;
  });
  for (std::uint32_t i : live) {
    auto s = band.state(*e, i);
    out.classes.push_back(i);
    out.cycle.push_back(s.cycle);
    out.order.push_back(s.boundary - s.cycle);
    out.group.add_cyclic(s.boundary - s.cycle);
  }
  return out;
}

// d^r between presentations. With scale_rows, row j is multiplied by
// 2^(top - order_j) so a single modulus 2^top reads every target summand.
IntMatrix presented_map(const RealBand& band, const RealBand::Entry* source, const Presentation& from,
                        const Presentation& to, std::int64_t r, bool scale_rows) {
  const int top = to.order.empty() ? 0 : *std::max_element(to.order.begin(), to.order.end());
  IntMatrix m(to.classes.size(), from.classes.size(), scale_rows ? BigInt(1) << top : BigInt(0));
  if (!source || to.classes.empty() || from.classes.empty()) return m;
  auto rule = differential_rule(band.model(), r, source->mono);
  if (!rule) return m;
  const int nu = rule->scalar % 2 ? 0 : nu2(rule->scalar);
  const BigInt odd = BigInt(rule->scalar >> nu);
  for (std::size_t c = 0; c < from.classes.size(); ++c) {
    const std::uint32_t target_class =
        ring_target(band.model(), band.basis(), rule->generator_k, source->tri.q, from.classes[c]);
    auto pos = std::find(to.classes.begin(), to.classes.end(), target_class);
    if (pos == to.classes.end()) continue;
    const std::size_t row = static_cast<std::size_t>(pos - to.classes.begin());
    const int shift = from.cycle[c] + nu - to.cycle[row];
    if (shift < 0) throw Error(ErrorKind::SHAPE_MISMATCH, "differential leaves the cycles of its target");
    BigInt value = odd << shift;
    if (scale_rows) value <<= (top - to.order[row]);
    m.set(row, c, value);
  }
  return m;
}

}  // namespace

GroupDescriptor homology_of_page(const RealBand& band, std::int64_t p, std::int64_t q) {
  const std::int64_t r = band.page();
  const RealBand::Entry* middle = band.find(p, q);
  if (!middle) return {};
  const RealBand::Entry* source = band.find(p + 1, q - r);
  const RealBand::Entry* target = band.find(p - 1, q + r);
  const Presentation from = present(band, source);
  const Presentation here = present(band, middle);
  const Presentation to = present(band, target);
  const IntMatrix d_in = presented_map(band, source, from, here, r, false);
  const IntMatrix d_out = presented_map(band, middle, here, to, r, true);
  return subquotient_homology(d_in, d_out, here.group);
}

}  // namespace slicess
