#include "slicess/band.hpp"

#include <algorithm>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"

namespace slicess {

RealBand::RealBand(const EngineModel& model, const GradedBasisTable& basis, std::int64_t weight, std::int64_t pmin,
                   std::int64_t pmax, bool verify)
    : model_(model), basis_(basis), weight_(weight), pmin_(pmin), pmax_(pmax), verify_(verify) {
  if (pmin > pmax) throw Error(ErrorKind::INVALID_ARGUMENT, "empty stem window");
  if (!(basis.spec() == model.ring)) throw Error(ErrorKind::INVALID_ARGUMENT, "basis table ring does not match the model");
  std::size_t offset = 0;
  for (std::int64_t p = pmin - 1; p <= pmax + 1; ++p) {
    Column col;
    col.qlo = ceil_div(p, 2);
    const std::int64_t qhi = p - weight;
    if (!model.morava && col.qlo < 0) col.qlo = 0;
    if (!model.morava && qhi > basis.max_degree())
      throw Error(ErrorKind::REGION_TOO_SMALL, "ring basis table stops at degree " + std::to_string(basis.max_degree()) +
                                                   ", column needs " + std::to_string(qhi));
    for (std::int64_t q = col.qlo; q <= qhi; ++q) {
      const TriDegree tri{p, q, weight};
      auto mono = e1_monomial(model, tri);
      const std::uint64_t size = mono ? basis.count(q) : 0;
      if (size == 0) {
        col.slot.push_back(-1);
        continue;
      }
      Entry e;
      e.tri = tri;
      e.mono = *mono;
      e.order_log2 = real_order_log2(*mono, model.coeff);
      e.size = static_cast<std::uint32_t>(size);
      e.offset = offset;
      offset += size;
      col.slot.push_back(static_cast<std::int32_t>(entries_.size()));
      entries_.push_back(e);
    }
    columns_.push_back(std::move(col));
  }
  cycle_.assign(offset, 0);
  boundary_.resize(offset);
  for (const Entry& e : entries_) std::fill_n(boundary_.begin() + e.offset, e.size, static_cast<std::uint8_t>(e.order_log2));
}

const RealBand::Entry* RealBand::find(std::int64_t p, std::int64_t q) const {
  if (p < pmin_ - 1 || p > pmax_ + 1) return nullptr;
  const Column& col = columns_[p - (pmin_ - 1)];
  if (q < col.qlo || q - col.qlo >= static_cast<std::int64_t>(col.slot.size())) return nullptr;
  const std::int32_t slot = col.slot[q - col.qlo];
  return slot < 0 ? nullptr : &entries_[slot];
}

RealBand::Entry* RealBand::find_mutable(std::int64_t p, std::int64_t q) { return const_cast<Entry*>(find(p, q)); }

std::uint32_t RealBand::target_index(int k, std::int64_t q, std::uint32_t index) const {
  if (model_.morava) return 0;
  return basis_.times_prime_power(k, q, index);
}

std::int64_t RealBand::infinity_page() const { return std::max<std::int64_t>(2, pmax_ + 3 - weight_); }

void RealBand::run_to(std::int64_t page) {
  while (page_ < page) turn_page();
}

void RealBand::verify_page(std::int64_t r) {
  auto note = [&](const Entry& e, const std::string& what) {
    if (violations_.size() < 32) violations_.push_back("page " + std::to_string(r) + " at " + e.tri.to_string() + ": " + what);
  };
  for (const Entry& s : entries_) {
    auto rule = differential_rule(model_, r, s.mono);
    if (!rule) continue;
    const Entry* t = find(s.tri.p - 1, s.tri.q + r);
    if (!t) continue;
    const int nu = rule->scalar % 2 ? 0 : nu2(rule->scalar);
    const bool source_exact = s.tri.p <= pmax_;
    auto second = differential_rule(model_, r, t->mono);
    const Entry* u = second ? find(t->tri.p - 1, t->tri.q + r) : nullptr;
    const int nu_second = second ? (second->scalar % 2 ? 0 : nu2(second->scalar)) : 0;
    for (std::uint32_t i = 0; i < s.size; ++i) {
      const std::uint32_t ti = target_index(rule->generator_k, s.tri.q, i);
      const int z = cycle_[s.offset + i], b = boundary_[s.offset + i];
      const int v = z + nu;
      const int zt = cycle_[t->offset + ti], bt = boundary_[t->offset + ti];
      if (z >= b) continue;
      if (v < t->order_log2 && v < zt) note(s, "image is not a cycle");
      if (source_exact && b < s.order_log2 && b + nu < bt) note(s, "boundary maps outside boundaries");
      if (u && v < bt && t->tri.p >= pmin_) {
        const std::uint32_t ui = target_index(second->generator_k, t->tri.q, ti);
        const int w2 = v + nu_second;
        if (w2 < u->order_log2 && w2 < boundary_[u->offset + ui]) note(s, "d o d is nonzero");
      }
    }
  }
}

void RealBand::turn_page() {
  const std::int64_t r = page_;
  if (page_can_be_nonzero(model_, r)) {
    if (verify_) verify_page(r);
    for (std::int64_t p = pmax_ + 1; p >= pmin_; --p) {
      const Column& col = columns_[p - (pmin_ - 1)];
      for (std::int32_t slot : col.slot) {
        if (slot < 0) continue;
        Entry& s = entries_[slot];
        auto rule = differential_rule(model_, r, s.mono);
        if (!rule) continue;
        Entry* t = find_mutable(p - 1, s.tri.q + r);
        if (!t) {
          if (!model_.morava && s.tri.q + r > basis_.max_degree())
            throw Error(ErrorKind::REGION_TOO_SMALL, "differential leaves the ring basis table");
          continue;
        }
        const int nu = rule->scalar % 2 ? 0 : nu2(rule->scalar);
        const std::uint32_t* row = model_.morava ? nullptr : basis_.times_row(rule->generator_k, s.tri.q);
        bool changed = false;
        for (std::uint32_t i = 0; i < s.size; ++i) {
          const std::uint32_t ti = row ? row[i] : 0;
          std::uint8_t& z = cycle_[s.offset + i];
          std::uint8_t& bt = boundary_[t->offset + ti];
          const int v = z + nu;
          if (v >= bt) continue;  // image already a boundary (or zero)
          z = static_cast<std::uint8_t>(std::min<int>(boundary_[s.offset + i], z + (bt - v)));
          bt = static_cast<std::uint8_t>(v);
          changed = true;
        }
        if (changed) s.last_change = t->last_change = r;
      }
    }
  }
  ++page_;
}

OrderProfile RealBand::profile(const Entry& e) const {
  OrderProfile out;
  for (std::uint32_t i = 0; i < e.size; ++i) {
    const int d = boundary_[e.offset + i] - cycle_[e.offset + i];
    if (d > 0) out.add(d);
  }
  return out;
}

GroupDescriptor RealBand::group(const Entry& e, bool labeled) const {
  if (!labeled) return profile(e).to_descriptor();
  GroupDescriptor g;
  for (std::uint32_t i = 0; i < e.size; ++i) {
    const int z = cycle_[e.offset + i];
    const int d = boundary_[e.offset + i] - z;
    if (d <= 0) continue;
    std::string ring;
    if (!model_.morava) {
      ring = basis_.unrank(e.tri.q, i).label(model_.ring.symbol());
    } else {
      const auto j = e.tri.q / model_.ring.generator_degree(model_.ring.height);
      ring = j == 0 ? "1" : MultiIndex::generator(model_.ring.height, static_cast<int>(j)).label('v');
    }
    g.add_cyclic(d, class_label(z, e.mono, ring));
  }
  return g;
}

}  // namespace slicess
