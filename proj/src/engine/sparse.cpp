#include "slicess/sparse.hpp"

#include <algorithm>
#include <bit>

#include "slicess/arith.hpp"

namespace slicess {

namespace {

int scalar_valuation(std::int64_t scalar) { return scalar % 2 ? 0 : nu2(scalar); }

}  // namespace

std::int64_t SparseRealEngine::previous_page(std::int64_t page) const {
  for (std::int64_t r = page - 1; r >= 1; --r)
    if (page_can_be_nonzero(model_, r)) return r;
  return 0;
}

MultiIndex SparseRealEngine::times_generator(const MultiIndex& ring, int k, int exponent) const {
  const int index = model_.ring.prime_power_generator(k);
  MultiIndex out = ring;
  out.set(index, ring.exponent(index) + exponent);
  return out;
}

SparseRealEngine::State SparseRealEngine::state(const RealMonomial& mono, const MultiIndex& ring, std::int64_t page) {
  const std::int64_t r = previous_page(page);
  if (r == 0) {
    const int e = real_order_log2(mono, model_.coeff);
    return {0, e};
  }
  const auto key = std::make_tuple(mono.rho, mono.tau, mono.u, ring, r);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const State before = state(mono, ring, r);
  State after = before;
  if (auto rule = differential_rule(model_, r, mono)) {
    const State target = state(rule->target, times_generator(ring, rule->generator_k, 1), r);
    const int v = before.cycle + scalar_valuation(rule->scalar);
    if (v < target.boundary) after.cycle = std::min(before.boundary, before.cycle + (target.boundary - v));
  }
  const int k = std::countr_zero(static_cast<std::uint64_t>(r + 1));
  const int index = model_.ring.prime_power_generator(k);
  const bool divisible = model_.morava || ring.exponent(index) > 0;
  RealMonomial source = mono;
  source.rho -= (2 << k) - 1;
  if (model_.morava)
    source.tau += 1 << k;
  else
    source.u += 1 << (k - 1);
  if (divisible && source.rho >= 0) {
    if (auto rule = differential_rule(model_, r, source); rule && rule->target == mono) {
      const State s = state(source, times_generator(ring, k, -1), r);
      const int v = s.cycle + scalar_valuation(rule->scalar);
      after.boundary = std::min(after.boundary, v);
    }
  }
  memo_.emplace(key, after);
  return after;
}

bool SparseRealEngine::differential_nonzero(const RealMonomial& mono, const MultiIndex& ring, std::int64_t page) {
  auto rule = differential_rule(model_, page, mono);
  if (!rule) return false;
  const State s = state(mono, ring, page);
  if (!s.alive()) return false;
  const State t = state(rule->target, times_generator(ring, rule->generator_k, 1), page);
  return s.cycle + scalar_valuation(rule->scalar) < t.boundary;
}

}  // namespace slicess
