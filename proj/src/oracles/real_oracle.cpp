#include <algorithm>
#include <bit>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"
#include "slicess/oracles.hpp"

namespace slicess {

namespace {

constexpr int kMaskBits = 7;
constexpr int kUnboundedLevel = 62;

// rho^a x_K lies in the ideal generated by rho^{2^{j+1}-1} x_{2^j-1}, j <= level.
bool in_rho_ideal(int rho, std::uint32_t mask, int level) {
  for (int j = 1; j <= std::min(level, kMaskBits); ++j)
    if ((mask >> (j - 1) & 1U) && rho >= (2 << j) - 1) return true;
  return false;
}

int ring_truncation(const RingSpec& ring) {
  if (ring.kind == RingKind::MORAVA) throw Error(ErrorKind::INVALID_ARGUMENT, "Morava rings have their own oracle");
  return ring.kind == RingKind::BP_TRUNCATED ? ring.height : -1;
}

std::uint32_t mask_of(const RingSpec& ring, const MultiIndex& m) {
  std::uint32_t mask = 0;
  for (int k = 1; k <= kMaskBits; ++k) {
    const int g = ring.prime_power_generator(k);
    if (g != 0 && m.divisible_by(g)) mask |= 1U << (k - 1);
  }
  return mask;
}

}  // namespace

OracleClass real_oracle_class(int rho, int tau, int u, std::uint32_t mask, int level, int n, int truncation,
                              J0Reading reading) {
  const int limit = truncation >= 0 ? std::min(level, truncation) : level;
  const int full = (rho == 0 && tau == 0) ? n : 1;
  if (u == 0 || nu2(static_cast<std::int64_t>(u)) >= limit)
    return in_rho_ideal(rho, mask, limit) ? OracleClass{} : OracleClass{0, full};
  const int m = nu2(static_cast<std::int64_t>(u));
  if (mask & ((1U << m) - 1)) return in_rho_ideal(rho, mask, m) ? OracleClass{} : OracleClass{0, full};
  if (rho == 0 && tau == 0 && !(reading == J0Reading::ZERO_IDEAL && m == 0)) return {1, n - 1};
  return {};
}

MaskHistogram::MaskHistogram(const RingSpec& ring, int max_degree) : ring_(ring), max_degree_(max_degree) {
  ring_truncation(ring);
  counts_.assign(max_degree + 1, std::vector<std::uint64_t>(1U << kMaskBits, 0));
  counts_[0][0] = 1;
  for (int i = 1; ring.admits(i) && ring.generator_degree(i) <= max_degree; ++i) {
    const auto deg = ring.generator_degree(i);
    std::uint32_t bit = 0;
    for (int k = 1; k <= kMaskBits; ++k)
      if (ring.prime_power_generator(k) == i) bit = 1U << (k - 1);
    for (std::int64_t d = deg; d <= max_degree; ++d)
      for (std::uint32_t mask = 0; mask < (1U << kMaskBits); ++mask)
        if (counts_[d - deg][mask]) counts_[d][mask | bit] += counts_[d - deg][mask];
  }
}

const std::vector<std::uint64_t>& MaskHistogram::at(std::int64_t degree) const {
  if (degree < 0 || degree > max_degree_) throw Error(ErrorKind::REGION_TOO_SMALL, "histogram degree out of range");
  return counts_[degree];
}

std::uint64_t MaskHistogram::total(std::int64_t degree) const {
  std::uint64_t sum = 0;
  for (auto c : at(degree)) sum += c;
  return sum;
}

RealOracle::RealOracle(const RingSpec& ring, int max_degree, J0Reading reading)
    : histogram_(ring, max_degree), reading_(reading), truncation_(ring_truncation(ring)) {}

OrderProfile RealOracle::profile_at_level(int level, const TriDegree& t, int n) const {
  OrderProfile out;
  auto mono = real_monomial(2 * t.q - t.p, t.q - t.w, Coefficient::mod2n(n));
  if (!mono || t.q < 0) return out;
  const auto& hist = histogram_.at(t.q);
  for (std::uint32_t mask = 0; mask < hist.size(); ++mask) {
    if (!hist[mask]) continue;
    const OracleClass c = real_oracle_class(mono->rho, mono->tau, mono->u, mask, level, n, truncation_, reading_);
    if (c.order > 0) out.add(c.order, hist[mask]);
  }
  return out;
}

GroupDescriptor RealOracle::group_at_level(int level, const TriDegree& t, int n) const {
  GroupDescriptor out;
  auto mono = real_monomial(2 * t.q - t.p, t.q - t.w, Coefficient::mod2n(n));
  if (!mono || t.q < 0) return out;
  const RingSpec& ring = histogram_.ring();
  for (const MultiIndex& m : graded_basis(ring, t.q)) {
    const OracleClass c =
        real_oracle_class(mono->rho, mono->tau, mono->u, mask_of(ring, m), level, n, truncation_, reading_);
    if (c.order > 0) out.add_cyclic(c.order, class_label(c.two_power, *mono, m.label(ring.symbol())));
  }
  return out;
}

OrderProfile RealOracle::er_profile(std::int64_t r, const TriDegree& t, int n) const {
  return profile_at_level(binary_length(r) - 1, t, n);
}
OrderProfile RealOracle::einfty_profile(const TriDegree& t, int n) const { return profile_at_level(kUnboundedLevel, t, n); }
GroupDescriptor RealOracle::er(std::int64_t r, const TriDegree& t, int n) const {
  return group_at_level(binary_length(r) - 1, t, n);
}
GroupDescriptor RealOracle::einfty(const TriDegree& t, int n) const { return group_at_level(kUnboundedLevel, t, n); }

GroupDescriptor er_real_oracle(std::int64_t r, const TriDegree& t, int n, J0Reading reading) {
  if (r < 1 || n < 2) throw Error(ErrorKind::INVALID_ARGUMENT, "need r >= 1 and n >= 2");
  return RealOracle(RingSpec::lazard(), static_cast<int>(std::max<std::int64_t>(t.q, 0)), reading).er(r, t, n);
}

GroupDescriptor einfty_real_oracle(const TriDegree& t, int n, J0Reading reading) {
  if (n < 2) throw Error(ErrorKind::INVALID_ARGUMENT, "need n >= 2");
  return RealOracle(RingSpec::lazard(), static_cast<int>(std::max<std::int64_t>(t.q, 0)), reading).einfty(t, n);
}

}  // namespace slicess
