#include <algorithm>
#include <functional>
#include <set>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"
#include "slicess/oracles.hpp"

namespace slicess {

namespace {

int lowest_prime_power_divisor(const RingSpec& ring, const MultiIndex& m, int limit) {
  for (int k = 1; k <= limit && k <= 30; ++k) {
    const int g = ring.prime_power_generator(k);
    if (g != 0 && m.divisible_by(g)) return k;
  }
  return 0;
}

std::string power(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

}  // namespace

std::string PresentationBasisElement::label(const RingSpec& spec) const {
  std::vector<std::string> parts;
  if (rho > 0) parts.push_back(power("rho", rho));
  if (big_u > 0) parts.push_back(power("U", big_u));
  if (z_level >= 0) parts.push_back("z[" + std::to_string(z_level) + "," + std::to_string(z_index) + "]");
  if (!ring.is_one()) parts.push_back(ring.label(spec.symbol()));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

std::string PresentationBasisElement::engine_label(const RingSpec& spec, int truncation) const {
  int u = truncation >= 0 ? big_u << truncation : 0;
  MultiIndex full = ring;
  int two_power = 0;
  if (z_level == 0) {
    two_power = 1;
    u += z_index;
  } else if (z_level > 0) {
    u += z_index << z_level;
    const int g = spec.prime_power_generator(z_level);
    full.set(g, full.exponent(g) + 1);
  }
  return class_label(two_power, RealMonomial{rho, 0, u}, full.label(spec.symbol()));
}

std::vector<PresentationBasisElement> presentation_basis(const SpectrumSpec& spectrum, std::int64_t p, std::int64_t w) {
  if (!spectrum.two_complete())
    throw Error(ErrorKind::INVALID_ARGUMENT, "presentations exist for MGL2, BPGL and BPGL<m> only");
  const RingSpec ring = spectrum.ring();
  const int truncation = spectrum.kind == SpectrumKind::BPGL_TRUNCATED ? spectrum.n : -1;
  const int reach = truncation >= 0 ? truncation : 30;
  std::vector<PresentationBasisElement> out;
  for (std::int64_t d = std::max<std::int64_t>(0, ceil_div(p, 2)); d <= p - w; ++d) {
    const int rho = static_cast<int>(2 * d - p);
    const std::int64_t s = p - d - w;
    if (s < 0 || s % 2) continue;
    const int c = static_cast<int>(s / 2);
    const int big_u = truncation >= 0 ? c >> truncation : 0;
    const int rest = truncation >= 0 ? c & ((1 << truncation) - 1) : c;
    for (const MultiIndex& m : graded_basis(ring, d)) {
      PresentationBasisElement e;
      e.rho = rho;
      e.big_u = big_u;
      e.slice = static_cast<int>(d);
      e.log2_order = rho == 0 ? 0 : 1;
      const int j = lowest_prime_power_divisor(ring, m, reach);
      if (rest == 0) {
        if (j > 0 && rho >= (2 << j) - 1) continue;
        e.ring = m;
      } else if (j > 0 && j <= nu2(static_cast<std::int64_t>(rest))) {
        if (rho >= (2 << j) - 1) continue;
        e.z_level = j;
        e.z_index = rest >> j;
        e.ring = m.divided_by(MultiIndex::generator(ring.prime_power_generator(j)));
      } else {
        if (rho >= 1) continue;
        e.z_level = 0;
        e.z_index = rest;
        e.ring = m;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

using Factors = std::vector<std::pair<int, int>>;

// One-step pair rewrites (results sorted); unchanged results skipped. The
// scalar rule z_{0,0} -> 2 is applied once at the end: applying it early would
// hide a factor the pair rule still needs.
std::vector<ZMonomial> rewrites(const ZMonomial& current) {
  std::vector<ZMonomial> out;
  const Factors& f = current.factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i == j) continue;
      const auto [k, l] = f[i];
      const auto [a, b] = f[j];
      if (a < k || b == 0) continue;
      ZMonomial next = current;
      next.factors[i] = {k, l + (b << (a - k))};
      next.factors[j] = {a, 0};
      std::sort(next.factors.begin(), next.factors.end());
      if (next == current) continue;
      out.push_back(std::move(next));
    }
  }
  return out;
}

ZMonomial sorted(const Factors& factors) {
  ZMonomial m;
  m.factors = factors;
  std::sort(m.factors.begin(), m.factors.end());
  return m;
}

ZMonomial finish(ZMonomial m) {
  const auto unit = std::make_pair(0, 0);
  m.two_power += static_cast<int>(std::count(m.factors.begin(), m.factors.end(), unit));
  std::erase(m.factors, unit);
  return m;
}

}  // namespace

ZMonomial normalize_z_monomial(const Factors& factors) {
  ZMonomial current = sorted(factors);
  for (std::size_t guard = 0; guard < 10000; ++guard) {
    auto next = rewrites(current);
    if (next.empty()) return finish(current);
    current = next.front();
  }
  throw Error(ErrorKind::NONTERMINATING_SUPPORT, "z-rewriting did not terminate");
}

std::vector<ZMonomial> all_normal_forms(const Factors& factors) {
  std::set<ZMonomial> seen, terminal;
  std::function<void(const ZMonomial&)> visit = [&](const ZMonomial& m) {
    if (!seen.insert(m).second) return;
    auto next = rewrites(m);
    if (next.empty()) terminal.insert(finish(m));
    for (const auto& n : next) visit(n);
  };
  visit(sorted(factors));
  return {terminal.begin(), terminal.end()};
}

}  // namespace slicess
