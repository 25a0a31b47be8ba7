#include "slicess/structure.hpp"

#include <map>
#include <random>
#include <tuple>

#include "slicess/arith.hpp"
#include "slicess/number_field.hpp"

namespace slicess {

namespace {

struct AlgebraMonomial {
  int rho = 0, tau = 0, u = 0;
  MultiIndex ring;
  friend auto operator<=>(const AlgebraMonomial&, const AlgebraMonomial&) = default;
};

// Element of Z/2^n[rho, tau, u]/(2 rho, 2 tau, tau^2) tensor the ring.
using Element = std::map<AlgebraMonomial, std::int64_t>;

void add_term(Element& e, AlgebraMonomial m, std::int64_t c, int n) {
  if (m.tau >= 2) return;
  const std::int64_t modulus = (m.rho > 0 || m.tau > 0) ? 2 : (std::int64_t{1} << n);
  std::int64_t& slot = e[m];
  slot = ((slot + c) % modulus + modulus) % modulus;
  if (slot == 0) e.erase(m);
}

Element multiply(const Element& a, const Element& b, int n) {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      add_term(out, {ma.rho + mb.rho, ma.tau + mb.tau, ma.u + mb.u, ma.ring * mb.ring}, ca * cb, n);
  return out;
}

Element add(const Element& a, const Element& b, int n) {
  Element out = a;
  for (const auto& [m, c] : b) add_term(out, m, c, n);
  return out;
}

Element apply_rule(const EngineModel& model, std::int64_t r, const Element& x) {
  Element out;
  for (const auto& [m, c] : x) {
    auto rule = differential_rule(model, r, RealMonomial{m.rho, m.tau, m.u});
    if (!rule) continue;
    MultiIndex ring = m.ring;
    const int g = model.ring.prime_power_generator(rule->generator_k);
    ring.set(g, ring.exponent(g) + 1);
    add_term(out, {rule->target.rho, rule->target.tau, rule->target.u, ring}, c * rule->scalar, model.coeff.n);
  }
  return out;
}

}  // namespace

std::vector<std::string> leibniz_failures(const EngineModel& model, int k, std::uint64_t seed, int samples,
                                          std::uint64_t& checked) {
  std::vector<std::string> failures;
  if (model.morava || model.ring.prime_power_generator(k) == 0) return failures;
  const int n = model.coeff.n;
  const std::int64_t r = (std::int64_t{1} << k) - 1;
  std::mt19937_64 rng(seed);
  auto pick = [&](int hi) { return static_cast<int>(rng() % static_cast<std::uint64_t>(hi + 1)); };
  auto random_class = [&] {
    AlgebraMonomial m;
    m.rho = pick(2) == 0 ? 0 : pick(6);
    m.tau = pick(3) == 0 ? 1 : 0;
    m.u = pick(5) << (k - 1);
    for (int g = 1; g <= 4; ++g)
      if (model.ring.admits(g) && pick(2) == 0) m.ring.set(g, 1 + pick(1));
    Element e;
    add_term(e, m, 1 + pick(3), n);
    return e;
  };
  for (int i = 0; i < samples; ++i) {
    const Element a = random_class(), b = random_class();
    const Element lhs = apply_rule(model, r, multiply(a, b, n));
    const Element rhs = add(multiply(apply_rule(model, r, a), b, n), multiply(a, apply_rule(model, r, b), n), n);
    ++checked;
    if (lhs != rhs && failures.size() < 16) failures.push_back("Leibniz fails for sample " + std::to_string(i));
  }
  return failures;
}

std::vector<std::string> tridegree_failures(const RealBand& band, std::uint64_t& checked) {
  std::vector<std::string> failures;
  const EngineModel& model = band.model();
  for (const auto& e : band.entries()) {
    if (!band.in_window(e)) continue;
    for (std::int64_t r = 1; r <= band.infinity_page(); ++r) {
      auto rule = differential_rule(model, r, e.mono);
      if (!rule) continue;
      ++checked;
      const TriDegree target{e.tri.p - 1, e.tri.q + r, e.tri.w};
      auto expected = e1_monomial(model, target);
      if (!expected || !(*expected == rule->target))
        failures.push_back("d^" + std::to_string(r) + " from " + e.tri.to_string() + " misses " + target.to_string());
    }
  }
  return failures;
}

std::vector<std::string> diagonal_failures(const RealBand& band, std::uint64_t& checked) {
  std::vector<std::string> failures;
  const EngineModel& model = band.model();
  for (const auto& e : band.entries()) {
    if (!band.in_window(e)) continue;
    for (std::int64_t r = 1; r <= band.infinity_page(); ++r) {
      if (!page_can_be_nonzero(model, r)) continue;
      ++checked;
      const bool diagonal = e.mono.tau == 0 && e.mono.u == 0;
      auto rule = differential_rule(model, r, e.mono);
      if (diagonal && rule) failures.push_back("d^" + std::to_string(r) + " nonzero on diagonal class at " + e.tri.to_string());
      if (!rule) continue;
      // rho-linearity: d(rho * m) = rho * d(m).
      RealMonomial shifted = e.mono;
      shifted.rho += 1;
      auto moved = differential_rule(model, r, shifted);
      if (!moved || moved->scalar != rule->scalar || moved->target.rho != rule->target.rho + 1 ||
          moved->target.tau != rule->target.tau || moved->target.u != rule->target.u)
        failures.push_back("d^" + std::to_string(r) + " is not rho-linear at " + e.tri.to_string());
    }
  }
  return failures;
}

std::vector<std::string> stabilization_failures(const RealBand& band, std::uint64_t& checked) {
  std::vector<std::string> failures;
  for (const auto& e : band.entries()) {
    if (!band.in_window(e)) continue;
    ++checked;
    // Slices run from ceil(p/2) (clipped at 0 unless v_n is inverted) up to p - w.
    std::int64_t lowest = ceil_div(e.tri.p, 2);
    if (!band.model().morava) lowest = std::max<std::int64_t>(0, lowest);
    const std::int64_t bound = std::max<std::int64_t>(1, 1 + (e.tri.p - e.tri.w) - lowest);
    if (band.stabilization_page(e) > bound)
      failures.push_back(e.tri.to_string() + " stabilizes at " + std::to_string(band.stabilization_page(e)) +
                         " > " + std::to_string(bound));
  }
  return failures;
}

std::vector<std::string> collapse_failures(std::shared_ptr<const CohomologyTable> table, int qmax, int max_ring_degree,
                                           std::uint64_t& checked) {
  std::vector<std::string> failures;
  NumberFieldEngine engine(table);
  for (int degree = 0; degree <= max_ring_degree; ++degree)
    for (const MultiIndex& m : graded_basis(RingSpec::lazard(), degree))
      for (int q = 0; q <= qmax; ++q)
        for (int p = 0; p <= q; ++p) {
          const FieldTerm term{p, q, m};
          ++checked;
          if (!(engine.einfty(term) == table->group(p, q)))
            failures.push_back("term (" + std::to_string(p) + "," + std::to_string(q) + "," + m.label('x') +
                               ") changed");
        }
  return failures;
}

}  // namespace slicess
