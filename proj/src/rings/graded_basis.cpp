#include <functional>

#include "slicess/error.hpp"
#include "slicess/rings.hpp"

namespace slicess {

std::vector<MultiIndex> graded_basis(const RingSpec& spec, std::int64_t degree) {
  std::vector<MultiIndex> out;
  if (spec.kind == RingKind::MORAVA) {
    const std::int64_t d = spec.generator_degree(spec.height);
    if (degree % d == 0) out.push_back(MultiIndex::generator(spec.height, static_cast<int>(degree / d)));
    return out;
  }
  if (degree < 0) throw Error(ErrorKind::NEGATIVE_DEGREE, "degree " + std::to_string(degree) + " for " + spec.name());
  std::vector<int> gens;
  for (int i = 1; spec.admits(i) && spec.generator_degree(i) <= degree; ++i) gens.push_back(i);
  std::vector<int> exps(gens.size(), 0);
  std::function<void(int, std::int64_t)> walk = [&](int pos, std::int64_t remaining) {
    if (pos < 0) {
      if (remaining != 0) return;
      MultiIndex m;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (exps[i]) m.set(gens[i], exps[i]);
      out.push_back(std::move(m));
      return;
    }
    const std::int64_t d = spec.generator_degree(gens[pos]);
    for (std::int64_t e = remaining / d; e >= 0; --e) {
      exps[pos] = static_cast<int>(e);
      walk(pos - 1, remaining - e * d);
    }
    exps[pos] = 0;
  };
  walk(static_cast<int>(gens.size()) - 1, degree);
  return out;
}

LazardSplit split_prime_power_monomials(std::int64_t t) {
  LazardSplit split;
  for (auto& m : graded_basis(RingSpec::lazard(), t)) {
    bool prime_power = false;
    for (auto [i, e] : m.terms()) prime_power = prime_power || is_prime_power_index(i);
    (prime_power ? split.prime_power : split.rest).push_back(std::move(m));
  }
  return split;
}

namespace {

std::vector<std::uint64_t> partition_counts(std::int64_t t, bool skip_prime_powers) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(t) + 1, 0);
  c[0] = 1;
  for (std::int64_t part = 1; part <= t; ++part) {
    if (skip_prime_powers && is_prime_power_index(static_cast<int>(part))) continue;
    for (std::int64_t n = part; n <= t; ++n) c[n] += c[n - part];
  }
  return c;
}

}  // namespace

std::uint64_t lazard_rank(std::int64_t t) { return t < 0 ? 0 : partition_counts(t, false)[t]; }

std::uint64_t lazard_rank_without_prime_powers(std::int64_t t) { return t < 0 ? 0 : partition_counts(t, true)[t]; }

}  // namespace slicess
