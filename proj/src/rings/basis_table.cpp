#include "slicess/basis_table.hpp"

#include <functional>

#include "slicess/error.hpp"

namespace slicess {

GradedBasisTable::GradedBasisTable(RingSpec spec, int max_degree) : spec_(spec), max_degree_(max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::NEGATIVE_DEGREE, "table degree bound");
  prime_power_pos_.assign(kMaxPrimePower + 1, -1);
  if (spec_.kind == RingKind::MORAVA) return;
  for (int i = 1; spec_.admits(i) && spec_.generator_degree(i) <= max_degree; ++i) {
    gens_.push_back(i);
    gen_degree_.push_back(spec_.generator_degree(i));
  }
  const std::size_t g = gens_.size();
  const std::size_t width = static_cast<std::size_t>(max_degree) + 1;
  count_.assign(g + 1, std::vector<std::uint64_t>(width, 0));
  count_[0][0] = 1;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t n = 0; n < width; ++n)
      count_[i + 1][n] = count_[i][n] + (n >= static_cast<std::size_t>(gen_degree_[i]) ? count_[i + 1][n - gen_degree_[i]] : 0);

  for (int k = 1; k <= kMaxPrimePower; ++k) {
    int index = spec_.prime_power_generator(k);
    for (std::size_t i = 0; i < g; ++i)
      if (gens_[i] == index) prime_power_pos_[k] = static_cast<int>(i);
  }
  mask_.assign(width, {});
  times_.assign(kMaxPrimePower + 1, std::vector<std::vector<std::uint32_t>>(width));
  std::vector<int> exps(g, 0);
  for (std::size_t d = 0; d < width; ++d) {
    const std::uint64_t n = count(static_cast<std::int64_t>(d));
    if (n > UINT32_MAX) throw Error(ErrorKind::INVALID_ARGUMENT, "graded piece too large");
    mask_[d].reserve(n);
    for (int k = 1; k <= kMaxPrimePower; ++k)
      if (prime_power_pos_[k] >= 0 && d + gen_degree_[prime_power_pos_[k]] < width) times_[k][d].reserve(n);
    std::function<void(int, std::int64_t)> walk = [&](int pos, std::int64_t remaining) {
      if (pos < 0) {
        if (remaining != 0) return;
        std::uint8_t mask = 0;
        for (int k = 1; k <= kMaxPrimePower; ++k) {
          const int p = prime_power_pos_[k];
          if (p < 0) continue;
          if (exps[p] > 0) mask |= static_cast<std::uint8_t>(1u << (k - 1));
          const std::int64_t target = static_cast<std::int64_t>(d) + gen_degree_[p];
          if (target <= max_degree_) {
            ++exps[p];
            times_[k][d].push_back(static_cast<std::uint32_t>(rank_exponents(exps, target)));
            --exps[p];
          }
        }
        mask_[d].push_back(mask);
        return;
      }
      // Positions above the largest generator of degree <= remaining hold exponent 0.
      for (std::int64_t e = remaining / gen_degree_[pos]; e >= 0; --e) {
        exps[pos] = static_cast<int>(e);
        walk(pos - 1, remaining - e * gen_degree_[pos]);
      }
      exps[pos] = 0;
    };
    walk(static_cast<int>(g) - 1, static_cast<std::int64_t>(d));
  }
}

std::uint64_t GradedBasisTable::count(std::int64_t degree) const {
  if (spec_.kind == RingKind::MORAVA) return degree % spec_.generator_degree(spec_.height) == 0 ? 1 : 0;
  if (degree < 0 || degree > max_degree_) return 0;
  return count_[gens_.size()][degree];
}

std::uint64_t GradedBasisTable::rank_exponents(const std::vector<int>& exps, std::int64_t degree) const {
  std::uint64_t r = 0;
  std::int64_t remaining = degree;
  for (int i = static_cast<int>(gens_.size()) - 1; i >= 0; --i) {
    // Monomials with a larger exponent at position i come first.
    const std::int64_t below = remaining - gen_degree_[i] * (exps[i] + 1);
    if (below >= 0) r += count_[i + 1][below];
    remaining -= gen_degree_[i] * exps[i];
  }
  return r;
}

std::uint64_t GradedBasisTable::rank(const MultiIndex& monomial) const {
  if (spec_.kind == RingKind::MORAVA) return 0;
  std::vector<int> exps(gens_.size(), 0);
  for (auto [i, e] : monomial.terms()) {
    if (!spec_.admits(i))
      throw Error(ErrorKind::INVALID_ARGUMENT, "monomial outside ring");
    std::size_t pos = 0;
    while (pos < gens_.size() && gens_[pos] != i) ++pos;
    if (pos == gens_.size()) throw Error(ErrorKind::INVALID_ARGUMENT, "monomial degree exceeds table");
    exps[pos] = e;
  }
  const std::int64_t d = monomial.degree(spec_);
  if (d > max_degree_) throw Error(ErrorKind::INVALID_ARGUMENT, "monomial degree exceeds table");
  return rank_exponents(exps, d);
}

MultiIndex GradedBasisTable::unrank(std::int64_t degree, std::uint64_t index) const {
  if (spec_.kind == RingKind::MORAVA) {
    if (count(degree) == 0 || index != 0) throw Error(ErrorKind::INVALID_ARGUMENT, "index out of range");
    return MultiIndex::generator(spec_.height, static_cast<int>(degree / spec_.generator_degree(spec_.height)));
  }
  if (index >= count(degree)) throw Error(ErrorKind::INVALID_ARGUMENT, "index out of range");
  MultiIndex m;
  std::int64_t remaining = degree;
  for (int i = static_cast<int>(gens_.size()) - 1; i >= 0; --i) {
    for (std::int64_t e = remaining / gen_degree_[i]; e >= 0; --e) {
      const std::uint64_t block = count_[i][remaining - gen_degree_[i] * e];
      if (index < block) {
        if (e) m.set(gens_[i], static_cast<int>(e));
        remaining -= gen_degree_[i] * e;
        break;
      }
      index -= block;
    }
  }
  return m;
}

std::uint32_t GradedBasisTable::times_prime_power(int k, std::int64_t degree, std::uint32_t index) const {
  if (spec_.kind == RingKind::MORAVA) return 0;
  return times_.at(k).at(degree).at(index);
}

std::uint8_t GradedBasisTable::prime_power_mask(std::int64_t degree, std::uint32_t index) const {
  if (spec_.kind == RingKind::MORAVA) return 0;
  return mask_[degree][index];
}

const std::uint32_t* GradedBasisTable::times_row(int k, std::int64_t degree) const {
  if (spec_.kind == RingKind::MORAVA || k < 1 || k > kMaxPrimePower || degree < 0 || degree > max_degree_) return nullptr;
  const auto& row = times_[k][degree];
  return row.size() == count(degree) && !row.empty() ? row.data() : nullptr;
}

const std::uint8_t* GradedBasisTable::mask_row(std::int64_t degree) const {
  if (spec_.kind == RingKind::MORAVA || degree < 0 || degree > max_degree_) return nullptr;
  return mask_[degree].data();
}

}  // namespace slicess
