#pragma once

#include <cstdint>
#include <vector>

#include "slicess/rings.hpp"

namespace slicess {

// Ranked graded basis of a coefficient ring up to a maximal degree, with
// multiplication tables for the generators x_{2^k-1} (or v_k). The index of a
// monomial is its position in graded_basis order. Immutable after construction.
class GradedBasisTable {
 public:
  static constexpr int kMaxPrimePower = 7;

  GradedBasisTable(RingSpec spec, int max_degree);

  const RingSpec& spec() const { return spec_; }
  int max_degree() const { return max_degree_; }
  std::uint64_t count(std::int64_t degree) const;
  MultiIndex unrank(std::int64_t degree, std::uint64_t index) const;
  std::uint64_t rank(const MultiIndex& monomial) const;
  // Index of monomial * (prime-power generator k); needs degree + 2^k - 1 <= max_degree.
  std::uint32_t times_prime_power(int k, std::int64_t degree, std::uint32_t index) const;
  bool has_prime_power(int k) const { return k >= 1 && k <= kMaxPrimePower && spec_.prime_power_generator(k) != 0; }
  // Bit k-1 is set iff the prime-power generator k divides the monomial.
  std::uint8_t prime_power_mask(std::int64_t degree, std::uint32_t index) const;
  // Raw rows for hot loops; null when unavailable.
  const std::uint32_t* times_row(int k, std::int64_t degree) const;
  const std::uint8_t* mask_row(std::int64_t degree) const;

 private:
  std::uint64_t rank_exponents(const std::vector<int>& exps, std::int64_t degree) const;

  RingSpec spec_;
  int max_degree_;
  std::vector<int> gens_;                          // ascending generator indices (non-MORAVA)
  std::vector<std::int64_t> gen_degree_;
  std::vector<std::vector<std::uint64_t>> count_;  // count_[i][n]: monomials of degree n in the first i generators
  std::vector<int> prime_power_pos_;               // k -> position in gens_, or -1
  std::vector<std::vector<std::uint8_t>> mask_;    // per degree
  std::vector<std::vector<std::vector<std::uint32_t>>> times_;  // [k][degree][index]
};

}  // namespace slicess
