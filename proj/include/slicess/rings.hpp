#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace slicess {

enum class RingKind { LAZARD, BP, BP_TRUNCATED, MORAVA };

// Coefficient ring of a spectrum: L_* = Z[x_1, x_2, ...] with |x_i| = i, the BP
// coefficients Z_(2)[v_1, v_2, ...] with |v_i| = 2^i - 1, the truncation to
// v_1..v_m, or F_2[v_m^{+-1}].
struct RingSpec {
  RingKind kind = RingKind::LAZARD;
  int height = 0;  // m for BP_TRUNCATED(m) and MORAVA(m)

  static RingSpec lazard() { return {RingKind::LAZARD, 0}; }
  static RingSpec bp() { return {RingKind::BP, 0}; }
  static RingSpec bp_truncated(int m);
  static RingSpec morava(int m);

  bool admits(int index) const;
  std::int64_t generator_degree(int index) const;
  char symbol() const { return kind == RingKind::LAZARD ? 'x' : 'v'; }
  // Generator of degree 2^k - 1 that carries d^{2^k - 1}: x_{2^k-1} or v_k; 0 when absent.
  int prime_power_generator(int k) const;
  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Finitely supported exponent vector over generator indices >= 1. Exponents
// are nonzero; negative exponents only occur for MORAVA.
class MultiIndex {
 public:
  MultiIndex() = default;
  static MultiIndex generator(int index, int exponent = 1);
  static MultiIndex from_exponents(const std::vector<std::pair<int, int>>& terms);

  int exponent(int index) const;
  void set(int index, int exponent);
  bool is_one() const { return terms_.empty(); }
  bool divisible_by(int index) const { return exponent(index) > 0; }
  std::int64_t degree(const RingSpec& spec) const;
  const std::vector<std::pair<int, int>>& terms() const { return terms_; }
  std::string label(char symbol) const;

  MultiIndex operator*(const MultiIndex& other) const;
  // Exact quotient; throws when other does not divide this (outside MORAVA).
  MultiIndex divided_by(const MultiIndex& other) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::pair<int, int>> terms_;  // ascending index
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const;
};

// All monomials of the given degree, lexicographic on exponent vectors with the
// highest generator index compared first, larger exponents first.
std::vector<MultiIndex> graded_basis(const RingSpec& spec, std::int64_t degree);

struct LazardSplit {
  std::vector<MultiIndex> prime_power;  // some x_{2^k-1} divides (L'_t)
  std::vector<MultiIndex> rest;         // no x_{2^k-1} divides (L''_t)
};
LazardSplit split_prime_power_monomials(std::int64_t t);

// Rank of L_t (partition count), by dynamic programming.
std::uint64_t lazard_rank(std::int64_t t);
std::uint64_t lazard_rank_without_prime_powers(std::int64_t t);

bool is_prime_power_index(int index);  // index = 2^k - 1, k >= 1

}  // namespace slicess
