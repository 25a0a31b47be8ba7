#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "slicess/group.hpp"

namespace slicess {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix. A nonzero modulus means entries live in Z/modulus and
// are kept as canonical residues in [0, modulus).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, BigInt modulus = 0);

  static IntMatrix identity(std::size_t n, BigInt modulus = 0);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, BigInt modulus = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BigInt& modulus() const { return modulus_; }
  const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, BigInt value);
  bool is_zero() const;

  IntMatrix lifted() const;  // same entries, modulus dropped
  IntMatrix with_modulus(BigInt modulus) const;
  IntMatrix transposed() const;
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix operator*(const IntMatrix& other) const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  BigInt modulus_ = 0;
  std::vector<BigInt> entries_;
};

// Column echelon form over Z: reduced = input * transform with transform
// unimodular; the first `rank` columns have strictly increasing pivot rows
// (zero above the pivot, positive pivot) and the remaining columns are zero.
struct ColumnEchelon {
  IntMatrix reduced;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const IntMatrix& input);

// Basis (as columns) of the sublattice of Z^rows spanned by the columns.
IntMatrix lattice_basis(const IntMatrix& generators);
// Basis of {x in Z^cols : input * x = 0}, modulus ignored.
IntMatrix integer_kernel(const IntMatrix& input);
// Basis of {x : input * x = 0 mod modulus}; plain kernel when the modulus is 0.
IntMatrix kernel_lattice(const IntMatrix& input);
// Coordinates of each column of `vectors` in an echelon `basis` (from
// lattice_basis). Throws INVALID_ARGUMENT when a vector is outside the lattice.
IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& vectors);
// Nonzero Smith invariants d_1 | d_2 | ... of an integer matrix (modulus ignored).
std::vector<BigInt> smith_invariants(const IntMatrix& input);
// Z^rank / span(relations) as a group; relations given as columns.
GroupDescriptor cokernel_group(const IntMatrix& relations);
// Quotient of the lattice spanned by `outer` by its sublattice spanned by `inner`.
GroupDescriptor lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

// ker(d_out)/im(d_in) at the middle group. Middle generators are taken in the
// descriptor's canonical order; d_in is middle x source, d_out is target x middle
// with the target read as (Z/modulus(d_out))^rows.
GroupDescriptor subquotient_homology(const IntMatrix& d_in, const IntMatrix& d_out, const GroupDescriptor& middle);

}  // namespace slicess
