#include <algorithm>

#include "slicess/error.hpp"
#include "slicess/int_matrix.hpp"

namespace slicess {

namespace {

using Column = std::vector<BigInt>;

std::vector<Column> to_columns(const IntMatrix& m) {
  std::vector<Column> cols(m.cols(), Column(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cols[c][r] = m.at(r, c);
  return cols;
}

IntMatrix from_columns(const std::vector<Column>& cols, std::size_t rows, std::size_t first, std::size_t count) {
  IntMatrix m(rows, count);
  for (std::size_t c = 0; c < count; ++c)
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[first + c][r]);
  return m;
}

void axpy(Column& target, const BigInt& factor, const Column& source) {
  for (std::size_t i = 0; i < target.size(); ++i)
    if (source[i] != 0) target[i] -= factor * source[i];
}

void negate(Column& c) {
  for (auto& v : c) v = -v;
}

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  std::vector<Column> a = to_columns(input.lifted());
  std::vector<Column> u(n, Column(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  ColumnEchelon out;
  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (a[j][row] != 0 && (best == n || abs_value(a[j][row]) < abs_value(a[best][row]))) best = j;
      if (best == n) break;
      std::swap(a[col], a[best]);
      std::swap(u[col], u[best]);
      bool cleared = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (a[j][row] == 0) continue;
        BigInt q = a[j][row] / a[col][row];
        axpy(a[j], q, a[col]);
        axpy(u[j], q, u[col]);
        if (a[j][row] != 0) cleared = false;
      }
      if (cleared) {
        if (a[col][row] < 0) {
          negate(a[col]);
          negate(u[col]);
        }
        out.pivot_rows.push_back(row);
        ++col;
        break;
      }
    }
  }
  out.rank = col;
  out.reduced = from_columns(a, m, 0, n);
  out.transform = from_columns(u, n, 0, n);
  return out;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  ColumnEchelon e = column_echelon(generators);
  return e.reduced.column_block(0, e.rank);
}

IntMatrix integer_kernel(const IntMatrix& input) {
  ColumnEchelon e = column_echelon(input);
  return e.transform.column_block(e.rank, input.cols() - e.rank);
}

IntMatrix kernel_lattice(const IntMatrix& input) {
  if (input.modulus() == 0) return integer_kernel(input);
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix augmented(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented.set(r, c, input.at(r, c));
    augmented.set(r, n + r, input.modulus());
  }
  IntMatrix k = integer_kernel(augmented);
  IntMatrix projected(n, k.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) projected.set(r, c, k.at(r, c));
  return lattice_basis(projected);
}

IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& vectors) {
  if (basis.rows() != vectors.rows()) throw Error(ErrorKind::SHAPE_MISMATCH, "basis and vectors differ in length");
  const std::size_t m = basis.rows(), k = basis.cols();
  std::vector<std::size_t> pivots(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t r = 0;
    while (r < m && basis.at(r, j) == 0) ++r;
    if (r == m) throw Error(ErrorKind::INVALID_ARGUMENT, "zero column in lattice basis");
    pivots[j] = r;
  }
  std::vector<Column> basis_cols = to_columns(basis);
  IntMatrix out(k, vectors.cols());
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    Column residual(m);
    for (std::size_t r = 0; r < m; ++r) residual[r] = vectors.at(r, c);
    for (std::size_t j = 0; j < k; ++j) {
      const BigInt& pivot = basis.at(pivots[j], j);
      if (residual[pivots[j]] % pivot != 0) throw Error(ErrorKind::INVALID_ARGUMENT, "vector outside lattice");
      BigInt coeff = residual[pivots[j]] / pivot;
      if (coeff != 0) axpy(residual, coeff, basis_cols[j]);
      out.set(j, c, coeff);
    }
    for (const auto& v : residual)
      if (v != 0) throw Error(ErrorKind::INVALID_ARGUMENT, "vector outside lattice");
  }
  return out;
}

std::vector<BigInt> smith_invariants(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = input.at(r, c);
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t br = m, bc = n;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (a[r][c] != 0 && (br == m || abs_value(a[r][c]) < abs_value(a[br][bc]))) br = r, bc = c;
    if (br == m) break;
    std::swap(a[t], a[br]);
    for (auto& row : a) std::swap(row[t], row[bc]);
    while (true) {
      bool changed = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a[r][t] == 0) continue;
        BigInt q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < n; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          changed = true;
        }
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a[t][c] == 0) continue;
        BigInt q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < m; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          changed = true;
        }
      }
      if (changed) continue;
      std::size_t bad_row = m;
      for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == m) break;
      for (std::size_t c = t; c < n; ++c) a[t][c] += a[bad_row][c];
    }
    out.push_back(abs_value(a[t][t]));
  }
  return out;
}

GroupDescriptor cokernel_group(const IntMatrix& relations) {
  std::vector<BigInt> inv = smith_invariants(relations.lifted());
  GroupDescriptor g = GroupDescriptor::free(relations.rows() - inv.size());
  for (const auto& d : inv) {
    if (d == 1) continue;
    if ((d & (d - 1)) != 0) throw Error(ErrorKind::NOT_TWO_PRIMARY, "invariant factor " + d.str() + " is not a power of 2");
    g.add_cyclic(static_cast<int>(boost::multiprecision::msb(d)));
  }
  return g;
}

GroupDescriptor lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
  IntMatrix basis = lattice_basis(outer);
  return cokernel_group(coordinates_in_basis(basis, inner.lifted()));
}

GroupDescriptor subquotient_homology(const IntMatrix& d_in, const IntMatrix& d_out, const GroupDescriptor& middle) {
  if (middle.infinite()) throw Error(ErrorKind::INVALID_ARGUMENT, "middle group has infinite rank");
  const std::size_t m = middle.summand_count();
  if (d_in.rows() != m || d_out.cols() != m)
    throw Error(ErrorKind::SHAPE_MISMATCH, "matrix shapes do not match the middle generator count");
  std::vector<int> torsion = middle.torsion();
  IntMatrix relations(m, torsion.size());
  const std::size_t free_count = m - torsion.size();
  for (std::size_t i = 0; i < torsion.size(); ++i) relations.set(free_count + i, i, BigInt(1) << torsion[i]);

  const BigInt& modulus = d_out.modulus();
  if (!(d_out.lifted() * d_in.lifted()).with_modulus(modulus).is_zero())
    throw Error(ErrorKind::COMPOSITION_NONZERO, "d_out * d_in is nonzero");
  if (!(d_out.lifted() * relations).with_modulus(modulus).is_zero())
    throw Error(ErrorKind::SHAPE_MISMATCH, "d_out does not respect the middle group's relations");

  IntMatrix kernel = d_out.rows() == 0 ? IntMatrix::identity(m) : kernel_lattice(d_out);
  IntMatrix image(m, d_in.cols() + relations.cols());
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < d_in.cols(); ++c) image.set(r, c, d_in.at(r, c));
    for (std::size_t c = 0; c < relations.cols(); ++c) image.set(r, d_in.cols() + c, relations.at(r, c));
  }
  return lattice_quotient(kernel, image);
}

}  // namespace slicess
