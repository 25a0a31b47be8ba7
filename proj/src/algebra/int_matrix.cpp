#include "slicess/int_matrix.hpp"

#include <sstream>

#include "slicess/error.hpp"

namespace slicess {

namespace {

BigInt reduce(BigInt v, const BigInt& modulus) {
  if (modulus == 0) return v;
  v %= modulus;
  if (v < 0) v += modulus;
  return v;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, BigInt modulus)
    : rows_(rows), cols_(cols), modulus_(std::move(modulus)), entries_(rows * cols) {
  if (modulus_ < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "negative modulus");
}

IntMatrix IntMatrix::identity(std::size_t n, BigInt modulus) {
  IntMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, BigInt modulus) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols, std::move(modulus));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::SHAPE_MISMATCH, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void IntMatrix::set(std::size_t r, std::size_t c, BigInt value) { entries_[r * cols_ + c] = reduce(std::move(value), modulus_); }

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

IntMatrix IntMatrix::lifted() const {
  IntMatrix m = *this;
  m.modulus_ = 0;
  return m;
}

IntMatrix IntMatrix::with_modulus(BigInt modulus) const {
  IntMatrix m(rows_, cols_, std::move(modulus));
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = reduce(entries_[i], m.modulus_);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.entries_[c * rows_ + r] = at(r, c);
  return m;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m.entries_[r * count + c] = at(r, first + c);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::SHAPE_MISMATCH, "matrix product dimensions");
  IntMatrix m(rows_, other.cols_, modulus_ != 0 ? modulus_ : other.modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) m.entries_[r * other.cols_ + c] += a * other.at(k, c);
    }
  if (m.modulus_ != 0)
    for (auto& e : m.entries_) e = reduce(e, m.modulus_);
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? "," : "") << at(r, c);
    out << "]";
  }
  out << "]";
  if (modulus_ != 0) out << " mod " << modulus_;
  return out.str();
}

}  // namespace slicess
