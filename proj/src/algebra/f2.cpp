#include "slicess/f2.hpp"

#include <algorithm>
#include <bit>

#include "slicess/error.hpp"

namespace slicess {

namespace {

int lead(std::uint64_t v) { return 63 - std::countl_zero(v); }

}  // namespace

F2Subspace F2Subspace::full(int dim) {
  F2Subspace s(dim);
  for (int i = 0; i < dim; ++i) s.insert(std::uint64_t{1} << i);
  return s;
}

F2Subspace F2Subspace::span(int dim, const std::vector<std::uint64_t>& vectors) {
  F2Subspace s(dim);
  for (auto v : vectors) s.insert(v);
  return s;
}

std::uint64_t F2Subspace::reduce(std::uint64_t v) const {
  for (auto b : basis_)
    if (v >> lead(b) & 1) v ^= b;
  return v;
}

void F2Subspace::insert(std::uint64_t v) {
  if (dim_ < 64 && (v >> dim_) != 0) throw Error(ErrorKind::INVALID_ARGUMENT, "vector outside ambient space");
  v = reduce(v);
  if (v == 0) return;
  const int l = lead(v);
  for (auto& b : basis_)
    if (b >> l & 1) b ^= v;
  basis_.push_back(v);
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
}

F2Subspace F2Subspace::sum(const F2Subspace& other) const {
  F2Subspace s = *this;
  for (auto v : other.basis_) s.insert(v);
  return s;
}

F2Subspace F2Subspace::intersect(const F2Subspace& other) const {
  // x = sum c_i b_i lies in other iff sum c_i reduce_other(b_i) = 0.
  std::vector<std::uint64_t> images;
  for (auto b : basis_) images.push_back(other.reduce(b));
  F2Subspace s(dim_);
  for (auto coeffs : f2_kernel(images)) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (coeffs >> i & 1) v ^= basis_[i];
    s.insert(v);
  }
  return s;
}

bool F2Subspace::is_subspace_of(const F2Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](std::uint64_t b) { return other.contains(b); });
}

std::string F2Subspace::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ",";
    for (int bit = 0; bit < dim_; ++bit) out += (basis_[i] >> bit & 1) ? '1' : '0';
  }
  return out + ">";
}

std::vector<std::uint64_t> f2_kernel(const std::vector<std::uint64_t>& images) {
  if (images.size() > 64) throw Error(ErrorKind::INVALID_ARGUMENT, "too many generators for packed kernel");
  // Row-reduce pairs (image, coefficient vector); rows whose image vanishes span the kernel.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for (std::size_t i = 0; i < images.size(); ++i) rows.emplace_back(images[i], std::uint64_t{1} << i);
  std::vector<std::uint64_t> kernel;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pivots;
  for (auto [img, coeff] : rows) {
    for (auto [pimg, pcoeff] : pivots)
      if (img >> lead(pimg) & 1) img ^= pimg, coeff ^= pcoeff;
    if (img == 0) {
      kernel.push_back(coeff);
    } else {
      pivots.emplace_back(img, coeff);
      std::sort(pivots.begin(), pivots.end(), std::greater<>());
    }
  }
  return kernel;
}

}  // namespace slicess
