#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slicess {

// Subspace of F_2^dim (dim <= 64), vectors packed into bits.
class F2Subspace {
 public:
  F2Subspace() = default;
  explicit F2Subspace(int dim) : dim_(dim) {}
  static F2Subspace full(int dim);
  static F2Subspace span(int dim, const std::vector<std::uint64_t>& vectors);

  int ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  // Canonical residue of v modulo the subspace.
  std::uint64_t reduce(std::uint64_t v) const;
  void insert(std::uint64_t v);
  const std::vector<std::uint64_t>& basis() const { return basis_; }

  F2Subspace sum(const F2Subspace& other) const;
  F2Subspace intersect(const F2Subspace& other) const;
  bool is_subspace_of(const F2Subspace& other) const;
  std::string to_string() const;

  friend bool operator==(const F2Subspace& a, const F2Subspace& b) {
    return a.dim_ == b.dim_ && a.is_subspace_of(b) && b.is_subspace_of(a);
  }

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> basis_;  // distinct leading bits, fully reduced
};

// Kernel of the F_2-linear map sending basis vector i of F_2^source_dim to images[i].
std::vector<std::uint64_t> f2_kernel(const std::vector<std::uint64_t>& images);

}  // namespace slicess
