#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slicess {

// A finitely generated 2-primary abelian group: free summands followed by
// cyclic summands Z/2^e in ascending order. Free summands stand for Z or Z_2
// depending on the coefficient context. Labels are optional; equality ignores
// them.
class GroupDescriptor {
 public:
  struct Summand {
    int log2_order = 0;  // 0 marks a free summand
    std::string label;
  };

  GroupDescriptor() = default;

  static GroupDescriptor trivial() { return {}; }
  static GroupDescriptor cyclic(int log2_order, std::string label = {});
  static GroupDescriptor free(std::uint64_t rank);
  static GroupDescriptor infinite_rank(const std::vector<int>& torsion = {});
  static GroupDescriptor from_orders(std::uint64_t free_rank, const std::vector<int>& torsion);

  void add_free(std::string label = {});
  void add_cyclic(int log2_order, std::string label = {});
  void add(const GroupDescriptor& other);
  void set_infinite(bool value) { infinite_ = value; }

  bool infinite() const { return infinite_; }
  std::uint64_t free_rank() const;
  std::vector<int> torsion() const;
  std::vector<std::string> generators() const;
  const std::vector<Summand>& summands() const { return summands_; }
  std::size_t summand_count() const { return summands_.size(); }
  bool labeled() const;
  bool is_trivial() const { return !infinite_ && summands_.empty(); }
  bool is_finite() const { return !infinite_ && free_rank() == 0; }
  std::int64_t log2_order() const;

  // Compact form such as "Z^2 + (Z/2)^3 + Z/8"; "0" for the trivial group.
  std::string to_string(std::string_view free_symbol = "Z") const;
  // Summands with labels, e.g. "Z/4{u} + Z/2{rho}".
  std::string to_labeled_string(std::string_view free_symbol = "Z") const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b);

 private:
  void insert(Summand summand);

  bool infinite_ = false;
  std::vector<Summand> summands_;
};

// Order data of a group without labels: cheap to build and compare in bulk.
struct OrderProfile {
  static constexpr int kMaxLog2 = 24;
  bool infinite = false;
  std::uint64_t free = 0;
  std::array<std::uint64_t, kMaxLog2 + 1> torsion{};  // torsion[e] counts Z/2^e

  void add(int log2_order, std::uint64_t count = 1);
  bool is_trivial() const;
  GroupDescriptor to_descriptor() const;
  static OrderProfile of(const GroupDescriptor& group);
  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

// Inverse of GroupDescriptor::to_string (labels are not part of the syntax).
GroupDescriptor parse_group(std::string_view text);

}  // namespace slicess
