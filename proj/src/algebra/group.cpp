#include "slicess/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "slicess/error.hpp"

namespace slicess {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case ErrorKind::COMPOSITION_NONZERO: return "COMPOSITION_NONZERO";
    case ErrorKind::SHAPE_MISMATCH: return "SHAPE_MISMATCH";
    case ErrorKind::NOT_TWO_PRIMARY: return "NOT_TWO_PRIMARY";
    case ErrorKind::ZERO_INPUT: return "ZERO_INPUT";
    case ErrorKind::NEGATIVE_DEGREE: return "NEGATIVE_DEGREE";
    case ErrorKind::PARSE: return "PARSE";
    case ErrorKind::VANISHING_VIOLATION: return "VANISHING_VIOLATION";
    case ErrorKind::SURJECTIVITY_VIOLATION: return "SURJECTIVITY_VIOLATION";
    case ErrorKind::SHAPE_VIOLATION: return "SHAPE_VIOLATION";
    case ErrorKind::UNDERSPECIFIED: return "UNDERSPECIFIED";
    case ErrorKind::PRECONDITION: return "PRECONDITION";
    case ErrorKind::UNSUPPORTED_PAIRING: return "UNSUPPORTED_PAIRING";
    case ErrorKind::REGION_TOO_SMALL: return "REGION_TOO_SMALL";
    case ErrorKind::NONTERMINATING_SUPPORT: return "NONTERMINATING_SUPPORT";
    case ErrorKind::PATTERN_MISMATCH: return "PATTERN_MISMATCH";
    case ErrorKind::VCD_VIOLATION: return "VCD_VIOLATION";
    case ErrorKind::PARITY_PRECONDITION: return "PARITY_PRECONDITION";
    case ErrorKind::INFINITE_ORDER: return "INFINITE_ORDER";
    case ErrorKind::SHAPE_FLAG_MISSING: return "SHAPE_FLAG_MISSING";
    case ErrorKind::MISSING_ZETA: return "MISSING_ZETA";
    case ErrorKind::NO_ORACLE: return "NO_ORACLE";
    case ErrorKind::IO: return "IO";
  }
  return "UNKNOWN";
}

GroupDescriptor GroupDescriptor::cyclic(int log2_order, std::string label) {
  GroupDescriptor g;
  g.add_cyclic(log2_order, std::move(label));
  return g;
}

GroupDescriptor GroupDescriptor::free(std::uint64_t rank) {
  GroupDescriptor g;
  for (std::uint64_t i = 0; i < rank; ++i) g.add_free();
  return g;
}

GroupDescriptor GroupDescriptor::infinite_rank(const std::vector<int>& torsion) {
  GroupDescriptor g;
  g.infinite_ = true;
  for (int e : torsion) g.add_cyclic(e);
  return g;
}

GroupDescriptor GroupDescriptor::from_orders(std::uint64_t free_rank, const std::vector<int>& torsion) {
  GroupDescriptor g = free(free_rank);
  for (int e : torsion) g.add_cyclic(e);
  return g;
}

void GroupDescriptor::insert(Summand summand) {
  // Keep canonical order: free first, then ascending order; ties keep insertion order.
  auto pos = std::upper_bound(summands_.begin(), summands_.end(), summand.log2_order,
                              [](int e, const Summand& s) { return e < s.log2_order; });
  summands_.insert(pos, std::move(summand));
}

void GroupDescriptor::add_free(std::string label) { insert({0, std::move(label)}); }

void GroupDescriptor::add_cyclic(int log2_order, std::string label) {
  if (log2_order < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "torsion order must be at least 2");
  insert({log2_order, std::move(label)});
}

void GroupDescriptor::add(const GroupDescriptor& other) {
  infinite_ = infinite_ || other.infinite_;
  for (const auto& s : other.summands_) insert(s);
}

std::uint64_t GroupDescriptor::free_rank() const {
  std::uint64_t n = 0;
  for (const auto& s : summands_) n += s.log2_order == 0;
  return n;
}

std::vector<int> GroupDescriptor::torsion() const {
  std::vector<int> out;
  for (const auto& s : summands_)
    if (s.log2_order > 0) out.push_back(s.log2_order);
  return out;
}

std::vector<std::string> GroupDescriptor::generators() const {
  std::vector<std::string> out;
  if (!labeled()) return out;
  for (const auto& s : summands_) out.push_back(s.label);
  return out;
}

bool GroupDescriptor::labeled() const {
  if (summands_.empty()) return true;
  return std::all_of(summands_.begin(), summands_.end(), [](const Summand& s) { return !s.label.empty(); });
}

std::int64_t GroupDescriptor::log2_order() const {
  if (!is_finite()) throw Error(ErrorKind::INFINITE_ORDER, "group " + to_string() + " has infinite order");
  std::int64_t total = 0;
  for (const auto& s : summands_) total += s.log2_order;
  return total;
}

namespace {

std::string power_part(std::string base, std::uint64_t count, bool wrap) {
  if (count == 1) return base;
  if (wrap) base = "(" + base + ")";
  return base + "^" + std::to_string(count);
}

}  // namespace

std::string GroupDescriptor::to_string(std::string_view free_symbol) const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  std::uint64_t free_count = free_rank();
  if (infinite_) {
    parts.push_back(std::string(free_symbol) + "^inf");
  } else if (free_count > 0) {
    parts.push_back(power_part(std::string(free_symbol), free_count, false));
  }
  std::map<int, std::uint64_t> counts;
  for (const auto& s : summands_)
    if (s.log2_order > 0) ++counts[s.log2_order];
  for (const auto& [e, c] : counts) parts.push_back(power_part("Z/" + std::to_string(std::uint64_t{1} << e), c, true));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string GroupDescriptor::to_labeled_string(std::string_view free_symbol) const {
  if (is_trivial()) return "0";
  std::string out;
  if (infinite_) out = std::string(free_symbol) + "^inf";
  for (const auto& s : summands_) {
    if (!out.empty()) out += " + ";
    out += s.log2_order == 0 ? std::string(free_symbol) : "Z/" + std::to_string(std::uint64_t{1} << s.log2_order);
    out += "{" + (s.label.empty() ? std::string("?") : s.label) + "}";
  }
  return out;
}

bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.infinite_ != b.infinite_ || a.summands_.size() != b.summands_.size()) return false;
  for (std::size_t i = 0; i < a.summands_.size(); ++i)
    if (a.summands_[i].log2_order != b.summands_[i].log2_order) return false;
  return true;
}

void OrderProfile::add(int log2_order, std::uint64_t count) {
  if (log2_order == 0) {
    free += count;
  } else {
    if (log2_order < 0 || log2_order > kMaxLog2) throw Error(ErrorKind::INVALID_ARGUMENT, "order out of range");
    torsion[log2_order] += count;
  }
}

bool OrderProfile::is_trivial() const {
  if (infinite || free) return false;
  for (auto c : torsion)
    if (c) return false;
  return true;
}

GroupDescriptor OrderProfile::to_descriptor() const {
  GroupDescriptor g = GroupDescriptor::free(free);
  g.set_infinite(infinite);
  for (int e = 1; e <= kMaxLog2; ++e)
    for (std::uint64_t i = 0; i < torsion[e]; ++i) g.add_cyclic(e);
  return g;
}

OrderProfile OrderProfile::of(const GroupDescriptor& group) {
  OrderProfile p;
  p.infinite = group.infinite();
  for (const auto& s : group.summands()) p.add(s.log2_order);
  return p;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::uint64_t parse_count(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(ErrorKind::PARSE, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

GroupDescriptor parse_group(std::string_view text) {
  text = trim(text);
  GroupDescriptor g;
  if (text == "0") return g;
  while (!text.empty()) {
    auto plus = text.find(" + ");
    std::string_view part = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 3);
    std::uint64_t count = 1;
    if (part.front() == '(') {
      auto close = part.find(")^");
      if (close == std::string_view::npos) throw Error(ErrorKind::PARSE, "bad summand '" + std::string(part) + "'");
      count = parse_count(part.substr(close + 2));
      part = part.substr(1, close - 1);
    }
    auto slash = part.find('/');
    if (slash == std::string_view::npos) {
      auto caret = part.find('^');
      if (caret != std::string_view::npos) {
        if (part.substr(caret + 1) == "inf") {
          g.set_infinite(true);
          continue;
        }
        count = parse_count(part.substr(caret + 1));
      }
      for (std::uint64_t i = 0; i < count; ++i) g.add_free();
    } else {
      std::uint64_t order = parse_count(part.substr(slash + 1));
      if (order < 2 || (order & (order - 1)) != 0) throw Error(ErrorKind::PARSE, "order is not a power of 2");
      int e = 0;
      while ((std::uint64_t{1} << e) < order) ++e;
      for (std::uint64_t i = 0; i < count; ++i) g.add_cyclic(e);
    }
  }
  return g;
}

}  // namespace slicess
