#include <algorithm>
#include <bit>

#include "slicess/error.hpp"
#include "slicess/rings.hpp"

namespace slicess {

RingSpec RingSpec::bp_truncated(int m) {
  if (m < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "truncation height must be >= 0");
  return {RingKind::BP_TRUNCATED, m};
}

RingSpec RingSpec::morava(int m) {
  if (m < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "Morava height must be >= 1");
  return {RingKind::MORAVA, m};
}

bool RingSpec::admits(int index) const {
  if (index < 1) return false;
  switch (kind) {
    case RingKind::LAZARD:
    case RingKind::BP: return true;
    case RingKind::BP_TRUNCATED: return index <= height;
    case RingKind::MORAVA: return index == height;
  }
  return false;
}

std::int64_t RingSpec::generator_degree(int index) const {
  if (!admits(index)) throw Error(ErrorKind::INVALID_ARGUMENT, "generator not in ring " + name());
  return kind == RingKind::LAZARD ? index : (std::int64_t{1} << index) - 1;
}

int RingSpec::prime_power_generator(int k) const {
  if (k < 1 || k > 62) return 0;
  int index = kind == RingKind::LAZARD ? static_cast<int>((std::int64_t{1} << k) - 1) : k;
  return admits(index) ? index : 0;
}

std::string RingSpec::name() const {
  switch (kind) {
    case RingKind::LAZARD: return "LAZARD";
    case RingKind::BP: return "BP";
    case RingKind::BP_TRUNCATED: return "BP_TRUNCATED(" + std::to_string(height) + ")";
    case RingKind::MORAVA: return "MORAVA(" + std::to_string(height) + ")";
  }
  return "?";
}

MultiIndex MultiIndex::generator(int index, int exponent) {
  MultiIndex m;
  m.set(index, exponent);
  return m;
}

MultiIndex MultiIndex::from_exponents(const std::vector<std::pair<int, int>>& terms) {
  MultiIndex m;
  for (auto [i, e] : terms) m.set(i, m.exponent(i) + e);
  return m;
}

int MultiIndex::exponent(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(index, INT32_MIN));
  return it != terms_.end() && it->first == index ? it->second : 0;
}

void MultiIndex::set(int index, int exponent) {
  if (index < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "generator index must be >= 1");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(index, INT32_MIN));
  if (it != terms_.end() && it->first == index) {
    if (exponent == 0)
      terms_.erase(it);
    else
      it->second = exponent;
  } else if (exponent != 0) {
    terms_.insert(it, {index, exponent});
  }
}

std::int64_t MultiIndex::degree(const RingSpec& spec) const {
  std::int64_t d = 0;
  for (auto [i, e] : terms_) d += spec.generator_degree(i) * e;
  return d;
}

std::string MultiIndex::label(char symbol) const {
  if (terms_.empty()) return "1";
  std::string out;
  for (auto [i, e] : terms_) {
    out += symbol + std::to_string(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

MultiIndex MultiIndex::operator*(const MultiIndex& other) const {
  MultiIndex m = *this;
  for (auto [i, e] : other.terms_) m.set(i, m.exponent(i) + e);
  return m;
}

MultiIndex MultiIndex::divided_by(const MultiIndex& other) const {
  MultiIndex m = *this;
  for (auto [i, e] : other.terms_) {
    int left = m.exponent(i) - e;
    if (left < 0 && e > 0 && exponent(i) >= 0) throw Error(ErrorKind::INVALID_ARGUMENT, "monomial does not divide");
    m.set(i, left);
  }
  return m;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto [i, e] : m.terms()) h = (h ^ (static_cast<std::size_t>(i) * 1315423911u + static_cast<std::size_t>(e + 1000))) * 0x100000001b3ULL;
  return h;
}

bool is_prime_power_index(int index) { return index >= 1 && std::has_single_bit(static_cast<unsigned>(index) + 1u); }

}  // namespace slicess
