#include <doctest.h>

#include <set>

#include "slicess/basis_table.hpp"
#include "slicess/rings.hpp"

using namespace slicess;

namespace {

// Partition numbers by Euler's pentagonal recurrence.
std::vector<std::uint64_t> pentagonal_partitions(int n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2) ? 1 : -1;
      total += sign * static_cast<std::int64_t>(p[m - g1]);
      if (g2 <= m) total += sign * static_cast<std::int64_t>(p[m - g2]);
    }
    p[m] = static_cast<std::uint64_t>(total);
  }
  return p;
}

std::vector<std::string> labels(const std::vector<MultiIndex>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.label('x'));
  return out;
}

}  // namespace

TEST_SUITE("rings") {
  TEST_CASE("graded basis examples") {
    CHECK(labels(graded_basis(RingSpec::lazard(), 3)) == std::vector<std::string>{"x3", "x1x2", "x1^3"});
    CHECK(labels(graded_basis(RingSpec::lazard(), 0)) == std::vector<std::string>{"1"});
    const auto k2_6 = graded_basis(RingSpec::morava(2), 6);
    REQUIRE(k2_6.size() == 1);
    CHECK(k2_6[0] == MultiIndex::generator(2, 2));
    CHECK(graded_basis(RingSpec::morava(2), 4).empty());
  }

  TEST_CASE("Lazard ranks are partition numbers") {
    const auto p = pentagonal_partitions(40);
    for (int t = 0; t <= 40; ++t) {
      REQUIRE(lazard_rank(t) == p[t]);
      if (t <= 30) REQUIRE(graded_basis(RingSpec::lazard(), t).size() == p[t]);
    }
  }

  TEST_CASE("Morava basis is a singleton exactly on multiples of 2^n - 1") {
    for (int n = 1; n <= 3; ++n) {
      const int d = (1 << n) - 1;
      for (int deg = -12; deg <= 30; ++deg) {
        const auto basis = graded_basis(RingSpec::morava(n), deg);
        REQUIRE(basis.size() == (deg % d == 0 ? 1u : 0u));
      }
    }
  }

  TEST_CASE("BP bases use generators of degree 2^i - 1") {
    for (int deg = 0; deg <= 20; ++deg)
      for (const auto& m : graded_basis(RingSpec::bp(), deg))
        for (auto [i, e] : m.terms()) REQUIRE(RingSpec::bp().generator_degree(i) == (1 << i) - 1);
    CHECK(graded_basis(RingSpec::bp_truncated(1), 4).size() == 1);
    CHECK(graded_basis(RingSpec::bp_truncated(0), 4).empty());
  }

  TEST_CASE("prime power split examples") {
    auto s1 = split_prime_power_monomials(1);
    CHECK(labels(s1.prime_power) == std::vector<std::string>{"x1"});
    CHECK(s1.rest.empty());
    auto s2 = split_prime_power_monomials(2);
    CHECK(labels(s2.prime_power) == std::vector<std::string>{"x1^2"});
    CHECK(labels(s2.rest) == std::vector<std::string>{"x2"});
    auto s3 = split_prime_power_monomials(3);
    CHECK(s3.prime_power.size() == 3);
    CHECK(s3.rest.empty());
  }

  TEST_CASE("prime power split is a partition of the basis") {
    for (int t = 0; t <= 30; ++t) {
      const auto split = split_prime_power_monomials(t);
      const auto all = graded_basis(RingSpec::lazard(), t);
      std::set<MultiIndex> a(split.prime_power.begin(), split.prime_power.end());
      std::set<MultiIndex> b(split.rest.begin(), split.rest.end());
      for (const auto& m : b) REQUIRE(a.count(m) == 0);
      REQUIRE(a.size() + b.size() == all.size());
      for (const auto& m : all) REQUIRE(a.count(m) + b.count(m) == 1);
      REQUIRE(lazard_rank_without_prime_powers(t) == b.size());
    }
  }

  TEST_CASE("basis table rank and unrank agree with enumeration") {
    const GradedBasisTable table(RingSpec::lazard(), 16);
    for (int deg = 0; deg <= 16; ++deg) {
      const auto basis = graded_basis(RingSpec::lazard(), deg);
      REQUIRE(table.count(deg) == basis.size());
      for (std::uint64_t i = 0; i < basis.size(); ++i) {
        REQUIRE(table.unrank(deg, i) == basis[i]);
        REQUIRE(table.rank(basis[i]) == i);
      }
    }
  }

  TEST_CASE("multiplication by x_{2^k-1} in the basis table") {
    const GradedBasisTable table(RingSpec::lazard(), 14);
    for (int k = 1; k <= 3; ++k) {
      const int g = (1 << k) - 1;
      for (int deg = 0; deg + g <= 14; ++deg)
        for (std::uint32_t i = 0; i < table.count(deg); ++i) {
          const MultiIndex m = table.unrank(deg, i) * MultiIndex::generator(g);
          REQUIRE(table.unrank(deg + g, table.times_prime_power(k, deg, i)) == m);
        }
    }
  }
}
