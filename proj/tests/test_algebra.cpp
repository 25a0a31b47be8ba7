#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"
#include "slicess/f2.hpp"
#include "slicess/group.hpp"
#include "slicess/int_matrix.hpp"

using namespace slicess;

namespace {

// Pascal's triangle mod 2, rows up to `size`.
std::vector<std::vector<std::uint8_t>> pascal_mod2(int size) {
  std::vector<std::vector<std::uint8_t>> rows(size + 1);
  for (int n = 0; n <= size; ++n) {
    rows[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] ^ rows[n - 1][k];
  }
  return rows;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("lucas binomial examples") {
    CHECK(lucas_binomial(5, 4) == 1);
    CHECK(lucas_binomial(4, 2) == 0);
    for (std::uint64_t n : {0ull, 1ull, 17ull, 1ull << 40}) CHECK(lucas_binomial(n, 0) == 1);
  }

  TEST_CASE("lucas binomial matches Pascal parity") {
    const auto rows = pascal_mod2(600);
    for (int n = 0; n <= 600; ++n)
      for (int k = 0; k <= n; ++k) REQUIRE(lucas_binomial(n, k) == rows[n][k]);
    CHECK(lucas_binomial(3, 5) == 0);
  }

  TEST_CASE("lucas binomial sampled up to 2^16") {
    // C(n, k) mod 2 via Kummer: odd iff no carries adding k and n-k.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
      const std::uint64_t n = rng() % 65537, k = rng() % (n + 1);
      const bool no_carry = ((k + (n - k)) ^ k ^ (n - k)) == 0;
      REQUIRE(lucas_binomial(n, k) == (no_carry ? 1 : 0));
    }
  }

  TEST_CASE("two-adic valuation") {
    CHECK(two_adic_valuation(Rational(8)) == 3);
    CHECK(two_adic_valuation(Rational(-1, 12)) == -2);
    CHECK(two_adic_valuation(Rational(1, 120)) == -3);
    CHECK(nu2(std::int64_t{96}) == 5);
    CHECK_THROWS_AS(two_adic_valuation(Rational(0)), Error);
  }

  TEST_CASE("binary length") {
    CHECK(binary_length(1) == 1);
    CHECK(binary_length(3) == 2);
    CHECK(binary_length(4) == 3);
    CHECK(binary_length(31) == 5);
  }

  TEST_CASE("descriptor canonical form and parsing") {
    GroupDescriptor g;
    g.add_cyclic(3);
    g.add_free();
    g.add_cyclic(1);
    g.add_cyclic(1);
    CHECK(g.to_string() == "Z + (Z/2)^2 + Z/8");
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion() == std::vector<int>{1, 1, 3});
    CHECK(parse_group(g.to_string()) == g);
    CHECK(parse_group("0").is_trivial());
    CHECK(parse_group("Z^inf + Z/4").infinite());
    CHECK_THROWS_AS(parse_group("Z/6"), Error);
    CHECK(GroupDescriptor::from_orders(1, {1, 3}) == parse_group("Z/8 + Z + Z/2"));
    CHECK_FALSE(GroupDescriptor::from_orders(0, {2}) == GroupDescriptor::from_orders(0, {1, 1}));
  }

  TEST_CASE("labels follow the canonical order") {
    GroupDescriptor g;
    g.add_cyclic(2, "u");
    g.add_free("1");
    g.add_cyclic(1, "rho");
    CHECK(g.generators().size() == g.summand_count());
    CHECK(g.to_labeled_string() == "Z{1} + Z/2{rho} + Z/4{u}");
  }

  TEST_CASE("subquotient homology examples") {
    const GroupDescriptor z8 = GroupDescriptor::cyclic(3);
    const auto d_in = IntMatrix::from_rows({{4}}, 8), d_out = IntMatrix::from_rows({{4}}, 8);
    CHECK(subquotient_homology(d_in, d_out, z8) == GroupDescriptor::cyclic(1));
    const auto zero_in = IntMatrix(1, 1, 8), zero_out = IntMatrix(1, 1, 8);
    CHECK(subquotient_homology(zero_in, zero_out, z8) == z8);
    const auto id = IntMatrix::from_rows({{1}}, 2), zero2 = IntMatrix(1, 1, 2);
    CHECK(subquotient_homology(zero2, id, GroupDescriptor::cyclic(1)).is_trivial());
  }

  TEST_CASE("ker times image equals the group (exhaustive, cyclic pieces)") {
    // Middle Z/2^a, outgoing multiplication by c into Z/2^b (c compatible).
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b)
        for (int c = 0; c < (1 << b); ++c) {
          // x -> c x is well defined Z/2^a -> Z/2^b iff 2^a c = 0 mod 2^b.
          if (((c << a) % (1 << b)) != 0) continue;
          std::set<int> image;
          int ker = 0;
          for (int x = 0; x < (1 << a); ++x) {
            const int y = (c * x) % (1 << b);
            image.insert(y);
            if (y == 0) ++ker;
          }
          REQUIRE(ker * static_cast<int>(image.size()) == (1 << a));
          const auto d_out = IntMatrix::from_rows({{c}}, 1 << b);
          const auto d_in = IntMatrix(1, 1, 1 << a);
          const GroupDescriptor h = subquotient_homology(d_in, d_out, GroupDescriptor::cyclic(a));
          REQUIRE(h.log2_order() == nu2(std::int64_t{ker}));
        }
  }

  TEST_CASE("subquotient homology agrees with enumeration on small groups") {
    // Middle (Z/4)^2 and Z/2 x Z/4, random maps, brute force over all elements.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int mod = 4;
      IntMatrix d_out(2, 2, mod), d_in(2, 2, mod);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d_in.set(i, j, static_cast<long long>(rng() % mod));
      // d_out with d_out * d_in = 0: take d_out annihilating the image.
      std::vector<std::array<int, 2>> candidates;
      for (int a = 0; a < mod; ++a)
        for (int b = 0; b < mod; ++b) {
          bool kills = true;
          for (int j = 0; j < 2; ++j) {
            const long long s = a * static_cast<long long>(d_in.at(0, j)) + b * static_cast<long long>(d_in.at(1, j));
            if (s % mod) kills = false;
          }
          if (kills) candidates.push_back({a, b});
        }
      for (int i = 0; i < 2; ++i) {
        const auto& row = candidates[rng() % candidates.size()];
        d_out.set(i, 0, row[0]);
        d_out.set(i, 1, row[1]);
      }
      std::set<std::pair<int, int>> image;
      int ker = 0;
      for (int x = 0; x < mod; ++x)
        for (int y = 0; y < mod; ++y) {
          image.insert({static_cast<int>((static_cast<long long>(d_in.at(0, 0)) * x + static_cast<long long>(d_in.at(0, 1)) * y) % mod),
                        static_cast<int>((static_cast<long long>(d_in.at(1, 0)) * x + static_cast<long long>(d_in.at(1, 1)) * y) % mod)});
          const long long o0 = static_cast<long long>(d_out.at(0, 0)) * x + static_cast<long long>(d_out.at(0, 1)) * y;
          const long long o1 = static_cast<long long>(d_out.at(1, 0)) * x + static_cast<long long>(d_out.at(1, 1)) * y;
          if (o0 % mod == 0 && o1 % mod == 0) ++ker;
        }
      const auto h = subquotient_homology(d_in, d_out, GroupDescriptor::from_orders(0, {2, 2}));
      REQUIRE(h.is_finite());
      REQUIRE((std::int64_t{1} << h.log2_order()) * static_cast<std::int64_t>(image.size()) == ker);
    }
  }

  TEST_CASE("homology is invariant under basis permutations") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix d_in(3, 2, 8), d_out(1, 3, 8);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) d_in.set(i, j, static_cast<long long>(2 * (rng() % 4)));
      // Entries 0 or 4 kill the even image mod 8.
      for (int j = 0; j < 3; ++j) d_out.set(0, j, static_cast<long long>(4 * (rng() % 2)));
      const auto middle = GroupDescriptor::from_orders(0, {3, 3, 3});
      const auto h = subquotient_homology(d_in, d_out, middle);
      // Swap middle coordinates 0 and 2 in both maps.
      IntMatrix p_in(3, 2, 8), p_out(1, 3, 8);
      p_out.set(0, 0, d_out.at(0, 2));
      p_out.set(0, 1, d_out.at(0, 1));
      p_out.set(0, 2, d_out.at(0, 0));
      for (int j = 0; j < 2; ++j) {
        p_in.set(0, j, d_in.at(2, j));
        p_in.set(1, j, d_in.at(1, j));
        p_in.set(2, j, d_in.at(0, j));
      }
      // Swap the source columns too.
      IntMatrix q_in(3, 2, 8);
      for (int i = 0; i < 3; ++i) {
        q_in.set(i, 0, p_in.at(i, 1));
        q_in.set(i, 1, p_in.at(i, 0));
      }
      REQUIRE(subquotient_homology(q_in, p_out, middle) == h);
    }
  }

  TEST_CASE("smith invariants") {
    const auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const auto inv = smith_invariants(m);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 6);
    CHECK(inv[2] == 12);
    CHECK(cokernel_group(IntMatrix::from_rows({{4, 0}, {0, 0}})).to_string() == "Z + Z/4");
  }

  TEST_CASE("F2 subspaces") {
    const auto a = F2Subspace::span(4, {0b0011, 0b0110});
    const auto b = F2Subspace::span(4, {0b0101, 0b1000});
    CHECK(a.dim() == 2);
    CHECK(a.contains(0b0101));
    CHECK(a.intersect(b).dim() == 1);
    CHECK(a.sum(b).dim() == 3);
    CHECK(F2Subspace::full(4).dim() == 4);
    const auto ker = f2_kernel({0b01, 0b10, 0b11});
    CHECK(ker.size() == 1);
  }
}
