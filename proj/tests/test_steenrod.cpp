#include <doctest.h>

#include <map>

#include "slicess/arith.hpp"
#include "slicess/steenrod.hpp"

using namespace slicess;

TEST_SUITE("steenrod") {
  TEST_CASE("base cases") {
    for (int n = 0; n <= 64; ++n) CHECK(pb_coefficients(0, n, PBMode::CLOSED).p == 1);
    CHECK(pb_coefficients(0, 3, PBMode::CLOSED).b == 1);
    CHECK(pb_coefficients(1, 2, PBMode::CLOSED).p == 1);
    CHECK(pb_coefficients(1, 2, PBMode::RECURSIVE).p == 1);
  }

  TEST_CASE("squares on tau powers") {
    CHECK(sq_on_tau_power(0, 5) == TauActionTerm::make(1, 0, 5));
    CHECK(sq_on_tau_power(1, 1) == TauActionTerm::make(1, 1, 0));
    CHECK(sq_on_tau_power(4, 2).is_zero());
    CHECK(sq_on_tau_power(3, 1).is_zero());
  }

  TEST_CASE("Milnor primitives on tau powers") {
    for (int k = 0; k <= 4; ++k) CHECK(milnor_q_on_tau_power(k, 0).is_zero());
    CHECK(milnor_q_on_tau_power(1, 2) == TauActionTerm::make(1, 3, 0));
    CHECK(milnor_q_on_tau_power(2, 3).is_zero());
    CHECK(milnor_q_on_tau_power(0, 1) == TauActionTerm::make(1, 1, 0));
  }

  TEST_CASE("closed form equals recursion on the full grid") {
    for (int k = 0; k <= 256; ++k)
      for (int n = 0; n <= 256; ++n) {
        CAPTURE(k);
        CAPTURE(n);
        REQUIRE(pb_coefficients(k, n, PBMode::CLOSED) == pb_coefficients(k, n, PBMode::RECURSIVE));
      }
  }

  TEST_CASE("Q_k detects bit k") {
    for (int k = 0; k <= 8; ++k)
      for (int n = 0; n <= 1024; ++n) {
        const bool bit = (n >> k) & 1;
        const TauActionTerm t = milnor_q_on_tau_power(k, n);
        REQUIRE(t.is_zero() == !bit);
        if (bit) {
          REQUIRE(t.rho_exponent == (std::int64_t{2} << k) - 1);
          REQUIRE(t.tau_exponent == n - (1 << k));
        }
      }
  }

  TEST_CASE("Q_k squares to zero on tau powers") {
    for (int k = 0; k <= 8; ++k)
      for (int n = 0; n <= 1024; ++n) {
        const TauActionTerm once = milnor_q_on_tau_power(k, n);
        if (once.is_zero()) continue;
        REQUIRE(milnor_q_on_tau_power(k, once.tau_exponent).is_zero());
        REQUIRE(lucas_binomial(n, 1u << k) * lucas_binomial(n - (1u << k), 1u << k) == 0);
      }
  }

  TEST_CASE("binomial identity behind the closed form") {
    auto c = [](std::int64_t n, std::int64_t k) { return n < 0 || k < 0 ? 0 : lucas_binomial(n, k); };
    for (int k = 0; k <= 6; ++k)
      for (std::int64_t n = 1; n <= 1024; ++n) {
        const std::int64_t t = std::int64_t{1} << k;
        const int lhs = c(n, 2 * t);
        const int rhs = (c(n, t) * c((n - 1) / 2, t) + c(n - t, t) * c((n + t - 1) / 2, t)) % 2;
        REQUIRE(lhs == rhs);
      }
  }

  TEST_CASE("motivic Cartan formula on products of tau powers") {
    // Sq^{2i}(xy) = sum Sq^{2a}x Sq^{2b}y + tau sum Sq^{2a+1}x Sq^{2b+1}y (a + b = i, i - 1);
    // Sq^{2i+1}(xy) = sum (Sq^{2a+1}x Sq^{2b}y + Sq^{2a}x Sq^{2b+1}y) + rho sum Sq^{2a+1}x Sq^{2b+1}y.
    using Terms = std::map<std::pair<std::int64_t, std::int64_t>, int>;
    auto add = [](Terms& t, const TauActionTerm& x, const TauActionTerm& y, int extra_rho, int extra_tau) {
      if (x.is_zero() || y.is_zero()) return;
      t[{x.rho_exponent + y.rho_exponent + extra_rho, x.tau_exponent + y.tau_exponent + extra_tau}] ^= 1;
    };
    for (int a = 0; a <= 24; ++a)
      for (int b = 0; b <= 24; ++b)
        for (int i = 0; i <= 2 * (a + b) + 1; ++i) {
          Terms sum;
          const int h = i / 2;
          if (i % 2 == 0) {
            for (int j = 0; j <= h; ++j) add(sum, sq_on_tau_power(2 * j, a), sq_on_tau_power(2 * (h - j), b), 0, 0);
            for (int j = 0; j <= h - 1; ++j)
              add(sum, sq_on_tau_power(2 * j + 1, a), sq_on_tau_power(2 * (h - 1 - j) + 1, b), 0, 1);
          } else {
            for (int j = 0; j <= h; ++j) {
              add(sum, sq_on_tau_power(2 * j + 1, a), sq_on_tau_power(2 * (h - j), b), 0, 0);
              add(sum, sq_on_tau_power(2 * j, a), sq_on_tau_power(2 * (h - j) + 1, b), 0, 0);
            }
            for (int j = 0; j <= h - 1; ++j)
              add(sum, sq_on_tau_power(2 * j + 1, a), sq_on_tau_power(2 * (h - 1 - j) + 1, b), 1, 0);
          }
          add(sum, sq_on_tau_power(i, a + b), TauActionTerm::make(1, 0, 0), 0, 0);
          for (const auto& [mono, c] : sum) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(i);
            REQUIRE(c == 0);
          }
        }
  }
}
