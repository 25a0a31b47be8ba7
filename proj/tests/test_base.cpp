#include <doctest.h>

#include "slicess/base_data.hpp"
#include "slicess/error.hpp"

using namespace slicess;

namespace {

std::string data_path(const std::string& name) { return std::string(SLICESS_DATA_DIR) + "/tables/" + name; }

ErrorKind load_error(const std::string& doc) {
  try {
    load_and_validate_table(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("table was accepted");
  return ErrorKind::IO;
}

// Monomials rho^a tau^b u^c of H^{p,q}(R) by direct search.
int enumerate_real(int p, int q, Coefficient coeff, RealMonomial& found) {
  int count = 0;
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; b <= (coeff.kind == CoefficientKind::TWO_ADIC ? 0 : 1); ++b)
      for (int c = 0; c <= 40; ++c)
        if (a == p && a + b + 2 * c == q) {
          ++count;
          found = {a, b, c};
        }
  return count;
}

}  // namespace

TEST_SUITE("base") {
  TEST_CASE("real cohomology examples") {
    const auto c3 = Coefficient::mod2n(3);
    CHECK(real_cohomology(0, 2, c3).to_labeled_string() == "Z/8{u}");
    CHECK(real_cohomology(1, 1, c3).to_labeled_string() == "Z/2{rho}");
    CHECK(real_cohomology(0, 1, Coefficient::two_adic()).is_trivial());
    CHECK(real_cohomology(0, 0, Coefficient::two_adic()).to_string() == "Z");
    CHECK(real_cohomology(-1, 0, c3).is_trivial());
  }

  TEST_CASE("real cohomology orders follow the monomial support") {
    for (int p = 0; p <= 32; ++p)
      for (int q = 0; q <= 32; ++q) REQUIRE(real_cohomology(p, q, Coefficient::mod2()).log2_order() == (q >= p ? 1 : 0));
    for (int n = 2; n <= 4; ++n) {
      const auto coeff = Coefficient::mod2n(n);
      for (int p = 0; p <= 32; ++p)
        for (int q = 0; q <= 32; ++q) {
          RealMonomial m;
          const int count = enumerate_real(p, q, coeff, m);
          const GroupDescriptor g = real_cohomology(p, q, coeff);
          REQUIRE(count <= 1);
          if (count == 0) {
            REQUIRE(g.is_trivial());
            continue;
          }
          const int expected = (p == 0 && q % 2 == 0) ? n : 1;
          REQUIRE(g.log2_order() == expected);
          REQUIRE(real_monomial(p, q, coeff) == m);
        }
    }
  }

  TEST_CASE("rho multiplication is injective in positive degree") {
    const auto coeff = Coefficient::mod2n(3);
    for (int p = 1; p <= 30; ++p)
      for (int q = p; q <= 30; ++q) {
        const auto m = real_monomial(p, q, coeff);
        if (!m) continue;
        const auto up = real_monomial(p + 1, q + 1, coeff);
        REQUIRE(up);
        REQUIRE(up->rho == m->rho + 1);
        REQUIRE(up->tau == m->tau);
        REQUIRE(up->u == m->u);
      }
  }

  TEST_CASE("shipped tables load") {
    for (auto name : {"rationals.table", "gaussian_rationals.table", "z_half.table", "synthetic_s_integers.table"}) {
      CAPTURE(name);
      const auto t = load_table_file(data_path(name));
      CHECK(t.vcd == 2);
      CHECK(t.group(0, 0).free_rank() == 1);
    }
    const auto half = load_table_file(data_path("z_half.table"));
    CHECK(half.r1 == 1);
    CHECK(half.has_flag("totally_real_abelian"));
    CHECK(half.group(1, 2).to_string() == "Z/8");
    CHECK(half.group(3, 5).to_string() == "Z/2");  // implied from the real embedding
    CHECK(half.group(3, 4).is_trivial());
    CHECK_THROWS_AS(half.group(1, 40), Error);
  }

  TEST_CASE("table validation errors") {
    const std::string head = "base T\nr1 0\ncoeff INT\nqmax 2\n";
    CHECK_NOTHROW(load_and_validate_table(head + "H 0 0 = free:1\nH 1 1 = torsion:[2]\nH 1 2 = torsion:[4]\n"));
    CHECK(load_error(head + "H 3 2 = torsion:[2]\n") == ErrorKind::VANISHING_VIOLATION);
    const std::string real = "base T\nr1 1\ncoeff TWO_ADIC\nqmax 2\n";
    CHECK(load_error(real + "H 0 0 = free:1 map:[[1]]\nH 2 2 = torsion:[2] map:[[0]]\n") ==
          ErrorKind::SURJECTIVITY_VIOLATION);
    CHECK(load_error("base T\nr1 1\n") == ErrorKind::PARSE);
    CHECK(load_error(head + "H 1 1 = torsion:[3]\n") != ErrorKind::IO);
  }

  TEST_CASE("kernel tilde examples") {
    const auto half = load_table_file(data_path("z_half.table"));
    CHECK(kernel_tilde(half, 3, 3).is_trivial());
    const auto gauss = load_table_file(data_path("gaussian_rationals.table"));
    CHECK(kernel_tilde(gauss, 1, 2) == gauss.group(1, 2));
    const auto two = load_and_validate_table(
        "base T\nr1 1\ncoeff INT\nqmax 3\nH 0 0 = free:1 map:[[1]]\nH 1 1 = free:2 map:[[1,1]]\n"
        "H 2 2 = torsion:[2] map:[[1]]\n");
    CHECK(kernel_tilde(two, 1, 1).free_rank() == 2);
  }

  TEST_CASE("kernel tilde plus image recovers finite entries") {
    for (auto name : {"z_half.table", "synthetic_s_integers.table"}) {
      const auto t = load_table_file(data_path(name));
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= t.qmax; ++q) {
          const GroupDescriptor g = t.group(p, q);
          if (!g.is_finite() || g.is_trivial()) continue;
          CAPTURE(p);
          CAPTURE(q);
          REQUIRE(kernel_tilde(t, p, q).log2_order() + t.image(p, q).dim() == g.log2_order());
        }
    }
  }

  TEST_CASE("cokernel bar examples") {
    const auto half = load_table_file(data_path("z_half.table"));
    CHECK(cokernel_bar(half, 3, 3, 1).to_string() == "Z/2");
    CHECK(cokernel_bar(half, 5, 9, 1).is_trivial());
    // Source group vanishes: (Z/2)^{r1}.
    CHECK(cokernel_bar(half, 7, 9, 2).to_string() == "Z/2");
    // Source at p - 3 = 2 with a surjective map.
    CHECK(cokernel_bar(half, 5, 5, 1).is_trivial());
    const auto gauss = load_table_file(data_path("gaussian_rationals.table"));
    CHECK(cokernel_bar(gauss, 5, 9, 1).is_trivial());
  }
}
