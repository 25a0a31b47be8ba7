#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicess/base_data.hpp"
#include "slicess/group.hpp"
#include "slicess/rings.hpp"
#include "slicess/spectrum.hpp"

namespace slicess {

// ---- real mod 2^n pages ---------------------------------------------------

// Reading of the kernel ideal at level 0: TWO treats 2u^i (i odd) as a
// surviving class, ZERO_IDEAL drops it.
enum class J0Reading { TWO, ZERO_IDEAL };

// Fate of the class rho^a tau^b u^c x_K on a page where the differentials
// d^{2^j - 1} with j <= level have run. `mask` has bit j-1 set when the ring
// generator of degree 2^j - 1 divides x_K; `truncation` < 0 means no
// truncation of the ring. order == 0 means the class is gone; otherwise the
// survivor is 2^two_power times the class, of order 2^order.
struct OracleClass {
  int two_power = 0;
  int order = 0;
};
OracleClass real_oracle_class(int rho, int tau, int u, std::uint32_t mask, int level, int n, int truncation,
                              J0Reading reading = J0Reading::TWO);

// Counts of ring monomials by prime-power divisibility mask, built by a
// knapsack over the generators (independent of the engine's basis tables).
class MaskHistogram {
 public:
  MaskHistogram(const RingSpec& ring, int max_degree);
  const RingSpec& ring() const { return ring_; }
  int max_degree() const { return max_degree_; }
  const std::vector<std::uint64_t>& at(std::int64_t degree) const;  // indexed by mask
  std::uint64_t total(std::int64_t degree) const;

 private:
  RingSpec ring_;
  int max_degree_;
  std::vector<std::vector<std::uint64_t>> counts_;
};

class RealOracle {
 public:
  // ring: LAZARD, BP or BP_TRUNCATED.
  RealOracle(const RingSpec& ring, int max_degree, J0Reading reading = J0Reading::TWO);
  OrderProfile er_profile(std::int64_t r, const TriDegree& t, int n) const;
  OrderProfile einfty_profile(const TriDegree& t, int n) const;
  // Labeled descriptors; enumerate the ring basis, meant for small degrees.
  GroupDescriptor er(std::int64_t r, const TriDegree& t, int n) const;
  GroupDescriptor einfty(const TriDegree& t, int n) const;

 private:
  OrderProfile profile_at_level(int level, const TriDegree& t, int n) const;
  GroupDescriptor group_at_level(int level, const TriDegree& t, int n) const;
  MaskHistogram histogram_;
  J0Reading reading_;
  int truncation_;
};

// MGL mod 2^n over the real numbers.
GroupDescriptor er_real_oracle(std::int64_t r, const TriDegree& t, int n, J0Reading reading = J0Reading::TWO);
GroupDescriptor einfty_real_oracle(const TriDegree& t, int n, J0Reading reading = J0Reading::TWO);

// ---- 2-complete presentations ---------------------------------------------

// A normal-form monomial rho^e U^Q z_{j,l} m of the 2-complete homotopy ring.
// z_{0,l} stands for 2u^l; U = u^{2^m} only appears for truncated BPGL<m>.
struct PresentationBasisElement {
  int rho = 0;
  int big_u = 0;          // exponent of U (truncated rings)
  int z_level = -1;       // j of z_{j,l}; -1 when absent
  int z_index = 0;        // l of z_{j,l}
  MultiIndex ring;        // remaining ring monomial
  int slice = 0;          // slice degree q of the represented class
  int log2_order = 0;     // 0 = Z_2, 1 = Z/2

  std::string label(const RingSpec& spec) const;
  // The same class written as an engine label: 2^z rho^e u^c x_K.
  std::string engine_label(const RingSpec& spec, int truncation) const;
};

// All normal-form monomials of bidegree (p, w). spectrum: MGL_2COMPLETE, BPGL,
// or BPGL_TRUNCATED.
std::vector<PresentationBasisElement> presentation_basis(const SpectrumSpec& spectrum, std::int64_t p, std::int64_t w);

// Products of z-generators under the rewriting rules
//   z_{k,l} z_{a,b} -> z_{k, l + b 2^{a-k}} z_{a,0}   (a >= k),   z_{0,0} -> 2.
struct ZMonomial {
  int two_power = 0;
  std::vector<std::pair<int, int>> factors;  // (j, l), kept sorted
  friend bool operator==(const ZMonomial&, const ZMonomial&) = default;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
};
ZMonomial normalize_z_monomial(const std::vector<std::pair<int, int>>& factors);
// Every terminal form reachable by applying the rules in any order.
std::vector<ZMonomial> all_normal_forms(const std::vector<std::pair<int, int>>& factors);

// ---- Morava K-theory --------------------------------------------------------

// E^infinity of K(n) over the real numbers at a tri-degree. Table bases are
// not supported (UNSUPPORTED_PAIRING).
GroupDescriptor kn_einfty_oracle(int n, const TriDegree& t, const BaseSpec& base);

// ---- number fields ----------------------------------------------------------

// The E^infinity contribution A^{p,q,K} for a validated table.
GroupDescriptor field_einfty_oracle(const CohomologyTable& table, int p, int q, const MultiIndex& ring);
// The table has no cohomology above degree 2 and none at (0, q != 0).
bool collapse_shaped(const CohomologyTable& table);

}  // namespace slicess
