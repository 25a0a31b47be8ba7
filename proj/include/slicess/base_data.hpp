#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slicess/f2.hpp"
#include "slicess/group.hpp"

namespace slicess {

enum class CoefficientKind { MOD2, MOD2N, TWO_ADIC, INTEGER };

struct Coefficient {
  CoefficientKind kind = CoefficientKind::TWO_ADIC;
  int n = 0;  // exponent for MOD2N

  static Coefficient mod2() { return {CoefficientKind::MOD2, 1}; }
  static Coefficient mod2n(int n);
  static Coefficient two_adic() { return {CoefficientKind::TWO_ADIC, 0}; }
  static Coefficient integer() { return {CoefficientKind::INTEGER, 0}; }
  std::string name() const;
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

// rho^a tau^b u^c in the cohomology of the real numbers.
struct RealMonomial {
  int rho = 0, tau = 0, u = 0;
  std::string label() const;
  friend auto operator<=>(const RealMonomial&, const RealMonomial&) = default;
};

// The monomial spanning H^{p,q}(R; coeff), if the group is nonzero. Each
// bidegree holds at most one monomial in all three models.
std::optional<RealMonomial> real_monomial(std::int64_t p, std::int64_t q, Coefficient coeff);
// log2 of the order of a monomial's cyclic summand; 0 means free (Z_2).
int real_order_log2(const RealMonomial& m, Coefficient coeff);
GroupDescriptor real_cohomology(std::int64_t p, std::int64_t q, Coefficient coeff);
// H^{p,q}(R; Z_2) is nonzero (the target of a table's map-to-real).
bool real_two_adic_nonzero(std::int64_t p, std::int64_t q);

struct TableEntry {
  int p = 0, q = 0;
  GroupDescriptor group;                 // canonical order, generators labelled h<p>,<q>[i]
  std::vector<std::uint64_t> map_columns;  // image in F_2^{r1} of each generator (finite entries)
  std::optional<F2Subspace> image;       // INF entries
  std::optional<GroupDescriptor> kernel;  // INF entries
  bool implied = false;
};

class CohomologyTable {
 public:
  std::string base;
  int r1 = 0;
  Coefficient coeff = Coefficient::integer();
  int qmax = 0;
  std::optional<int> vcd;
  std::set<std::string> flags;
  std::map<std::pair<int, int>, TableEntry> entries;  // listed entries only
  std::vector<std::string> warnings;

  bool has_flag(const std::string& flag) const { return flags.count(flag) > 0; }
  // Listed or implied entry; zero entry off support. Throws UNDERSPECIFIED for
  // p in {1,2} beyond qmax.
  TableEntry entry(int p, int q) const;
  GroupDescriptor group(int p, int q) const { return entry(p, q).group; }
  // Image of the map to the real embeddings, inside F_2^{r1}.
  F2Subspace image(int p, int q) const;
  // {x in H^{p,q} : f(x) in allowed}, as a group.
  GroupDescriptor preimage(int p, int q, const F2Subspace& allowed) const;
  // Largest q for which entries with p <= 2 are specified.
  int specified_qmax() const { return qmax; }
};

CohomologyTable load_and_validate_table(std::string_view document);
CohomologyTable load_table_file(const std::string& path);

GroupDescriptor kernel_tilde(const CohomologyTable& table, int p, int q);
GroupDescriptor cokernel_bar(const CohomologyTable& table, int p, int q, int level);

}  // namespace slicess
