#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicess/arith.hpp"
#include "slicess/base_data.hpp"

namespace slicess {

// B_m from the convolution recurrence with B_1 = -1/2. m = 1 is allowed for
// the recurrence's own use; otherwise m must be even and >= 2.
Rational bernoulli(int m);
// Independent route: Akiyama-Tanigawa triangle (B_1 = +1/2 there, irrelevant
// for even m).
Rational bernoulli_akiyama_tanigawa(int m);
// zeta(1 - 2n) = -B_{2n} / (2n) for n >= 1.
Rational zeta_q_value(int n);

// log2 of #MGL_{p,w} over a table base, read off the E^infinity column.
// Throws INFINITE_ORDER when the column has a free summand.
std::int64_t mgl_column_log2_order(const std::shared_ptr<const CohomologyTable>& table, std::int64_t p,
                                   std::int64_t w);

// log2 #H^{p,q}; throws INFINITE_ORDER for a free summand.
std::int64_t table_log2_order(const CohomologyTable& table, int p, int q);

struct KolsterReport {
  std::int64_t t = 0, w = 0, p = 0;
  std::int64_t pipeline = 0;  // log2(#MGL_{p,w} / #MGL_{p-1,w-1})
  // 2^{-r1 rk L''_t} (#H^{2,t-w} / #H^{1,t-w})^{rk L_t}
  std::int64_t stated = 0;
  // -r1 rk L_t + rk L_t log2 #H^{2,t-w} - rk L_{t-1} log2 #H^{1,t-w}
  std::int64_t bookkeeping = 0;
  std::int64_t rho_step_checked = 0;
  std::vector<std::string> rho_step_failures;
  bool stated_holds() const { return pipeline == stated; }
  bool bookkeeping_holds() const { return pipeline == bookkeeping; }
  bool rho_step_holds() const { return rho_step_failures.empty(); }
};

// Order-ratio check for weight t with t - w even. Throws
// PARITY_PRECONDITION otherwise.
KolsterReport kolster_ratio_check(const std::shared_ptr<const CohomologyTable>& table, std::int64_t t,
                                  std::int64_t w);

// Compares log2(#H^{2,2n} / #H^{1,2n}) with nu2(zeta(1-2n)) for 1 <= n with
// 2n within the table. One line per disagreement.
std::vector<std::string> zeta_transcription_failures(const CohomologyTable& table);

enum class CheckStatus { PASS, FAIL, SKIPPED };
std::string to_string(CheckStatus s);

struct ZetaReport {
  int n = 0;
  std::int64_t w = 0;
  std::int64_t lhs = 0;  // nu2(2^{r1 rk L''} #MGL_{4n+2w-2,w} / #MGL_{4n+2w-3,w-1})
  std::int64_t rhs = 0;  // rk L_{2n+w} nu2(zeta(1-2n))
  CheckStatus status = CheckStatus::SKIPPED;
  std::string note;
};

// `zeta_valuation` overrides nu2(zeta_F(1-2n)); required unless the base is Q-shaped.
ZetaReport zeta_cardinality_check(const std::shared_ptr<const CohomologyTable>& table, int n, std::int64_t w,
                                  std::optional<std::int64_t> zeta_valuation = std::nullopt);

}  // namespace slicess
