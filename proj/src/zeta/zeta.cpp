#include "slicess/zeta.hpp"

#include <map>
#include <mutex>

#include "slicess/column.hpp"
#include "slicess/error.hpp"
#include "slicess/number_field.hpp"
#include "slicess/rings.hpp"

namespace slicess {

namespace {

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

const std::vector<Rational>& bernoulli_table(int m) {
  static std::mutex lock;
  static std::vector<Rational> values{Rational(1)};
  std::lock_guard guard(lock);
  while (static_cast<int>(values.size()) <= m) {
    const int k = static_cast<int>(values.size());
    Rational sum = 0;
    for (int j = 0; j < k; ++j) sum += Rational(binomial(k + 1, j)) * values[j];
    values.push_back(-sum / (k + 1));
  }
  return values;
}

}  // namespace

Rational bernoulli(int m) {
  if (m != 1 && (m < 2 || m % 2 != 0))
    throw Error(ErrorKind::INVALID_ARGUMENT, "bernoulli needs an even index >= 2, got " + std::to_string(m));
  return bernoulli_table(m)[m];
}

Rational bernoulli_akiyama_tanigawa(int m) {
  if (m < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "negative Bernoulli index");
  std::vector<Rational> row(m + 1);
  for (int k = 0; k <= m; ++k) {
    row[k] = Rational(1, k + 1);
    for (int j = k; j >= 1; --j) row[j - 1] = j * (row[j - 1] - row[j]);
  }
  return row[0];
}

Rational zeta_q_value(int n) {
  if (n < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "zeta_q_value needs n >= 1");
  return -bernoulli(2 * n) / (2 * n);
}

std::int64_t table_log2_order(const CohomologyTable& table, int p, int q) {
  const GroupDescriptor g = table.group(p, q);
  if (!g.is_finite())
    throw Error(ErrorKind::INFINITE_ORDER, "H^{" + std::to_string(p) + "," + std::to_string(q) + "} is infinite");
  return g.log2_order();
}

std::int64_t mgl_column_log2_order(const std::shared_ptr<const CohomologyTable>& table, std::int64_t p,
                                   std::int64_t w) {
  const ColumnReport column =
      compute_column(SpectrumSpec::mgl_2complete(), BaseSpec::from_table(table, table->base), p, w);
  if (!column.finite)
    throw Error(ErrorKind::INFINITE_ORDER,
                "MGL column (" + std::to_string(p) + "," + std::to_string(w) + ") has infinite order");
  return column.log2_order;
}

KolsterReport kolster_ratio_check(const std::shared_ptr<const CohomologyTable>& table, std::int64_t t,
                                  std::int64_t w) {
  if (t < 1 || (t - w) % 2 != 0)
    throw Error(ErrorKind::PARITY_PRECONDITION,
                "order-ratio check needs t >= 1 and t - w even (t=" + std::to_string(t) + ", w=" + std::to_string(w) + ")");
  const int q = static_cast<int>(t - w);
  if (q > table->specified_qmax())
    throw Error(ErrorKind::UNDERSPECIFIED, "table stops below weight " + std::to_string(q));

  KolsterReport rep;
  rep.t = t;
  rep.w = w;
  rep.p = 2 * t - 2;
  rep.pipeline = mgl_column_log2_order(table, rep.p, w) - mgl_column_log2_order(table, rep.p - 1, w - 1);

  const auto rank = static_cast<std::int64_t>(lazard_rank(t));
  const auto rank_prev = static_cast<std::int64_t>(lazard_rank(t - 1));
  const auto rest = static_cast<std::int64_t>(lazard_rank_without_prime_powers(t));
  const std::int64_t h2 = table_log2_order(*table, 2, q);
  const std::int64_t h1 = table_log2_order(*table, 1, q);
  rep.stated = -table->r1 * rest + rank * (h2 - h1);
  rep.bookkeeping = -table->r1 * rank + rank * h2 - rank_prev * h1;

  // Terms of the two columns pair up by rho multiplication once the first
  // cohomological index exceeds 2; their orders must agree there.
  NumberFieldEngine engine(table);
  for (std::int64_t deg = 0; deg <= rep.p - w; ++deg) {
    const std::int64_t a = 2 * deg - rep.p, b = deg - w;
    if (a <= 2) continue;
    for (const MultiIndex& k : graded_basis(RingSpec::lazard(), deg)) {
      const FieldTerm lower{static_cast<int>(a), static_cast<int>(b), k};
      const FieldTerm upper{static_cast<int>(a + 1), static_cast<int>(b + 1), k};
      const GroupDescriptor lo = engine.einfty(lower), hi = engine.einfty(upper);
      ++rep.rho_step_checked;
      if (lo.log2_order() != hi.log2_order())
        rep.rho_step_failures.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + k.label('x') +
                                        "): " + lo.to_string() + " vs " + hi.to_string());
    }
  }
  return rep;
}

std::vector<std::string> zeta_transcription_failures(const CohomologyTable& table) {
  std::vector<std::string> out;
  for (int n = 1; 2 * n <= table.specified_qmax(); ++n) {
    const std::int64_t ratio = table_log2_order(table, 2, 2 * n) - table_log2_order(table, 1, 2 * n);
    const int nu_zeta = two_adic_valuation(zeta_q_value(n));
    if (ratio != nu_zeta)
      out.push_back("n=" + std::to_string(n) + ": log2(#H2/#H1)=" + std::to_string(ratio) +
                    " nu2(zeta)=" + std::to_string(nu_zeta));
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS: return "PASS";
    case CheckStatus::FAIL: return "FAIL";
    case CheckStatus::SKIPPED: return "SKIPPED";
  }
  return "?";
}

ZetaReport zeta_cardinality_check(const std::shared_ptr<const CohomologyTable>& table, int n, std::int64_t w,
                                  std::optional<std::int64_t> zeta_valuation) {
  if (!table->has_flag("totally_real_abelian"))
    throw Error(ErrorKind::SHAPE_FLAG_MISSING, "table " + table->base + " is not flagged totally_real_abelian");
  if (table->r1 == 0)
    throw Error(ErrorKind::SHAPE_VIOLATION, "totally real flag on a table without real embeddings");
  const bool rational_base = table->r1 == 1 && table->vcd && *table->vcd == 2 && table->base.find("Z[1/2]") == 0;
  if (!zeta_valuation && !rational_base)
    throw Error(ErrorKind::MISSING_ZETA, "no zeta valuation supplied for base " + table->base);

  if (rational_base && !zeta_valuation) {
    if (auto bad = zeta_transcription_failures(*table); !bad.empty())
      throw Error(ErrorKind::PRECONDITION, "table disagrees with zeta values at " + bad.front());
  }

  ZetaReport rep;
  rep.n = n;
  rep.w = w;
  if (n < 1 || w % 2 != 0) {
    rep.note = "parity precondition not met";
    return rep;
  }
  const std::int64_t t = 2 * n + w;
  const std::int64_t nu_zeta = zeta_valuation ? *zeta_valuation : two_adic_valuation(zeta_q_value(n));
  rep.rhs = t >= 0 ? static_cast<std::int64_t>(lazard_rank(t)) * nu_zeta : 0;
  if (t < 1) {
    rep.note = "both groups trivial below weight one";
    rep.lhs = 0;
  } else {
    const std::int64_t p = 4 * n + 2 * w - 2;
    rep.lhs = table->r1 * static_cast<std::int64_t>(lazard_rank_without_prime_powers(t)) +
              mgl_column_log2_order(table, p, w) - mgl_column_log2_order(table, p - 1, w - 1);
  }
  rep.status = rep.lhs == rep.rhs ? CheckStatus::PASS : CheckStatus::FAIL;
  return rep;
}

}  // namespace slicess
