#include "slicess/base_data.hpp"
#include "slicess/error.hpp"

namespace slicess {

Coefficient Coefficient::mod2n(int n) {
  if (n < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "MOD2N exponent must be >= 1");
  return {n == 1 ? CoefficientKind::MOD2 : CoefficientKind::MOD2N, n};
}

std::string Coefficient::name() const {
  switch (kind) {
    case CoefficientKind::MOD2: return "MOD2";
    case CoefficientKind::MOD2N: return "MOD2N " + std::to_string(n);
    case CoefficientKind::TWO_ADIC: return "TWO_ADIC";
    case CoefficientKind::INTEGER: return "INT";
  }
  return "?";
}

std::string RealMonomial::label() const {
  std::string out;
  auto part = [&](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part("rho", rho);
  part("tau", tau);
  part("u", u);
  return out.empty() ? "1" : out;
}

std::optional<RealMonomial> real_monomial(std::int64_t p, std::int64_t q, Coefficient coeff) {
  if (p < 0 || q < p) return std::nullopt;
  const std::int64_t rest = q - p;
  switch (coeff.kind) {
    case CoefficientKind::MOD2: return RealMonomial{static_cast<int>(p), static_cast<int>(rest), 0};
    case CoefficientKind::MOD2N: return RealMonomial{static_cast<int>(p), static_cast<int>(rest % 2), static_cast<int>(rest / 2)};
    case CoefficientKind::TWO_ADIC:
      if (rest % 2) return std::nullopt;
      return RealMonomial{static_cast<int>(p), 0, static_cast<int>(rest / 2)};
    case CoefficientKind::INTEGER: break;
  }
  throw Error(ErrorKind::UNSUPPORTED_PAIRING, "integral cohomology of the real numbers is not modelled");
}

int real_order_log2(const RealMonomial& m, Coefficient coeff) {
  switch (coeff.kind) {
    case CoefficientKind::MOD2: return 1;
    case CoefficientKind::MOD2N: return (m.rho == 0 && m.tau == 0) ? coeff.n : 1;
    case CoefficientKind::TWO_ADIC: return m.rho == 0 ? 0 : 1;
    case CoefficientKind::INTEGER: break;
  }
  throw Error(ErrorKind::UNSUPPORTED_PAIRING, "integral cohomology of the real numbers is not modelled");
}

GroupDescriptor real_cohomology(std::int64_t p, std::int64_t q, Coefficient coeff) {
  GroupDescriptor g;
  auto m = real_monomial(p, q, coeff);
  if (!m) return g;
  const int e = real_order_log2(*m, coeff);
  if (e == 0)
    g.add_free(m->label());
  else
    g.add_cyclic(e, m->label());
  return g;
}

bool real_two_adic_nonzero(std::int64_t p, std::int64_t q) { return p >= 0 && q >= p && (q - p) % 2 == 0; }

}  // namespace slicess
