#include "slicess/arith.hpp"
#include "slicess/error.hpp"
#include "slicess/oracles.hpp"

namespace slicess {

GroupDescriptor kn_einfty_oracle(int n, const TriDegree& t, const BaseSpec& base) {
  if (n < 1 || n > 20) throw Error(ErrorKind::INVALID_ARGUMENT, "K(n) needs 1 <= n <= 20");
  if (base.kind != BaseSpec::Kind::REAL)
    throw Error(ErrorKind::UNSUPPORTED_PAIRING, "the K(n) oracle is only available over the real numbers");
  GroupDescriptor out;
  const std::int64_t period = (std::int64_t{1} << n) - 1;
  // Off the vanishing line p - 2w = rho + 2 tau < 0 there is no E^1 class at all.
  if (t.p - 2 * t.w < 0 || t.q % period != 0) return out;
  const std::int64_t rho = 2 * t.q - t.p;
  const std::int64_t tau = t.q - t.w - rho;
  if (rho < 0 || tau < 0) return out;
  // k_*(R) = F_2[rho] has no rho-torsion, so only rows with C(tau, 2^n) even
  // contribute, as k_*(R)/rho^{2^{n+1}-1}.
  if (lucas_binomial(static_cast<std::uint64_t>(tau), std::uint64_t{1} << n)) return out;
  if (rho >= (2 << n) - 1) return out;
  const auto power = t.q / period;
  const std::string ring = power == 0 ? "1" : MultiIndex::generator(n, static_cast<int>(power)).label('v');
  out.add_cyclic(1, class_label(0, RealMonomial{static_cast<int>(rho), static_cast<int>(tau), 0}, ring));
  return out;
}

}  // namespace slicess
