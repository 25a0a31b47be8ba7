#pragma once

#include <cstdint>
#include <string>

namespace slicess {

// c * rho^e * tau^f in mod-2 cohomology of a real base; the zero term has c = 0
// and zero exponents.
struct TauActionTerm {
  int coefficient = 0;
  std::int64_t rho_exponent = 0;
  std::int64_t tau_exponent = 0;

  static TauActionTerm make(int coefficient, std::int64_t rho, std::int64_t tau);
  bool is_zero() const { return coefficient == 0; }
  std::string to_string() const;
  friend bool operator==(const TauActionTerm&, const TauActionTerm&) = default;
};

enum class PBMode { CLOSED, RECURSIVE };

struct PBCoefficients {
  int p = 0;  // coefficient of Sq^{2k}(tau^n)
  int b = 0;  // coefficient of Sq^{2k+1}(tau^n)
  friend bool operator==(const PBCoefficients&, const PBCoefficients&) = default;
};

PBCoefficients pb_coefficients(std::int64_t k, std::int64_t n, PBMode mode);
TauActionTerm sq_on_tau_power(std::int64_t i, std::int64_t n, PBMode mode = PBMode::CLOSED);
TauActionTerm milnor_q_on_tau_power(int k, std::int64_t n);

}  // namespace slicess
