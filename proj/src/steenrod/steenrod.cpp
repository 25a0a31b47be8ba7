#include "slicess/steenrod.hpp"

#include <mutex>
#include <vector>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"

namespace slicess {

TauActionTerm TauActionTerm::make(int coefficient, std::int64_t rho, std::int64_t tau) {
  if ((coefficient & 1) == 0 || tau < 0) return {};
  return {1, rho, tau};
}

std::string TauActionTerm::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (rho_exponent) out += "rho^" + std::to_string(rho_exponent);
  if (tau_exponent) out += (out.empty() ? "" : "*") + std::string("tau^") + std::to_string(tau_exponent);
  return out.empty() ? "1" : out;
}

namespace {

int binom2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  return lucas_binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

PBCoefficients closed_form(std::int64_t k, std::int64_t n) {
  PBCoefficients c;
  c.p = (k == 0 && n == 0) ? 1 : binom2(floor_div(n + k - 1, 2), k);
  c.b = binom2(floor_div(n + k + 1, 2), k + 1) ^ binom2(floor_div(n + k, 2), k + 1);
  return c;
}

// Table of the Cartan recursion, grown on demand; rows indexed by n, columns by k.
class RecursionTable {
 public:
  PBCoefficients get(std::int64_t k, std::int64_t n) {
    std::lock_guard lock(mutex_);
    grow(static_cast<std::size_t>(std::max(k, n)) + 1);
    return {p_[n][k], b_[n][k]};
  }

 private:
  void grow(std::size_t size) {
    if (size <= size_) return;
    std::size_t target = std::max(size, 2 * size_);
    std::vector<std::vector<std::uint8_t>> p(target, std::vector<std::uint8_t>(target)), b = p;
    for (std::size_t n = 0; n < target; ++n)
      for (std::size_t k = 0; k < target; ++k) {
        if (k == 0) {
          p[n][k] = 1;
          b[n][k] = n & 1;
        } else if (n == 0) {
          p[n][k] = 0;
          b[n][k] = 0;
        } else {
          p[n][k] = p[n - 1][k] ^ b[n - 1][k - 1];
          b[n][k] = b[n - 1][k] ^ p[n - 1][k] ^ b[n - 1][k - 1];
        }
      }
    p_ = std::move(p);
    b_ = std::move(b);
    size_ = target;
  }

  std::mutex mutex_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint8_t>> p_, b_;
};

}  // namespace

PBCoefficients pb_coefficients(std::int64_t k, std::int64_t n, PBMode mode) {
  if (k < 0 || n < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "P/B coefficients need k, n >= 0");
  if (mode == PBMode::CLOSED) return closed_form(k, n);
  static RecursionTable table;
  return table.get(k, n);
}

TauActionTerm sq_on_tau_power(std::int64_t i, std::int64_t n, PBMode mode) {
  if (i < 0 || n < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "Sq^i(tau^n) needs i, n >= 0");
  if (i == 0) return {1, 0, n};
  const std::int64_t k = i / 2;
  const PBCoefficients c = pb_coefficients(k, n, mode);
  if (i % 2 == 0) return TauActionTerm::make(c.p, i, n - k);
  return TauActionTerm::make(c.b, i, n - k - 1);
}

TauActionTerm milnor_q_on_tau_power(int k, std::int64_t n) {
  if (k < 0 || k > 60 || n < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "Q_k(tau^n) needs 0 <= k <= 60, n >= 0");
  const std::int64_t step = std::int64_t{1} << k;
  if (n < step) return {};
  return TauActionTerm::make(binom2(n, step), 2 * step - 1, n - step);
}

}  // namespace slicess
