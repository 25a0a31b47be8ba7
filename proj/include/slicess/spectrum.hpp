#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "slicess/base_data.hpp"
#include "slicess/rings.hpp"

namespace slicess {

enum class SpectrumKind { MGL_MOD, MGL_2COMPLETE, BPGL, BPGL_TRUNCATED, MORAVA };

struct SpectrumSpec {
  SpectrumKind kind = SpectrumKind::MGL_MOD;
  int n = 2;  // MGL_MOD: modulus 2^n; BPGL_TRUNCATED: m; MORAVA: height

  static SpectrumSpec mgl_mod(int n);
  static SpectrumSpec mgl_2complete() { return {SpectrumKind::MGL_2COMPLETE, 0}; }
  static SpectrumSpec bpgl() { return {SpectrumKind::BPGL, 0}; }
  static SpectrumSpec bpgl_truncated(int m);
  static SpectrumSpec morava(int n);

  RingSpec ring() const;
  bool two_complete() const;
  std::string name() const;
  friend bool operator==(const SpectrumSpec&, const SpectrumSpec&) = default;
};

// Parses names such as "MGL/4", "MGL2", "BPGL", "BPGL<2>", "K(3)".
SpectrumSpec parse_spectrum(const std::string& text);

struct TriDegree {
  std::int64_t p = 0, q = 0, w = 0;
  friend auto operator<=>(const TriDegree&, const TriDegree&) = default;
  std::string to_string() const;
};

struct BaseSpec {
  enum class Kind { REAL, TABLE } kind = Kind::REAL;
  std::shared_ptr<const CohomologyTable> table;
  std::string label;  // "real" or the table path

  static BaseSpec real() { return {Kind::REAL, nullptr, "real"}; }
  static BaseSpec from_table(std::shared_ptr<const CohomologyTable> table, std::string label);
};

// What the finite engine runs: a coefficient ring and a finite coefficient model
// (MOD2N for the MGL/BP families, MOD2 for Morava K-theory).
struct EngineModel {
  RingSpec ring;
  Coefficient coeff;
  bool morava = false;

  // For 2-complete spectra `modulus_exponent` selects the finite stage 2^n.
  static EngineModel for_spectrum(const SpectrumSpec& spectrum, int modulus_exponent = 0);
  std::string name() const;
};

// Cohomology monomial of the E^1 term at a tri-degree over the real numbers:
// H^{2q-p, q-w} tensored with the degree-q ring piece.
std::optional<RealMonomial> e1_monomial(const EngineModel& model, const TriDegree& t);

// d^r on (cohomology monomial) * m for a ring monomial m:
// scalar * target * m * g_k, where g_k is the ring generator of degree 2^k - 1.
struct GeneratorRule {
  std::int64_t scalar = 0;
  RealMonomial target;
  int generator_k = 0;
};
std::optional<GeneratorRule> differential_rule(const EngineModel& model, std::int64_t r, const RealMonomial& source);

// Pages on which d^r can be nonzero for this model, up to r_max.
bool page_can_be_nonzero(const EngineModel& model, std::int64_t r);

// "2*u*x1" style label of 2^z * mono * ring monomial.
std::string class_label(int two_power, const RealMonomial& mono, const std::string& ring_label);

}  // namespace slicess
