#include "slicess/spectrum.hpp"

#include <bit>
#include <regex>

#include "slicess/arith.hpp"
#include "slicess/error.hpp"

namespace slicess {

SpectrumSpec SpectrumSpec::mgl_mod(int n) {
  if (n < 2) throw Error(ErrorKind::INVALID_ARGUMENT, "MGL/2^n needs n >= 2 (MGL/2 is not a ring spectrum)");
  return {SpectrumKind::MGL_MOD, n};
}

SpectrumSpec SpectrumSpec::bpgl_truncated(int m) {
  if (m < 0) throw Error(ErrorKind::INVALID_ARGUMENT, "BPGL<m> needs m >= 0");
  return {SpectrumKind::BPGL_TRUNCATED, m};
}

SpectrumSpec SpectrumSpec::morava(int n) {
  if (n < 1 || n > 20) throw Error(ErrorKind::INVALID_ARGUMENT, "K(n) needs 1 <= n <= 20");
  return {SpectrumKind::MORAVA, n};
}

RingSpec SpectrumSpec::ring() const {
  switch (kind) {
    case SpectrumKind::MGL_MOD:
    case SpectrumKind::MGL_2COMPLETE: return RingSpec::lazard();
    case SpectrumKind::BPGL: return RingSpec::bp();
    case SpectrumKind::BPGL_TRUNCATED: return RingSpec::bp_truncated(n);
    case SpectrumKind::MORAVA: return RingSpec::morava(n);
  }
  return RingSpec::lazard();
}

bool SpectrumSpec::two_complete() const {
  return kind == SpectrumKind::MGL_2COMPLETE || kind == SpectrumKind::BPGL || kind == SpectrumKind::BPGL_TRUNCATED;
}

std::string SpectrumSpec::name() const {
  switch (kind) {
    case SpectrumKind::MGL_MOD: return "MGL/" + std::to_string(1LL << n);
    case SpectrumKind::MGL_2COMPLETE: return "MGL2";
    case SpectrumKind::BPGL: return "BPGL";
    case SpectrumKind::BPGL_TRUNCATED: return "BPGL<" + std::to_string(n) + ">";
    case SpectrumKind::MORAVA: return "K(" + std::to_string(n) + ")";
  }
  return "?";
}

SpectrumSpec parse_spectrum(const std::string& text) {
  std::smatch m;
  if (std::regex_match(text, m, std::regex(R"(MGL/(\d+))"))) {
    const long long modulus = std::stoll(m[1]);
    if (modulus < 4 || !std::has_single_bit(static_cast<unsigned long long>(modulus)))
      throw Error(ErrorKind::INVALID_ARGUMENT, "MGL modulus must be a power of 2 that is at least 4");
    return SpectrumSpec::mgl_mod(std::countr_zero(static_cast<unsigned long long>(modulus)));
  }
  if (text == "MGL2" || text == "MGL") return SpectrumSpec::mgl_2complete();
  if (text == "BPGL") return SpectrumSpec::bpgl();
  if (std::regex_match(text, m, std::regex(R"(BPGL<(\d+)>)"))) return SpectrumSpec::bpgl_truncated(std::stoi(m[1]));
  if (std::regex_match(text, m, std::regex(R"(K\((\d+)\))"))) return SpectrumSpec::morava(std::stoi(m[1]));
  throw Error(ErrorKind::INVALID_ARGUMENT, "unknown spectrum '" + text + "'");
}

std::string TriDegree::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(w) + ")";
}

BaseSpec BaseSpec::from_table(std::shared_ptr<const CohomologyTable> table, std::string label) {
  return {Kind::TABLE, std::move(table), std::move(label)};
}

EngineModel EngineModel::for_spectrum(const SpectrumSpec& spectrum, int modulus_exponent) {
  EngineModel m;
  m.ring = spectrum.ring();
  switch (spectrum.kind) {
    case SpectrumKind::MGL_MOD: m.coeff = Coefficient::mod2n(spectrum.n); break;
    case SpectrumKind::MORAVA:
      m.coeff = Coefficient::mod2();
      m.morava = true;
      break;
    default:
      if (modulus_exponent < 2) throw Error(ErrorKind::INVALID_ARGUMENT, "2-complete spectra run at finite stages 2^n, n >= 2");
      m.coeff = Coefficient::mod2n(modulus_exponent);
  }
  return m;
}

std::string EngineModel::name() const { return ring.name() + " " + coeff.name(); }

std::optional<RealMonomial> e1_monomial(const EngineModel& model, const TriDegree& t) {
  if (model.morava) {
    const std::int64_t d = model.ring.generator_degree(model.ring.height);
    if (t.q % d != 0) return std::nullopt;
  } else if (t.q < 0) {
    return std::nullopt;
  }
  return real_monomial(2 * t.q - t.p, t.q - t.w, model.coeff);
}

std::optional<GeneratorRule> differential_rule(const EngineModel& model, std::int64_t r, const RealMonomial& source) {
  if (r < 1 || !std::has_single_bit(static_cast<std::uint64_t>(r + 1))) return std::nullopt;
  const int k = std::countr_zero(static_cast<std::uint64_t>(r + 1));
  GeneratorRule rule;
  rule.generator_k = k;
  if (model.morava) {
    if (k != model.ring.height) return std::nullopt;
    const std::int64_t step = std::int64_t{1} << k;
    if (source.tau < step) return std::nullopt;
    rule.scalar = lucas_binomial(static_cast<std::uint64_t>(source.tau), static_cast<std::uint64_t>(step));
    rule.target = {static_cast<int>(source.rho + 2 * step - 1), static_cast<int>(source.tau - step), 0};
  } else {
    if (model.ring.prime_power_generator(k) == 0) return std::nullopt;
    const std::int64_t half = std::int64_t{1} << (k - 1);
    // u^c = (u^{half})^m u^t with t < half; only the first factor moves.
    rule.scalar = source.u / half;
    rule.target = {static_cast<int>(source.rho + 4 * half - 1), source.tau, static_cast<int>(source.u - half)};
  }
  if (rule.scalar == 0) return std::nullopt;
  return rule;
}

bool page_can_be_nonzero(const EngineModel& model, std::int64_t r) {
  if (r < 1 || !std::has_single_bit(static_cast<std::uint64_t>(r + 1))) return false;
  const int k = std::countr_zero(static_cast<std::uint64_t>(r + 1));
  if (model.morava) return k == model.ring.height;
  return model.ring.prime_power_generator(k) != 0;
}

std::string class_label(int two_power, const RealMonomial& mono, const std::string& ring_label) {
  std::string out;
  if (two_power > 0) out = std::to_string(1LL << two_power);
  const std::string m = mono.label();
  if (m != "1") out += (out.empty() ? "" : "*") + m;
  if (ring_label != "1") out += (out.empty() ? "" : "*") + ring_label;
  return out.empty() ? "1" : out;
}

}  // namespace slicess
