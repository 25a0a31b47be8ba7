// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "slicess/band.hpp"
#include "slicess/base_data.hpp"
#include "slicess/basis_table.hpp"
#include "slicess/column.hpp"
#include "slicess/compare.hpp"
#include "slicess/error.hpp"
#include "slicess/number_field.hpp"
#include "slicess/oracles.hpp"
#include "slicess/records.hpp"
#include "slicess/steenrod.hpp"
#include "slicess/structure.hpp"
#include "slicess/zeta.hpp"

using namespace slicess;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

int worker_count() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

std::shared_ptr<const CohomologyTable> table(const std::string& name) {
  return std::make_shared<const CohomologyTable>(load_table_file(std::string(SLICESS_DATA_DIR) + "/tables/" + name));
}

const std::vector<std::string> kTables = {"rationals.table", "gaussian_rationals.table", "z_half.table",
                                          "synthetic_s_integers.table"};

// Engine against oracle over a region; returns the number of tri-degrees compared.
std::size_t compare_region(Outcome& out, const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                           std::optional<std::int64_t> page) {
  const Page engine = compute_page(spectrum, base, region, page, worker_count());
  const Page oracle = oracle_page(spectrum, base, region, page);
  const auto mismatches = compare_pages(engine, oracle);
  if (!mismatches.empty()) {
    const auto& m = mismatches.front();
    out.fail(spectrum.name() + " over " + base.label + " " + m.tri.to_string() + ": engine " + m.engine + ", oracle " +
             m.oracle + " (" + std::to_string(mismatches.size()) + " mismatches)");
  }
  return std::max(engine.entries.size(), oracle.entries.size());
}

void real_einfty(Outcome& out) {
  const Region window = Region::window(-24, 24, -24, 0);
  const Region labeled_window = Region::window(-8, 8, -6, 0);
  std::size_t compared = 0, labeled = 0;
  for (int n = 2; n <= 3; ++n) {
    compared += compare_region(out, SpectrumSpec::mgl_mod(n), BaseSpec::real(), window, std::nullopt);
    const Page engine = compute_page(SpectrumSpec::mgl_mod(n), BaseSpec::real(), labeled_window, std::nullopt);
    for (const auto& e : engine.entries) {
      const std::string oracle = einfty_real_oracle(e.tri, n).to_labeled_string();
      if (e.group.to_labeled_string() != oracle)
        out.fail("labels at " + e.tri.to_string() + ": " + e.group.to_labeled_string() + " vs " + oracle);
      ++labeled;
    }
  }
  out.detail << compared << " tri-degrees, " << labeled << " with labels";
}

void real_pages(Outcome& out) {
  const Region window = Region::window(-24, 24, -24, 0);
  const int degree = static_cast<int>(required_ring_degree(window));
  const GradedBasisTable basis(RingSpec::lazard(), degree);
  const RealOracle oracle(RingSpec::lazard(), degree);
  std::uint64_t compared = 0;
  for (int n = 2; n <= 3; ++n) {
    const EngineModel model = EngineModel::for_spectrum(SpectrumSpec::mgl_mod(n));
    for (std::int64_t w = window.wmin; w <= window.wmax; ++w) {
      RealBand band(model, basis, w, window.pmin, window.pmax);
      for (std::int64_t r = 1; r <= 31; ++r) {
        for (const auto& e : band.entries()) {
          if (!band.in_window(e)) continue;
          ++compared;
          if (!(band.profile(e) == oracle.er_profile(r, e.tri, n)))
            out.fail("MGL/" + std::to_string(1 << n) + " E^" + std::to_string(r) + " at " + e.tri.to_string() + ": " +
                     band.profile(e).to_descriptor().to_string() + " vs " +
                     oracle.er_profile(r, e.tri, n).to_descriptor().to_string());
        }
        band.turn_page();
      }
      if (!band.violations().empty()) out.fail(band.violations().front());
    }
  }
  out.detail << compared << " (page, tri-degree) pairs";
}

std::multiset<std::string> labels_of(const GroupDescriptor& g) {
  const auto gens = g.generators();
  return {gens.begin(), gens.end()};
}

void two_adic(Outcome& out) {
  const Region window = Region::window(-24, 24, -24, 0);
  const std::size_t compared = compare_region(out, SpectrumSpec::mgl_2complete(), BaseSpec::real(), window, std::nullopt);
  // Labeled agreement per bidegree on a smaller window.
  const RingSpec ring = RingSpec::lazard();
  const Region small = Region::window(-6, 6, -6, 0);
  const Page engine = compute_page(SpectrumSpec::mgl_2complete(), BaseSpec::real(), small, std::nullopt);
  std::size_t bidegrees = 0;
  for (std::int64_t w = small.wmin; w <= small.wmax; ++w)
    for (std::int64_t p = small.pmin; p <= small.pmax; ++p) {
      std::multiset<std::string> mine, theirs;
      for (const auto& e : engine.entries)
        if (e.tri.p == p && e.tri.w == w) mine.merge(labels_of(e.group));
      for (const auto& b : presentation_basis(SpectrumSpec::mgl_2complete(), p, w))
        theirs.insert(b.engine_label(ring, -1));
      ++bidegrees;
      if (mine != theirs) out.fail("labels differ at p=" + std::to_string(p) + " w=" + std::to_string(w));
    }
  // The engine decides the reading of the level-0 kernel ideal.
  const TriDegree t{0, 0, -2};
  const Page stage = compute_page(SpectrumSpec::mgl_mod(3), BaseSpec::real(), Region::column(0, -2), std::nullopt);
  const PageEntry* e = stage.find(t);
  const GroupDescriptor engine_group = e ? e->group : GroupDescriptor::trivial();
  const GroupDescriptor two = einfty_real_oracle(t, 3, J0Reading::TWO);
  const GroupDescriptor zero = einfty_real_oracle(t, 3, J0Reading::ZERO_IDEAL);
  if (!(engine_group == two) || engine_group == zero) out.fail("level-0 ideal evidence inconclusive");
  out.detail << compared << " tri-degrees, " << bidegrees << " labeled bidegrees; MGL/8 at (0,0,-2): engine "
             << engine_group.to_labeled_string() << ", reading (2) " << two.to_labeled_string() << ", reading (0) "
             << zero.to_labeled_string();
}

void bp_family(Outcome& out) {
  const Region window = Region::window(-24, 24, -24, 0);
  std::size_t compared = 0;
  for (auto spec : {SpectrumSpec::bpgl(), SpectrumSpec::bpgl_truncated(0), SpectrumSpec::bpgl_truncated(1),
                    SpectrumSpec::bpgl_truncated(2)})
    compared += compare_region(out, spec, BaseSpec::real(), window, std::nullopt);
  out.detail << compared << " tri-degrees over 4 spectra";
}

void morava(Outcome& out) {
  const Region window = Region::window(-20, 20, -12, 12);
  std::size_t compared = 0, below_line = 0;
  for (int n = 1; n <= 3; ++n) {
    compared += compare_region(out, SpectrumSpec::morava(n), BaseSpec::real(), window, std::nullopt);
    // Nothing survives below the line p - 2w = 0, on either route and already on E^1.
    const Page first = assemble_e1(SpectrumSpec::morava(n), BaseSpec::real(), window);
    const Page last = compute_page(SpectrumSpec::morava(n), BaseSpec::real(), window, std::nullopt, worker_count());
    for (const Page* page : {&first, &last})
      for (const auto& e : page->entries)
        if (e.tri.p - 2 * e.tri.w < 0 && !e.group.is_trivial())
          out.fail("K(" + std::to_string(n) + ") E^" + page->page_name() + " nonzero below the line at " +
                   e.tri.to_string());
    for (std::int64_t w = window.wmin; w <= window.wmax; ++w)
      for (std::int64_t p = window.pmin; p <= window.pmax && p < 2 * w; ++p)
        for (std::int64_t q = -2 * window.wmax - 20; q <= window.pmax - window.wmin; ++q) {
          ++below_line;
          if (!kn_einfty_oracle(n, {p, q, w}, BaseSpec::real()).is_trivial())
            out.fail("K(" + std::to_string(n) + ") oracle nonzero below the line at (" + std::to_string(p) + "," +
                     std::to_string(q) + "," + std::to_string(w) + ")");
        }
  }
  out.detail << compared << " tri-degrees, " << below_line << " oracle evaluations below p - 2w = 0";
}

void steenrod(Outcome& out) {
  std::uint64_t checked = 0;
  for (int k = 0; k <= 256; ++k)
    for (int n = 0; n <= 256; ++n) {
      ++checked;
      if (!(pb_coefficients(k, n, PBMode::CLOSED) == pb_coefficients(k, n, PBMode::RECURSIVE)))
        out.fail("closed and recursive differ at k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  for (int k = 0; k <= 8; ++k)
    for (std::int64_t n = 0; n <= 1024; ++n) {
      ++checked;
      const TauActionTerm q = milnor_q_on_tau_power(k, n);
      const bool bit = lucas_binomial(static_cast<std::uint64_t>(n), std::uint64_t{1} << k) == 1;
      if (q.is_zero() == bit) out.fail("Q_" + std::to_string(k) + " on tau^" + std::to_string(n) + " ignores bit k");
      if (bit && (q.rho_exponent != (std::int64_t{2} << k) - 1 || q.tau_exponent != n - (1 << k)))
        out.fail("Q_" + std::to_string(k) + " on tau^" + std::to_string(n) + " has the wrong bidegree");
      if (!q.is_zero() && !milnor_q_on_tau_power(k, q.tau_exponent).is_zero())
        out.fail("Q_" + std::to_string(k) + " squares to nonzero on tau^" + std::to_string(n));
    }
  out.detail << checked << " evaluations";
}

void number_fields(Outcome& out) {
  std::size_t terms = 0, entries = 0;
  for (const auto& name : kTables) {
    auto t = table(name);
    for (const auto& [term, group] : number_field_einfty(t, 16, 8)) {
      ++terms;
      if (!(group == field_einfty_oracle(*t, term.p, term.q, term.ring)))
        out.fail(name + " term (" + std::to_string(term.p) + "," + std::to_string(term.q) + "," +
                 term.ring.label('x') + ")");
    }
    entries += compare_region(out, SpectrumSpec::mgl_2complete(), BaseSpec::from_table(t, name),
                              Region::window(-16, 16, -4, 0), std::nullopt);
  }
  out.detail << terms << " terms and " << entries << " page entries over " << kTables.size() << " tables";
}

void zeta(Outcome& out) {
  auto half = table("z_half.table");
  int passed = 0, failed = 0;
  for (int n = 1; n <= 6; ++n)
    for (std::int64_t w : {0, -2, -4}) {
      const ZetaReport rep = zeta_cardinality_check(half, n, w);
      std::printf("    zeta n=%d w=%lld lhs=%lld rhs=%lld %s\n", n, static_cast<long long>(w),
                  static_cast<long long>(rep.lhs), static_cast<long long>(rep.rhs), to_string(rep.status).c_str());
      if (rep.status == CheckStatus::PASS) {
        ++passed;
      } else {
        ++failed;
        out.fail("n=" + std::to_string(n) + " w=" + std::to_string(w) + ": " + std::to_string(rep.lhs) +
                 " vs " + std::to_string(rep.rhs));
      }
    }
  out.detail << passed << " pass, " << failed << " fail on " << half->base;
  try {
    zeta_cardinality_check(table("rationals.table"), 1, 0);
  } catch (const Error& e) {
    out.detail << "; integral table not checkable: " << e.what();
  }
}

void structure(Outcome& out) {
  std::uint64_t checked = 0;
  const std::vector<std::pair<SpectrumSpec, int>> models = {
      {SpectrumSpec::mgl_mod(2), 0},        {SpectrumSpec::mgl_mod(3), 0},         {SpectrumSpec::mgl_mod(4), 0},
      {SpectrumSpec::bpgl(), 3},            {SpectrumSpec::bpgl_truncated(1), 3},  {SpectrumSpec::morava(1), 0},
      {SpectrumSpec::morava(2), 0},         {SpectrumSpec::morava(3), 0}};
  for (const auto& [spec, stage] : models) {
    const EngineModel model = EngineModel::for_spectrum(spec, stage);
    const int degree = static_cast<int>(required_ring_degree(Region::window(-12, 12, -12, 0)));
    const GradedBasisTable basis(spec.ring(), spec.kind == SpectrumKind::MORAVA ? 0 : degree);
    for (std::int64_t w = -12; w <= 0; ++w) {
      RealBand band(model, basis, w, -12, 12);
      band.run_to_infinity();
      std::vector<std::string> failures = band.violations();
      for (auto&& f : tridegree_failures(band, checked)) failures.push_back(f);
      for (auto&& f : diagonal_failures(band, checked)) failures.push_back(f);
      for (auto&& f : stabilization_failures(band, checked)) failures.push_back(f);
      if (!failures.empty()) out.fail(model.name() + " w=" + std::to_string(w) + ": " + failures.front());
    }
  }
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto f = leibniz_failures(EngineModel::for_spectrum(SpectrumSpec::mgl_mod(n)), k, 100 * n + k, 500, checked);
      if (!f.empty()) out.fail(f.front());
    }
  auto gauss = collapse_failures(table("gaussian_rationals.table"), 16, 6, checked);
  if (!gauss.empty()) out.fail(gauss.front());
  // Determinism under the worker count.
  const Region region = Region::window(-12, 12, -12, 0);
  std::size_t runs = 0;
  for (auto spec : {SpectrumSpec::mgl_mod(3), SpectrumSpec::mgl_2complete(), SpectrumSpec::bpgl_truncated(1),
                    SpectrumSpec::morava(2)}) {
    ++runs;
    if (to_records(compute_page(spec, BaseSpec::real(), region, std::nullopt, 1)) !=
        to_records(compute_page(spec, BaseSpec::real(), region, std::nullopt, 8)))
      out.fail(spec.name() + " depends on the worker count");
  }
  const BaseSpec half = BaseSpec::from_table(table("z_half.table"), "z_half");
  ++runs;
  if (to_records(compute_page(SpectrumSpec::mgl_2complete(), half, region, std::nullopt, 1)) !=
      to_records(compute_page(SpectrumSpec::mgl_2complete(), half, region, std::nullopt, 8)))
    out.fail("table page depends on the worker count");
  out.detail << checked << " structural assertions, " << runs << " determinism runs";
}

}  // namespace

// With arguments, runs only the listed criterion numbers.
int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"real E-infinity mod 2^n against the closed form", real_einfty},
      {"real E^r for r <= 31 against the closed form", real_pages},
      {"2-adic limit against the presentation", two_adic},
      {"BPGL and its truncations against the presentation", bp_family},
      {"Morava K-theory against the closed form", morava},
      {"Steenrod action on tau powers", steenrod},
      {"number-field E-infinity against the case analysis", number_fields},
      {"zeta-value cardinality identity", zeta},
      {"structural properties and determinism", structure},
  };
  std::vector<bool> selected(criteria.size(), argc <= 1);
  for (int a = 1; a < argc; ++a) {
    const int id = std::atoi(argv[a]);
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[a]);
      return 2;
    }
    selected[static_cast<std::size_t>(id - 1)] = true;
  }
  int failures = 0, run = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    ++run;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("criterion %zu %s: %s [%.1fs] %s\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria failed\n", failures, run);
  return failures == 0 ? 0 : 1;
}
