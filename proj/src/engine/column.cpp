#include "slicess/column.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "slicess/arith.hpp"
#include "slicess/band.hpp"
#include "slicess/basis_table.hpp"
#include "slicess/error.hpp"
#include "slicess/limit.hpp"
#include "slicess/number_field.hpp"

namespace slicess {

std::string Region::to_string() const {
  return std::to_string(pmin) + "," + std::to_string(pmax) + "," + std::to_string(wmin) + "," + std::to_string(wmax);
}

const PageEntry* Page::find(const TriDegree& t) const {
  for (const auto& e : entries)
    if (e.tri == t) return &e;
  return nullptr;
}

std::int64_t required_ring_degree(const Region& region) { return std::max<std::int64_t>(0, region.pmax + 1 - region.wmin); }

namespace {

constexpr int kLowStage = 2;

// Runs fn(w) for every weight of the region, at most `workers` at a time, and
// concatenates the per-weight results in weight order.
std::vector<PageEntry> for_each_weight(const Region& region, int workers,
                                       const std::function<std::vector<PageEntry>(std::int64_t)>& fn) {
  const std::int64_t count = region.empty() ? 0 : region.wmax - region.wmin + 1;
  std::vector<std::vector<PageEntry>> slots(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::mutex lock;
  std::int64_t next = 0;
  auto work = [&] {
    while (true) {
      std::int64_t i;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (next >= count) return;
        i = next++;
      }
      try {
        slots[i] = fn(region.wmin + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, workers); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<PageEntry> out;
  for (auto& s : slots)
    for (auto& e : s) out.push_back(std::move(e));
  return out;
}

Page header(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region, std::optional<std::int64_t> r) {
  Page page;
  page.spectrum = spectrum.name();
  page.base = base.label;
  page.region = region;
  page.r = r;
  if (spectrum.kind == SpectrumKind::MORAVA) page.metadata.push_back("psi=zero_assumed");
  page.metadata.push_back("grading=associated_graded");
  return page;
}

void sort_entries(std::vector<PageEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const PageEntry& a, const PageEntry& b) {
    return std::tie(a.tri.w, a.tri.p, a.tri.q) < std::tie(b.tri.w, b.tri.p, b.tri.q);
  });
}

std::vector<PageEntry> real_finite_weight(const EngineModel& model, const GradedBasisTable& basis, const Region& region,
                                          std::int64_t w, std::optional<std::int64_t> page) {
  RealBand band(model, basis, w, region.pmin, region.pmax, false);
  if (page)
    band.run_to(*page);
  else
    band.run_to_infinity();
  std::vector<PageEntry> out;
  for (const auto& e : band.entries()) {
    if (!band.in_window(e)) continue;
    PageEntry pe{e.tri, band.group(e, true), page ? 0 : band.stabilization_page(e)};
    out.push_back(std::move(pe));
  }
  return out;
}

std::vector<PageEntry> real_two_complete_weight(const SpectrumSpec& spectrum, const GradedBasisTable& basis,
                                                const Region& region, std::int64_t w,
                                                std::optional<std::int64_t> page) {
  const EngineModel low = EngineModel::for_spectrum(spectrum, kLowStage);
  const EngineModel high = EngineModel::for_spectrum(spectrum, kLowStage + 1);
  RealBand a(low, basis, w, region.pmin, region.pmax, false), b(high, basis, w, region.pmin, region.pmax, false);
  const std::int64_t target = page ? *page : std::max(a.infinity_page(), b.infinity_page());
  a.run_to(target);
  b.run_to(target);
  std::vector<PageEntry> out;
  for (const auto& e : a.entries()) {
    if (!a.in_window(e)) continue;
    LimitEntry limit = limit_2adic(a, b, e, true);
    const RealBand::Entry* other = b.find(e.tri.p, e.tri.q);
    out.push_back({e.tri, std::move(limit.group),
                   page ? 0 : std::max(a.stabilization_page(e), b.stabilization_page(*other))});
  }
  return out;
}

// Slice degrees of the column (p, w) over a table base, with the Picard slot.
std::vector<std::int64_t> table_slices(std::int64_t p, std::int64_t w) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = std::max<std::int64_t>(0, ceil_div(p, 2)); q <= p - w; ++q) out.push_back(q);
  const std::int64_t picard = w + 1;  // cohomological (2,1)
  if (picard >= 0 && 2 * picard - p == 2 && std::find(out.begin(), out.end(), picard) == out.end())
    out.push_back(picard);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PageEntry> table_weight(const BaseSpec& base, const Region& region, std::int64_t w,
                                    std::optional<std::int64_t> page) {
  NumberFieldEngine engine(base.table);
  std::vector<PageEntry> out;
  for (std::int64_t p = region.pmin; p <= region.pmax; ++p) {
    for (std::int64_t q : table_slices(p, w)) {
      const int cp = static_cast<int>(2 * q - p), cq = static_cast<int>(q - w);
      PageEntry pe;
      pe.tri = {p, q, w};
      std::int64_t stable = 1;
      for (const MultiIndex& m : graded_basis(RingSpec::lazard(), q)) {
        const FieldTerm term{cp, cq, m};
        GroupDescriptor g = page ? engine.er(term, *page) : engine.einfty(term);
        if (g.infinite()) pe.group.set_infinite(true);
        const std::string ring = m.label('x');
        for (const auto& s : g.summands()) {
          const std::string label = s.label.empty() ? ring : s.label + "*" + ring;
          if (s.log2_order == 0)
            pe.group.add_free(label);
          else
            pe.group.add_cyclic(s.log2_order, label);
        }
        if (!page) {
          const std::int64_t top = NumberFieldEngine::infinity_page(term);
          std::int64_t first = 1;
          for (std::int64_t k = 1; (std::int64_t{1} << k) <= top; ++k) {
            const std::int64_t r = (std::int64_t{1} << k) - 1;
            if (!(engine.er(term, r + 1) == engine.er(term, r))) first = r + 1;
          }
          stable = std::max(stable, first);
        }
      }
      pe.stabilized_at = page ? 0 : stable;
      out.push_back(std::move(pe));
    }
  }
  return out;
}

void require_supported(const SpectrumSpec& spectrum, const BaseSpec& base) {
  if (base.kind == BaseSpec::Kind::TABLE) {
    if (spectrum.kind != SpectrumKind::MGL_2COMPLETE)
      throw Error(ErrorKind::UNSUPPORTED_PAIRING, spectrum.name() + " over a table base is not supported; use MGL");
    if (!base.table) throw Error(ErrorKind::INVALID_ARGUMENT, "table base without a table");
  }
}

}  // namespace

Page compute_page(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                  std::optional<std::int64_t> page, int workers) {
  if (page && *page < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "page must be >= 1");
  if (workers < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "worker count must be >= 1");
  require_supported(spectrum, base);
  Page out = header(spectrum, base, region, page);
  if (region.empty()) return out;
  if (base.kind == BaseSpec::Kind::TABLE) {
    out.entries = for_each_weight(region, workers, [&](std::int64_t w) { return table_weight(base, region, w, page); });
  } else {
    const RingSpec ring = spectrum.ring();
    const int degree = ring.kind == RingKind::MORAVA ? 0 : static_cast<int>(required_ring_degree(region));
    const GradedBasisTable basis(ring, degree);
    if (spectrum.two_complete()) {
      out.entries = for_each_weight(region, workers, [&](std::int64_t w) {
        return real_two_complete_weight(spectrum, basis, region, w, page);
      });
    } else {
      const EngineModel model = EngineModel::for_spectrum(spectrum);
      out.entries = for_each_weight(region, workers, [&](std::int64_t w) {
        return real_finite_weight(model, basis, region, w, page);
      });
    }
  }
  sort_entries(out.entries);
  return out;
}

Page assemble_e1(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region, int workers) {
  return compute_page(spectrum, base, region, 1, workers);
}

std::vector<std::string> ColumnReport::filtration() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back("q=" + std::to_string(e.tri.q) + " " + e.group.to_string());
  return out;
}

ColumnReport compute_column(const SpectrumSpec& spectrum, const BaseSpec& base, std::int64_t p, std::int64_t w) {
  Page page = compute_page(spectrum, base, Region::column(p, w), std::nullopt, 1);
  ColumnReport report;
  report.p = p;
  report.w = w;
  for (auto& e : page.entries) {
    if (e.group.is_trivial()) continue;
    if (e.group.is_finite())
      report.log2_order += e.group.log2_order();
    else
      report.finite = false;
    report.entries.push_back(std::move(e));
  }
  if (!report.finite) report.log2_order = 0;
  return report;
}

}  // namespace slicess
