#include "slicess/chart.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "slicess/band.hpp"
#include "slicess/basis_table.hpp"
#include "slicess/records.hpp"

namespace slicess {

std::vector<Arrow> page_differentials(const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                                      std::int64_t r) {
  std::vector<Arrow> out;
  if (region.empty() || base.kind != BaseSpec::Kind::REAL || spectrum.two_complete()) return out;
  const EngineModel model = EngineModel::for_spectrum(spectrum);
  const RingSpec ring = spectrum.ring();
  const int degree = ring.kind == RingKind::MORAVA ? 0 : static_cast<int>(required_ring_degree(region));
  const GradedBasisTable basis(ring, degree);
  for (std::int64_t w = region.wmin; w <= region.wmax; ++w) {
    RealBand band(model, basis, w, region.pmin, region.pmax, false);
    band.run_to(r);
    std::vector<std::uint8_t> before;
    for (const auto& e : band.entries())
      for (std::uint32_t i = 0; i < e.size; ++i) before.push_back(band.state(e, i).cycle);
    band.turn_page();
    std::size_t k = 0;
    for (const auto& e : band.entries()) {
      std::uint64_t hit = 0;
      for (std::uint32_t i = 0; i < e.size; ++i, ++k)
        if (band.state(e, i).cycle != before[k]) ++hit;
      if (hit && band.in_window(e)) out.push_back({e.tri, r, hit});
    }
  }
  return out;
}

std::string group_shorthand(const GroupDescriptor& g) {
  if (g.is_trivial()) return ".";
  std::map<int, std::uint64_t> counts;
  for (const auto& s : g.summands()) ++counts[s.log2_order];
  std::string out;
  for (const auto& [order, count] : counts) {
    if (!out.empty()) out += "+";
    out += order == 0 ? "Z" : std::to_string(std::uint64_t{1} << order);
    if (count > 1) out += "^" + std::to_string(count);
  }
  if (g.infinite()) out += out.empty() ? "Z^inf" : "+Z^inf";
  return out;
}

namespace {

struct Grid {
  std::int64_t w = 0, qmin = 0, qmax = -1;
  std::map<std::pair<std::int64_t, std::int64_t>, const PageEntry*> boxes;  // (p, q)
};

std::vector<Grid> grids(const Page& page) {
  std::map<std::int64_t, Grid> by_weight;
  for (std::int64_t w = page.region.wmin; w <= page.region.wmax && !page.region.empty(); ++w) by_weight[w].w = w;
  for (const auto& e : page.entries) {
    if (e.group.is_trivial()) continue;
    Grid& g = by_weight[e.tri.w];
    g.w = e.tri.w;
    if (g.boxes.empty()) {
      g.qmin = g.qmax = e.tri.q;
    } else {
      g.qmin = std::min(g.qmin, e.tri.q);
      g.qmax = std::max(g.qmax, e.tri.q);
    }
    g.boxes[{e.tri.p, e.tri.q}] = &e;
  }
  std::vector<Grid> out;
  for (auto& [w, g] : by_weight) out.push_back(std::move(g));
  return out;
}

std::string title(const Page& page) {
  return page.spectrum + " over " + page.base + ", E^" + page.page_name();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_chart_ascii(const Page& page, const std::vector<Arrow>& arrows) {
  std::ostringstream out;
  out << title(page) << "\n";
  for (const Grid& g : grids(page)) {
    out << "\nweight w=" << g.w << "\n";
    if (g.boxes.empty()) {
      out << "  (empty)\n";
      continue;
    }
    std::size_t width = 3;
    for (const auto& [pos, e] : g.boxes) width = std::max(width, group_shorthand(e->group).size() + 1);
    for (std::int64_t q = g.qmax; q >= g.qmin; --q) {
      std::string row = "q=" + std::to_string(q);
      row.resize(6, ' ');
      out << row << "|";
      for (std::int64_t p = page.region.pmin; p <= page.region.pmax; ++p) {
        auto it = g.boxes.find({p, q});
        std::string cell = it == g.boxes.end() ? "." : group_shorthand(it->second->group);
        cell.insert(0, width - cell.size(), ' ');
        out << cell;
      }
      out << "\n";
    }
    out << "      +";
    for (std::int64_t p = page.region.pmin; p <= page.region.pmax; ++p) {
      std::string cell = std::to_string(p);
      cell.insert(0, width > cell.size() ? width - cell.size() : 0, ' ');
      out << cell;
    }
    out << "  p\n";
    for (const auto& [pos, e] : g.boxes)
      out << "  box (" << 2 * pos.second - pos.first << "," << pos.second - g.w << ") at p=" << pos.first
          << " q=" << pos.second << ": " << e->group.to_labeled_string() << "\n";
    for (const Arrow& a : arrows)
      if (a.source.w == g.w)
        out << "  d^" << a.r << ": (" << a.source.p << "," << a.source.q << ") -> (" << a.source.p - 1 << ","
            << a.source.q + a.r << ") on " << a.classes << " class" << (a.classes == 1 ? "" : "es") << "\n";
  }
  return out.str();
}

std::string render_chart_svg(const Page& page, const std::vector<Arrow>& arrows) {
  constexpr int cell = 64, margin = 48;
  const auto all = grids(page);
  const std::int64_t columns = page.region.empty() ? 0 : page.region.pmax - page.region.pmin + 1;
  std::int64_t total_rows = 0;
  for (const Grid& g : all) total_rows += std::max<std::int64_t>(1, g.qmax - g.qmin + 1) + 1;
  const std::int64_t width = 2 * margin + columns * cell;
  const std::int64_t height = 2 * margin + total_rows * cell;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<metadata><![CDATA[\n" << to_records(page) << "]]></metadata>\n";
  out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
         "<path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
  out << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-size=\"14\">" << xml_escape(title(page))
      << "</text>\n";
  std::int64_t top = margin;
  for (const Grid& g : all) {
    const std::int64_t rows = std::max<std::int64_t>(1, g.qmax - g.qmin + 1);
    out << "<text x=\"4\" y=\"" << top + 14 << "\" font-size=\"12\">w=" << g.w << "</text>\n";
    auto x_of = [&](std::int64_t p) { return margin + (p - page.region.pmin) * cell; };
    auto y_of = [&](std::int64_t q) { return top + (g.qmax - q) * cell; };
    for (const auto& [pos, e] : g.boxes) {
      const auto x = x_of(pos.first), y = y_of(pos.second);
      out << "<rect x=\"" << x + 2 << "\" y=\"" << y + 2 << "\" width=\"" << cell - 4 << "\" height=\"" << cell - 4
          << "\" fill=\"none\" stroke=\"black\"/>\n";
      out << "<text x=\"" << x + 6 << "\" y=\"" << y + 16 << "\" font-size=\"9\">(" << 2 * pos.second - pos.first
          << "," << pos.second - g.w << ")</text>\n";
      out << "<text x=\"" << x + 6 << "\" y=\"" << y + 38 << "\" font-size=\"12\">"
          << xml_escape(group_shorthand(e->group)) << "</text>\n";
    }
    for (const Arrow& a : arrows) {
      if (a.source.w != g.w) continue;
      const auto x1 = x_of(a.source.p) + cell / 2, y1 = y_of(a.source.q) + cell / 2;
      const auto x2 = x_of(a.source.p - 1) + cell / 2, y2 = y_of(a.source.q + a.r) + cell / 2;
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"red\" marker-end=\"url(#head)\"/>\n";
    }
    for (std::int64_t p = page.region.pmin; p <= page.region.pmax; ++p)
      out << "<text x=\"" << x_of(p) + cell / 2 - 4 << "\" y=\"" << top + rows * cell + 14 << "\" font-size=\"10\">" << p
          << "</text>\n";
    top += (rows + 1) * cell;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace slicess
