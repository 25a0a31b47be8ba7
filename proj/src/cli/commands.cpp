#include "slicess/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "slicess/cache.hpp"
#include "slicess/chart.hpp"
#include "slicess/compare.hpp"
#include "slicess/error.hpp"
#include "slicess/records.hpp"
#include "slicess/zeta.hpp"

namespace slicess {

namespace {

enum class Format { TEXT, CHART_ASCII, CHART_SVG, RECORDS };

struct RunConfig {
  std::string spectrum = "MGL";
  std::string mod;
  std::string base = "real";
  std::string table;
  std::string column;
  std::string window;
  std::string page = "inf";
  std::string format;
  std::string cache_dir;
  std::string output;
  bool no_cache = false;
  int workers = 1;
  std::uint64_t seed = 1;
  std::string n_range = "1..6";
  std::string w_range = "0";
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Usage(flag + ": expected integers, got '" + text + "'");
    }
  }
  return out;
}

// "a..b" or "a,b,c".
std::vector<std::int64_t> parse_range(const std::string& text, const std::string& flag) {
  std::smatch m;
  if (std::regex_match(text, m, std::regex(R"((-?\d+)\.\.(-?\d+))"))) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = std::stoll(m[1]); v <= std::stoll(m[2]); ++v) out.push_back(v);
    return out;
  }
  return parse_ints(text, flag);
}

Region parse_region(const RunConfig& cfg) {
  if (cfg.column.empty() == cfg.window.empty()) throw Usage("give exactly one of --column p,w and --window");
  if (!cfg.column.empty()) {
    auto v = parse_ints(cfg.column, "--column");
    if (v.size() != 2) throw Usage("--column needs p,w");
    return Region::column(v[0], v[1]);
  }
  auto v = parse_ints(cfg.window, "--window");
  if (v.size() == 1) {
    if (v[0] < 0) throw Usage("--window N needs N >= 0");
    return Region::window(-v[0], v[0], -v[0], 0);
  }
  if (v.size() != 4) throw Usage("--window needs N or pmin,pmax,wmin,wmax");
  return Region::window(v[0], v[1], v[2], v[3]);
}

std::optional<std::int64_t> parse_page(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::nullopt;
  auto v = parse_ints(text, "--page");
  if (v.size() != 1 || v[0] < 1) throw Usage("--page needs r >= 1 or inf");
  return v[0];
}

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "TEXT") return Format::TEXT;
  if (text == "CHART_ASCII") return Format::CHART_ASCII;
  if (text == "CHART_SVG") return Format::CHART_SVG;
  if (text == "RECORDS") return Format::RECORDS;
  throw Usage("unknown --format '" + text + "'");
}

SpectrumSpec resolve_spectrum(const RunConfig& cfg) {
  SpectrumSpec s = parse_spectrum(cfg.spectrum);
  if (cfg.mod.empty()) return s;
  if (s.kind == SpectrumKind::MGL_2COMPLETE) return parse_spectrum("MGL/" + cfg.mod);
  if (s.kind == SpectrumKind::MGL_MOD && parse_spectrum("MGL/" + cfg.mod) == s) return s;
  throw Usage("--mod applies to MGL only");
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream body;
  body << in.rdbuf();
  std::ostringstream out;
  out << std::hex << stable_digest(body.str());
  return out.str();
}

BaseSpec resolve_base(const RunConfig& cfg) {
  if (!cfg.table.empty()) {
    if (cfg.base != "real" && cfg.base != "table") throw Usage("--base must be real or table");
    return BaseSpec::from_table(std::make_shared<const CohomologyTable>(load_table_file(cfg.table)), cfg.table);
  }
  if (cfg.base == "table") throw Usage("--base table needs --table <path>");
  if (cfg.base != "real") throw Usage("unknown --base '" + cfg.base + "'");
  return BaseSpec::real();
}

PageCache resolve_cache(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return PageCache(cfg.cache_dir);
  std::filesystem::path fallback = ".slicess-cache";
  if (const char* home = std::getenv("HOME"); home && *home) fallback = std::filesystem::path(home) / ".cache" / "slicess";
  return PageCache::from_environment(fallback);
}

Page engine_page(const RunConfig& cfg, const SpectrumSpec& spectrum, const BaseSpec& base, const Region& region,
                 std::optional<std::int64_t> r) {
  if (cfg.workers < 1) throw Usage("--workers must be >= 1");
  if (cfg.no_cache) return compute_page(spectrum, base, region, r, cfg.workers);
  const PageCache cache = resolve_cache(cfg);
  const std::string base_key = base.kind == BaseSpec::Kind::TABLE ? base.label + "#" + file_digest(base.label) : base.label;
  const std::string key = PageCache::key(spectrum.name(), base_key, region, r ? std::to_string(*r) : "inf");
  if (auto hit = cache.load(key)) return *hit;
  Page page = compute_page(spectrum, base, region, r, cfg.workers);
  cache.store(key, page);
  return page;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file || !(file << text)) throw Error(ErrorKind::IO, "cannot write " + cfg.output);
}

std::string render_text(const Page& page) {
  std::ostringstream out;
  out << page.spectrum << " over " << page.base << ", E^" << page.page_name() << ", region " << page.region.to_string()
      << "\n";
  for (const auto& m : page.metadata) out << "# " << m << "\n";
  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<bool, std::int64_t>> columns;  // (p, w) -> finite, log2
  for (const auto& e : page.entries) {
    auto& col = columns.try_emplace({e.tri.p, e.tri.w}, true, 0).first->second;
    if (e.group.is_trivial()) continue;
    out << e.tri.to_string() << "  " << e.group.to_labeled_string();
    if (e.stabilized_at > 0) out << "  [stable from E^" << e.stabilized_at << "]";
    out << "\n";
    if (e.group.is_finite())
      col.second += e.group.log2_order();
    else
      col.first = false;
  }
  for (const auto& [pw, col] : columns)
    out << "column p=" << pw.first << " w=" << pw.second << ": associated graded order "
        << (col.first ? "2^" + std::to_string(col.second) : std::string("infinite")) << "\n";
  return out.str();
}

std::string render(const Page& page, Format format, const std::vector<Arrow>& arrows) {
  switch (format) {
    case Format::TEXT: return render_text(page);
    case Format::RECORDS: return to_records(page);
    case Format::CHART_ASCII: return render_chart_ascii(page, arrows);
    case Format::CHART_SVG: return render_chart_svg(page, arrows);
  }
  return {};
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const SpectrumSpec spectrum = resolve_spectrum(cfg);
  const BaseSpec base = resolve_base(cfg);
  const Region region = parse_region(cfg);
  const auto r = parse_page(cfg.page);
  const Format format = parse_format(cfg.format, Format::TEXT);
  const Page page = engine_page(cfg, spectrum, base, region, r);
  std::vector<Arrow> arrows;
  if (r && (format == Format::CHART_ASCII || format == Format::CHART_SVG))
    arrows = page_differentials(spectrum, base, region, *r);
  write_output(cfg, render(page, format, arrows), out);
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const SpectrumSpec spectrum = resolve_spectrum(cfg);
  const BaseSpec base = resolve_base(cfg);
  const Region region = parse_region(cfg);
  const auto r = parse_page(cfg.page);
  const Format format = parse_format(cfg.format, Format::TEXT);
  const Page oracle = oracle_page(spectrum, base, region, r);
  const Page engine = engine_page(cfg, spectrum, base, region, r);
  const auto mismatches = compare_pages(engine, oracle);
  std::ostringstream text;
  if (format == Format::RECORDS) {
    text << "slicess-compare 1\n";
    text << "summary spectrum=" << spectrum.name() << " base=" << base.label << " region=" << region.to_string()
         << " page=" << engine.page_name() << " mismatches=" << mismatches.size() << "\n";
    for (const auto& m : mismatches) {
      GroupDescriptor a = parse_group(m.engine), b = parse_group(m.oracle);
      text << "mismatch p=" << m.tri.p << " q=" << m.tri.q << " w=" << m.tri.w << " engine=" << group_token(a)
           << " oracle=" << group_token(b) << "\n";
    }
  } else {
    text << "compare " << spectrum.name() << " over " << base.label << ", E^" << engine.page_name() << ", region "
         << region.to_string() << ": " << mismatches.size() << " mismatch" << (mismatches.size() == 1 ? "" : "es")
         << "\n";
    for (const auto& m : mismatches)
      text << "  " << m.tri.to_string() << " engine " << m.engine << " oracle " << m.oracle << "\n";
  }
  write_output(cfg, text.str(), out);
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_chart(const RunConfig& cfg, std::ostream& out) {
  const SpectrumSpec spectrum = resolve_spectrum(cfg);
  const BaseSpec base = resolve_base(cfg);
  const Region region = parse_region(cfg);
  const auto r = parse_page(cfg.page);
  const Format format = parse_format(cfg.format, Format::CHART_ASCII);
  if (format != Format::CHART_ASCII && format != Format::CHART_SVG) throw Usage("chart needs CHART_ASCII or CHART_SVG");
  const Page page = engine_page(cfg, spectrum, base, region, r);
  const auto arrows = r ? page_differentials(spectrum, base, region, *r) : std::vector<Arrow>{};
  write_output(cfg, render(page, format, arrows), out);
  return kExitOk;
}

int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
  if (cfg.table.empty()) throw Usage("zeta needs --table <path>");
  const Format format = parse_format(cfg.format, Format::RECORDS);
  auto table = std::make_shared<const CohomologyTable>(load_table_file(cfg.table));
  bool failed = false;
  std::ostringstream text;
  if (format == Format::RECORDS) text << "slicess-zeta 1\n";
  for (std::int64_t n : parse_range(cfg.n_range, "--n"))
    for (std::int64_t w : parse_range(cfg.w_range, "--w")) {
      const ZetaReport rep = zeta_cardinality_check(table, static_cast<int>(n), w);
      failed |= rep.status == CheckStatus::FAIL;
      if (format == Format::RECORDS)
        text << "zeta n=" << rep.n << " w=" << rep.w << " lhs=" << rep.lhs << " rhs=" << rep.rhs
             << " status=" << to_string(rep.status) << "\n";
      else
        text << "n=" << rep.n << " w=" << rep.w << ": lhs valuation " << rep.lhs << ", rhs valuation " << rep.rhs
             << ", " << to_string(rep.status) << (rep.note.empty() ? "" : " (" + rep.note + ")") << "\n";
    }
  write_output(cfg, text.str(), out);
  return failed ? kExitMismatch : kExitOk;
}

void add_page_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--spectrum", cfg.spectrum, "MGL, MGL/<2^n>, BPGL, BPGL<m>, K(n)");
  cmd->add_option("--mod", cfg.mod, "modulus 2^n for MGL");
  cmd->add_option("--base", cfg.base, "real or table");
  cmd->add_option("--table", cfg.table, "cohomology table file");
  cmd->add_option("--column", cfg.column, "p,w");
  cmd->add_option("--window", cfg.window, "N or pmin,pmax,wmin,wmax");
  cmd->add_option("--page", cfg.page, "r >= 1 or inf");
  cmd->add_option("--format", cfg.format, "TEXT, CHART_ASCII, CHART_SVG or RECORDS");
  cmd->add_option("--cache-dir", cfg.cache_dir, "page cache directory");
  cmd->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
  cmd->add_option("--workers", cfg.workers, "threads for column computations");
  cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
  cmd->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slice spectral sequence calculator", "slicess"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int(const RunConfig&, std::ostream&)> action;
  auto* compute = app.add_subcommand("compute", "compute E^r or E^infinity on a column or window");
  auto* compare = app.add_subcommand("compare", "compare the engine against the closed forms");
  auto* chart = app.add_subcommand("chart", "render a page as a chart");
  auto* zeta = app.add_subcommand("zeta", "check the zeta cardinality identity on a table");
  for (auto* cmd : {compute, compare, chart}) add_page_flags(cmd, cfg);
  zeta->add_option("--table", cfg.table, "cohomology table file")->required();
  zeta->add_option("--n", cfg.n_range, "a..b or a,b,c");
  zeta->add_option("--w", cfg.w_range, "a..b or a,b,c");
  zeta->add_option("--format", cfg.format, "TEXT or RECORDS");
  zeta->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
  compute->callback([&] { action = cmd_compute; });
  compare->callback([&] { action = cmd_compare; });
  chart->callback([&] { action = cmd_chart; });
  zeta->callback([&] { action = cmd_zeta; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return action(cfg, out);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace slicess
