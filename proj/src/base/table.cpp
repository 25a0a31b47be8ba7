#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "slicess/base_data.hpp"
#include "slicess/error.hpp"
#include "slicess/int_matrix.hpp"

namespace slicess {

namespace {

struct Cursor {
  std::string_view text;
  int line;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::PARSE, "line " + std::to_string(line) + ": " + what);
  }
  void skip_space() {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  }
  bool done() {
    skip_space();
    return text.empty();
  }
  bool consume(std::string_view token) {
    skip_space();
    if (text.substr(0, token.size()) != token) return false;
    text.remove_prefix(token.size());
    return true;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string word() {
    skip_space();
    std::size_t n = 0;
    while (n < text.size() && (std::isalnum(static_cast<unsigned char>(text[n])) || text[n] == '_')) ++n;
    if (n == 0) fail("expected a word");
    std::string out(text.substr(0, n));
    text.remove_prefix(n);
    return out;
  }
  long long integer() {
    skip_space();
    std::size_t n = 0;
    if (n < text.size() && text[n] == '-') ++n;
    while (n < text.size() && std::isdigit(static_cast<unsigned char>(text[n]))) ++n;
    if (n == 0 || (n == 1 && text[0] == '-')) fail("expected an integer");
    long long v = std::stoll(std::string(text.substr(0, n)));
    text.remove_prefix(n);
    return v;
  }
  // "<int>" or "inf"; inf reported as -1.
  long long rank() {
    if (consume("inf")) return -1;
    long long v = integer();
    if (v < 0) fail("negative rank");
    return v;
  }
  std::vector<long long> int_list() {
    expect("[");
    std::vector<long long> out;
    if (consume("]")) return out;
    do out.push_back(integer());
    while (consume(","));
    expect("]");
    return out;
  }
  std::vector<std::vector<long long>> matrix() {
    expect("[");
    std::vector<std::vector<long long>> out;
    if (consume("]")) return out;
    do out.push_back(int_list());
    while (consume(","));
    expect("]");
    return out;
  }
};

int log2_of_order(const Cursor& c, long long order) {
  if (order < 2 || (order & (order - 1)) != 0) c.fail("torsion order " + std::to_string(order) + " is not a power of 2 >= 2");
  int e = 0;
  while ((1LL << e) < order) ++e;
  return e;
}

struct ParsedGroup {
  long long free = 0;  // -1 for inf
  std::vector<int> torsion;
};

ParsedGroup parse_group_fields(Cursor& c, bool braces) {
  ParsedGroup g;
  if (braces) c.expect("{");
  bool any = false;
  while (true) {
    if (braces && c.consume("}")) break;
    if (c.consume("free:")) {
      g.free = c.rank();
    } else if (c.consume("torsion:")) {
      for (long long o : c.int_list()) g.torsion.push_back(log2_of_order(c, o));
    } else {
      break;
    }
    any = true;
    c.consume(",");
  }
  if (!any) c.fail("expected group fields");
  return g;
}

std::uint64_t bits_to_mask(const Cursor& c, const std::vector<long long>& bits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) c.fail("map entries must be bits");
    if (bits[i]) v |= std::uint64_t{1} << i;
  }
  return v;
}

std::string generator_label(int p, int q, std::size_t i) {
  return "h" + std::to_string(p) + "," + std::to_string(q) + "[" + std::to_string(i) + "]";
}

TableEntry parse_entry(Cursor& c, int r1) {
  TableEntry e;
  e.p = static_cast<int>(c.integer());
  e.q = static_cast<int>(c.integer());
  c.expect("=");
  ParsedGroup g = parse_group_fields(c, false);
  std::optional<std::vector<std::vector<long long>>> map, image;
  std::optional<ParsedGroup> kernel;
  while (!c.done()) {
    if (c.consume("map:")) {
      map = c.matrix();
    } else if (c.consume("image:")) {
      image = c.matrix();
    } else if (c.consume("kernel:")) {
      kernel = parse_group_fields(c, true);
    } else {
      c.fail("unexpected text '" + std::string(c.text) + "'");
    }
  }
  if (g.free < 0) {
    e.group = GroupDescriptor::infinite_rank(g.torsion);
    if (map) c.fail("INF entries take image:[...] instead of map:[...]");
    F2Subspace img(r1);
    if (image)
      for (const auto& v : *image) {
        if (static_cast<int>(v.size()) != r1) c.fail("image vectors must have r1 entries");
        img.insert(bits_to_mask(c, v));
      }
    e.image = img;
    if (kernel) {
      e.kernel = kernel->free < 0 ? GroupDescriptor::infinite_rank(kernel->torsion)
                                  : GroupDescriptor::from_orders(static_cast<std::uint64_t>(kernel->free), kernel->torsion);
    }
    return e;
  }
  if (image || kernel) c.fail("image:/kernel: are only allowed on INF entries");
  const std::size_t gens = static_cast<std::size_t>(g.free) + g.torsion.size();
  std::vector<std::uint64_t> columns(gens, 0);
  if (map && !map->empty()) {
    if (static_cast<int>(map->size()) != r1) c.fail("map must have r1 rows");
    for (int row = 0; row < r1; ++row) {
      if ((*map)[row].size() != gens) c.fail("map row length must equal the generator count");
      for (std::size_t j = 0; j < gens; ++j) {
        long long b = (*map)[row][j];
        if (b != 0 && b != 1) c.fail("map entries must be bits");
        if (b) columns[j] |= std::uint64_t{1} << row;
      }
    }
  }
  // Canonical order: free generators, then torsion ascending (stable).
  std::vector<std::pair<int, std::uint64_t>> summands;
  for (long long i = 0; i < g.free; ++i) summands.emplace_back(0, columns[i]);
  for (std::size_t i = 0; i < g.torsion.size(); ++i) summands.emplace_back(g.torsion[i], columns[g.free + i]);
  std::stable_sort(summands.begin(), summands.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].first == 0)
      e.group.add_free(generator_label(e.p, e.q, i));
    else
      e.group.add_cyclic(summands[i].first, generator_label(e.p, e.q, i));
    e.map_columns.push_back(summands[i].second);
  }
  return e;
}

bool on_support(int p, int q) { return (p == 0 && q == 0) || (p == 2 && q == 1) || (1 <= p && p <= q); }

int f2_rank(const std::vector<std::uint64_t>& columns, int dim) { return F2Subspace::span(dim, columns).dim(); }

void validate(CohomologyTable& t) {
  std::map<int, int> odd_cokernels;
  for (auto& [key, e] : t.entries) {
    const bool nonzero = !e.group.is_trivial();
    if (nonzero && !on_support(e.p, e.q))
      throw Error(ErrorKind::VANISHING_VIOLATION,
                  "nonzero entry at (" + std::to_string(e.p) + "," + std::to_string(e.q) + ") outside 1 <= p <= q");
    const bool target = real_two_adic_nonzero(e.p, e.q);
    const F2Subspace img = t.image(e.p, e.q);
    if (!target && img.dim() > 0)
      throw Error(ErrorKind::SHAPE_VIOLATION,
                  "nonzero map into a vanishing real group at (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")");
    if (e.p >= 3) {
      const bool parity = (e.q - e.p) % 2 == 0;
      GroupDescriptor expected = parity ? GroupDescriptor::from_orders(0, std::vector<int>(t.r1, 1)) : GroupDescriptor();
      if (!(e.group == expected) || (parity && f2_rank(e.map_columns, t.r1) != t.r1))
        throw Error(ErrorKind::SHAPE_VIOLATION, "entry at (" + std::to_string(e.p) + "," + std::to_string(e.q) +
                                                    ") must be (Z/2)^r1 with an isomorphism to the real embeddings");
    }
    if (e.p == 2 && e.q >= 2 && e.q % 2 == 0 && img.dim() != t.r1)
      throw Error(ErrorKind::SURJECTIVITY_VIOLATION,
                  "map at (2," + std::to_string(e.q) + ") is not onto (Z/2)^r1");
    if (e.p == 1 && e.q % 2 == 1) odd_cokernels[e.q] = t.r1 - img.dim();
  }
  for (int q = 2; q <= t.qmax; q += 2)
    if (t.r1 > 0 && !t.entries.count({2, q}))
      throw Error(ErrorKind::SURJECTIVITY_VIOLATION, "missing entry at (2," + std::to_string(q) + ") cannot surject");
  std::set<int> distinct;
  for (auto [q, d] : odd_cokernels) distinct.insert(d);
  if (distinct.size() > 1) t.warnings.push_back("H^{1,q} cokernels differ across odd q");
}

}  // namespace

TableEntry CohomologyTable::entry(int p, int q) const {
  auto it = entries.find({p, q});
  if (it != entries.end()) return it->second;
  TableEntry e;
  e.p = p;
  e.q = q;
  e.implied = true;
  if (p >= 3 && q >= p && (q - p) % 2 == 0) {
    for (int i = 0; i < r1; ++i) {
      e.group.add_cyclic(1, "h" + std::to_string(p) + "," + std::to_string(q) + "[" + std::to_string(i) + "]");
      e.map_columns.push_back(std::uint64_t{1} << i);
    }
  } else if ((p == 1 || p == 2) && q > qmax && q >= 1) {
    throw Error(ErrorKind::UNDERSPECIFIED, "table gives no data at (" + std::to_string(p) + "," + std::to_string(q) +
                                               "); qmax is " + std::to_string(qmax));
  }
  return e;
}

F2Subspace CohomologyTable::image(int p, int q) const {
  TableEntry e = entry(p, q);
  if (e.image) return *e.image;
  return F2Subspace::span(r1, e.map_columns);
}

GroupDescriptor CohomologyTable::preimage(int p, int q, const F2Subspace& allowed) const {
  TableEntry e = entry(p, q);
  if (e.group.infinite()) {
    const F2Subspace img = *e.image;
    if (img.is_subspace_of(allowed)) return e.group;
    if (img.intersect(allowed).dim() == 0) {
      if (!e.kernel)
        throw Error(ErrorKind::UNDERSPECIFIED,
                    "INF entry at (" + std::to_string(p) + "," + std::to_string(q) + ") has no kernel descriptor");
      return *e.kernel;
    }
    throw Error(ErrorKind::UNDERSPECIFIED, "preimage of a proper subspace in an INF entry");
  }
  // Kernel of H -> F_2^{r1} / allowed: coordinates off the pivot bits of `allowed`.
  std::vector<int> rows;
  std::uint64_t pivots = 0;
  for (auto b : allowed.basis()) pivots |= std::uint64_t{1} << (63 - __builtin_clzll(b));
  for (int bit = 0; bit < r1; ++bit)
    if (!(pivots >> bit & 1)) rows.push_back(bit);
  const std::size_t m = e.group.summand_count();
  IntMatrix d_out(rows.size(), m, 2);
  for (std::size_t j = 0; j < m; ++j) {
    std::uint64_t v = allowed.reduce(e.map_columns[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) d_out.set(i, j, (v >> rows[i]) & 1);
  }
  GroupDescriptor k = subquotient_homology(IntMatrix(m, 0), d_out, e.group);
  return k;
}

CohomologyTable load_and_validate_table(std::string_view document) {
  CohomologyTable t;
  bool have_base = false, have_r1 = false, have_coeff = false, have_qmax = false;
  std::vector<std::pair<int, std::string>> entry_lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= document.size()) {
    std::size_t end = document.find('\n', start);
    if (end == std::string_view::npos) end = document.size();
    std::string_view line = document.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c{line, line_no};
    if (c.done()) {
      if (end == document.size()) break;
      continue;
    }
    std::string key = c.word();
    if (key == "base") {
      c.skip_space();
      t.base = std::string(c.text);
      while (!t.base.empty() && std::isspace(static_cast<unsigned char>(t.base.back()))) t.base.pop_back();
      if (t.base.empty()) c.fail("empty base label");
      c.text = {};
      have_base = true;
    } else if (key == "r1") {
      long long v = c.integer();
      if (v < 0 || v > 64) c.fail("r1 must lie in [0, 64]");
      t.r1 = static_cast<int>(v);
      have_r1 = true;
    } else if (key == "coeff") {
      std::string kind = c.word();
      if (kind == "MOD2") t.coeff = Coefficient::mod2();
      else if (kind == "MOD2N") t.coeff = Coefficient::mod2n(static_cast<int>(c.integer()));
      else if (kind == "TWO_ADIC") t.coeff = Coefficient::two_adic();
      else if (kind == "INT") t.coeff = Coefficient::integer();
      else c.fail("unknown coefficient '" + kind + "'");
      have_coeff = true;
    } else if (key == "qmax") {
      t.qmax = static_cast<int>(c.integer());
      have_qmax = true;
    } else if (key == "flag") {
      t.flags.insert(c.word());
    } else if (key == "vcd") {
      t.vcd = static_cast<int>(c.integer());
    } else if (key == "H") {
      entry_lines.emplace_back(line_no, std::string(c.text));
      continue;
    } else {
      c.fail("unknown header '" + key + "'");
    }
    if (!c.done()) c.fail("trailing text");
  }
  if (!have_base || !have_r1 || !have_coeff) throw Error(ErrorKind::PARSE, "missing base, r1 or coeff header");
  int listed_qmax = 0;
  for (auto& [line, text] : entry_lines) {
    Cursor c{text, line};
    TableEntry e = parse_entry(c, t.r1);
    if (t.entries.count({e.p, e.q})) c.fail("duplicate entry");
    listed_qmax = std::max(listed_qmax, e.q);
    t.entries[{e.p, e.q}] = std::move(e);
  }
  if (!have_qmax) t.qmax = listed_qmax;
  validate(t);
  return t;
}

CohomologyTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IO, "cannot open table '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_and_validate_table(buffer.str());
}

GroupDescriptor kernel_tilde(const CohomologyTable& table, int p, int q) {
  if (!on_support(p, q)) return {};
  if (p >= 3) return {};
  if (table.r1 == 0 || !real_two_adic_nonzero(p, q)) return table.group(p, q);
  return table.preimage(p, q, F2Subspace(table.r1));
}

GroupDescriptor cokernel_bar(const CohomologyTable& table, int p, int q, int level) {
  if (level < 1) throw Error(ErrorKind::INVALID_ARGUMENT, "level must be >= 1");
  const int sp = p - ((1 << (level + 1)) - 1), sq = q - ((1 << level) - 1);
  const GroupDescriptor source = on_support(sp, sq) ? table.group(sp, sq) : GroupDescriptor();
  if (source.is_trivial()) return on_support(p, q) ? table.group(p, q) : GroupDescriptor();
  if (p < 3)
    throw Error(ErrorKind::PRECONDITION, "cokernel at (" + std::to_string(p) + "," + std::to_string(q) +
                                             ") needs p >= 3 or a vanishing source");
  if (!real_two_adic_nonzero(p, q)) return {};
  const int rank = table.image(sp, sq).dim();
  return GroupDescriptor::from_orders(0, std::vector<int>(table.r1 - rank, 1));
}

}  // namespace slicess
