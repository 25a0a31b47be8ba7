#include "slicess/records.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "slicess/error.hpp"

namespace slicess {

namespace {

std::map<std::string, std::string> parse_fields(std::string_view line, int line_no) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(line)};
  std::string field;
  in >> field;  // record kind
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::PARSE, "records line " + std::to_string(line_no) + ": bad field");
    out[field.substr(0, eq)] = field.substr(eq + 1);
  }
  return out;
}

std::int64_t to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw Error(ErrorKind::PARSE, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::PARSE, "bad integer '" + s + "'");
  }
}

std::string field(const std::map<std::string, std::string>& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) throw Error(ErrorKind::PARSE, "missing field '" + key + "'");
  return it->second;
}

}  // namespace

std::string group_token(const GroupDescriptor& g) {
  std::string s = g.to_string();
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

GroupDescriptor parse_group_token(std::string_view token) {
  std::string spaced;
  for (char c : token) {
    if (c == '+')
      spaced += " + ";
    else
      spaced += c;
  }
  return parse_group(spaced);
}

std::string to_records(const Page& page) {
  std::ostringstream out;
  out << "slicess-records 1\n";
  out << "header spectrum=" << page.spectrum << " base=" << page.base << " region=" << page.region.to_string()
      << " page=" << page.page_name() << "\n";
  for (const auto& m : page.metadata) out << "meta " << m << "\n";
  for (const auto& e : page.entries) {
    out << "entry p=" << e.tri.p << " q=" << e.tri.q << " w=" << e.tri.w << " group=" << group_token(e.group)
        << " stab=" << e.stabilized_at;
    if (!e.group.is_trivial() && e.group.labeled()) {
      out << " labels=";
      bool first = true;
      for (const auto& g : e.group.generators()) {
        out << (first ? "" : ";") << g;
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

Page parse_records(std::string_view text) {
  Page page;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool seen_version = false, seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!seen_version) {
      if (line != "slicess-records 1") throw Error(ErrorKind::PARSE, "not a records document");
      seen_version = true;
      continue;
    }
    const std::string kind = line.substr(0, line.find(' '));
    if (kind == "header") {
      auto f = parse_fields(line, line_no);
      page.spectrum = field(f, "spectrum");
      page.base = field(f, "base");
      std::vector<std::int64_t> bounds;
      std::istringstream region(field(f, "region"));
      for (std::string part; std::getline(region, part, ',');) bounds.push_back(to_int(part));
      if (bounds.size() != 4) throw Error(ErrorKind::PARSE, "region needs four bounds");
      page.region = Region::window(bounds[0], bounds[1], bounds[2], bounds[3]);
      const std::string p = field(f, "page");
      if (p != "inf") page.r = to_int(p);
      seen_header = true;
    } else if (kind == "meta") {
      page.metadata.push_back(line.substr(5));
    } else if (kind == "entry") {
      auto f = parse_fields(line, line_no);
      PageEntry e;
      e.tri = {to_int(field(f, "p")), to_int(field(f, "q")), to_int(field(f, "w"))};
      const GroupDescriptor plain = parse_group_token(field(f, "group"));
      e.stabilized_at = to_int(field(f, "stab"));
      if (auto it = f.find("labels"); it != f.end()) {
        std::vector<std::string> labels;
        std::istringstream ls(it->second);
        for (std::string l; std::getline(ls, l, ';');) labels.push_back(l);
        if (labels.size() != plain.summand_count()) throw Error(ErrorKind::PARSE, "label count mismatch");
        GroupDescriptor labeled;
        labeled.set_infinite(plain.infinite());
        for (std::size_t i = 0; i < labels.size(); ++i) {
          const int order = plain.summands()[i].log2_order;
          if (order == 0)
            labeled.add_free(labels[i]);
          else
            labeled.add_cyclic(order, labels[i]);
        }
        e.group = labeled;
      } else {
        e.group = plain;
      }
      page.entries.push_back(std::move(e));
    } else {
      throw Error(ErrorKind::PARSE, "records line " + std::to_string(line_no) + ": unknown record '" + kind + "'");
    }
  }
  if (!seen_header) throw Error(ErrorKind::PARSE, "records without header");
  return page;
}

}  // namespace slicess
