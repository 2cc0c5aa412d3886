#include "hyperricci/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace hyperricci {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

double parse_double(std::string_view tok, int line) {
  std::string s(tok);
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw ParseError(line, "expected decimal weight, got '" + s + "'");
  }
  return value;
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

Hypergraph parse(std::string_view text) {
  int n = -1;
  bool allow_multi = false;
  std::vector<Hyperedge> edges;
  std::map<int, std::string> names;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == '#') {
      // pragmas: "# vertex <i> <name>", "# allow-multi"
      std::vector<std::string_view> rest(toks.begin(), toks.end());
      if (rest[0] == "#") rest.erase(rest.begin());
      else rest[0].remove_prefix(1);
      if (rest.size() == 3 && rest[0] == "vertex") {
        int idx = parse_int(rest[1], line_no, "vertex index");
        names[idx] = std::string(rest[2]);
      } else if (rest.size() == 1 && rest[0] == "allow-multi") {
        allow_multi = true;
      }
      continue;
    }

    if (n < 0) {
      if (toks[0] != "vertices" || toks.size() != 2) {
        throw ParseError(line_no, "first line must be 'vertices <n>'");
      }
      n = parse_int(toks[1], line_no, "vertex count");
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      continue;
    }
    if (toks[0] != "edge") throw ParseError(line_no, "expected 'edge <w> <v1> ... <vk>'");
    if (toks.size() < 3) throw ParseError(line_no, "edge needs a weight and at least one vertex");
    Hyperedge e;
    e.weight = parse_double(toks[1], line_no);
    if (!(e.weight > 0.0)) {
      throw ValidationError("line " + std::to_string(line_no) + ": edge weight must be positive");
    }
    for (std::size_t i = 2; i < toks.size(); ++i) {
      int v = parse_int(toks[i], line_no, "vertex index");
      if (v < 0 || v >= n) throw ParseError(line_no, "vertex index out of range");
      e.vertices.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  if (n < 0) throw ParseError(line_no, "missing 'vertices <n>' line");

  Hypergraph h(n, std::move(edges), allow_multi);
  if (!names.empty()) {
    std::vector<std::string> table(static_cast<std::size_t>(n));
    for (auto& [idx, label] : names) {
      if (idx < 0 || idx >= n) throw ValidationError("vertex name index out of range");
      table[static_cast<std::size_t>(idx)] = label;
    }
    h.set_names(std::move(table));
  }
  return h;
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  if (h.allow_multi()) out << "# allow-multi\n";
  for (int v = 0; v < static_cast<int>(h.names().size()); ++v) {
    if (!h.names()[static_cast<std::size_t>(v)].empty()) out << "# vertex " << v << ' ' << h.names()[static_cast<std::size_t>(v)] << '\n';
  }
  out << "vertices " << h.num_vertices() << '\n';
  for (const auto& e : h.edges()) {
    out << "edge " << format_weight(e.weight);
    for (int v : e.vertices) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Hypergraph read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace hyperricci
