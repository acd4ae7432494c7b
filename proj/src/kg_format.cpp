#include "kpalg/kg_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace kpalg {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_count(std::size_t line, const std::string& tok) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0) fail(line, "expected a non-negative integer, got '" + tok + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

KGraph parse_kg(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::optional<KGraph::Builder> builder;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& dir = tok[0];
    if (dir == "kgraph") {
      if (builder) fail(lineno, "duplicate kgraph header");
      if (tok.size() != 4 || tok[2] != "rank") fail(lineno, "expected 'kgraph <name> rank <k>'");
      builder.emplace(tok[1], parse_count(lineno, tok[3]));
      continue;
    }
    if (!builder) fail(lineno, "missing 'kgraph' header before '" + dir + "'");
    if (dir == "vertex") {
      if (tok.size() != 2) fail(lineno, "expected 'vertex <id>'");
      builder->add_vertex(tok[1]);
    } else if (dir == "edge") {
      if (tok.size() != 8 || tok[2] != "color" || tok[4] != "from" || tok[6] != "to")
        fail(lineno, "expected 'edge <id> color <i> from <source> to <range>'");
      builder->add_edge(tok[1], parse_count(lineno, tok[3]), tok[5], tok[7]);
    } else if (dir == "square") {
      if (tok.size() != 6 || tok[3] != "~") fail(lineno, "expected 'square <a> <b> ~ <c> <d>'");
      builder->add_square(tok[1], tok[2], tok[4], tok[5]);
    } else {
      fail(lineno, "unknown directive '" + dir + "'");
    }
  }
  if (!builder) throw Error(ErrorKind::ParseError, "no 'kgraph' header");
  return builder->build();
}

KGraph load_kg(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_kg(ss.str());
}

std::string write_kg(const KGraph& g) {
  std::ostringstream out;
  out << "kgraph " << g.name() << " rank " << g.rank() << "\n";
  for (VertexId v : g.vertices()) out << "vertex " << g.vertex_name(v) << "\n";
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(EdgeId{i});
    out << "edge " << e.name << " color " << e.color + 1 << " from " << g.vertex_name(e.source) << " to "
        << g.vertex_name(e.range) << "\n";
  }
  for (const Square& s : g.squares())
    out << "square " << g.edge(s.a).name << " " << g.edge(s.b).name << " ~ " << g.edge(s.c).name << " "
        << g.edge(s.d).name << "\n";
  return out.str();
}

}  // namespace kpalg
