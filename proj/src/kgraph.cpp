#include "kpalg/kgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kpalg {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '@' || c == '\'' || c == ',' || c == ':';
  });
}

std::uint32_t narrow(std::size_t i) { return static_cast<std::uint32_t>(i); }

}  // namespace

KGraph::Builder::Builder(std::string name, std::size_t rank) : name_(std::move(name)), rank_(rank) {}

KGraph::Builder& KGraph::Builder::add_vertex(const std::string& name) {
  vertices_.push_back(name);
  return *this;
}

KGraph::Builder& KGraph::Builder::add_edge(const std::string& name, std::size_t color,
                                           const std::string& source, const std::string& range) {
  edges_.push_back({name, color, source, range});
  return *this;
}

KGraph::Builder& KGraph::Builder::add_square(const std::string& a, const std::string& b,
                                             const std::string& c, const std::string& d) {
  squares_.push_back({a, b, c, d});
  return *this;
}

KGraph KGraph::Builder::build() const {
  if (rank_ < 1) throw Error(ErrorKind::ParseError, "rank must be positive");
  KGraph g;
  g.name_ = name_;
  g.rank_ = rank_;

  for (const auto& v : vertices_) {
    if (!valid_identifier(v)) throw Error(ErrorKind::ParseError, "bad vertex identifier '" + v + "'");
    if (g.vertex_index_.count(v)) throw Error(ErrorKind::DuplicateIdentifier, "vertex " + v);
    g.vertex_index_[v] = VertexId{narrow(g.vertex_names_.size())};
    g.vertex_names_.push_back(v);
  }
  g.edges_at_.assign(g.vertex_names_.size(), std::vector<std::vector<EdgeId>>(rank_));

  for (const auto& e : edges_) {
    if (!valid_identifier(e.name)) throw Error(ErrorKind::ParseError, "bad edge identifier '" + e.name + "'");
    if (g.edge_index_.count(e.name) || g.vertex_index_.count(e.name))
      throw Error(ErrorKind::DuplicateIdentifier, "edge " + e.name);
    if (e.color < 1 || e.color > rank_)
      throw Error(ErrorKind::ParseError, "edge " + e.name + " has colour outside 1.." + std::to_string(rank_));
    auto s = g.find_vertex(e.source);
    auto r = g.find_vertex(e.range);
    if (!s) throw Error(ErrorKind::DanglingVertexRef, "edge " + e.name + " source " + e.source);
    if (!r) throw Error(ErrorKind::DanglingVertexRef, "edge " + e.name + " range " + e.range);
    EdgeId id{narrow(g.edges_.size())};
    g.edge_index_[e.name] = id;
    g.edges_.push_back({e.name, e.color - 1, *s, *r});
    g.edges_at_[r->index][e.color - 1].push_back(id);
  }

  auto lookup = [&](const std::string& n) {
    auto e = g.find_edge(n);
    if (!e) throw Error(ErrorKind::UnknownIdentifier, "square references unknown edge " + n);
    return *e;
  };
  for (const auto& sq : squares_) {
    Square s{lookup(sq[0]), lookup(sq[1]), lookup(sq[2]), lookup(sq[3])};
    const Edge& a = g.edge(s.a);
    const Edge& b = g.edge(s.b);
    const Edge& c = g.edge(s.c);
    const Edge& d = g.edge(s.d);
    std::string label = "square " + sq[0] + " " + sq[1] + " ~ " + sq[2] + " " + sq[3];
    if (!(a.color < b.color && a.color == d.color && b.color == c.color))
      throw Error(ErrorKind::SquareEndpointMismatch, label + ": colours must satisfy c(a)=c(d)<c(b)=c(c)");
    if (a.source != b.range || c.source != d.range || a.range != c.range || b.source != d.source)
      throw Error(ErrorKind::SquareEndpointMismatch, label + ": endpoints do not commute");
    auto left = std::make_pair(s.a.index, s.b.index);
    auto right = std::make_pair(s.c.index, s.d.index);
    if (g.swap_.count(left)) throw Error(ErrorKind::DuplicateSquare, label + ": left side already paired");
    if (g.swap_.count(right)) throw Error(ErrorKind::DuplicateSquare, label + ": right side already paired");
    g.swap_[left] = {s.c, s.d};
    g.swap_[right] = {s.a, s.b};
    g.squares_.push_back(s);
  }

  // Every composable bi-coloured pair must be paired.
  for (std::uint32_t x = 0; x < g.edges_.size(); ++x) {
    const Edge& ex = g.edges_[x];
    for (std::size_t col = 0; col < rank_; ++col) {
      if (col == ex.color) continue;
      for (EdgeId y : g.edges_at(ex.source, col)) {
        if (!g.swap_.count({x, y.index}))
          throw Error(ErrorKind::MissingSquare,
                      "pair " + ex.name + " " + g.edges_[y.index].name + " has no square");
      }
    }
  }

  if (rank_ >= 3) g.check_confluence();
  return g;
}

std::vector<VertexId> KGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_names_.size());
  for (std::size_t i = 0; i < vertex_names_.size(); ++i) out.push_back(VertexId{narrow(i)});
  return out;
}

std::optional<VertexId> KGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId KGraph::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::UnknownIdentifier, "vertex " + name);
  return *v;
}

std::optional<EdgeId> KGraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Path KGraph::vertex_path(VertexId v) const {
  Path p;
  p.range_ = p.source_ = v;
  p.degree_ = Degree(rank_);
  return p;
}

Path KGraph::edge_path(EdgeId e) const {
  const Edge& ed = edge(e);
  Path p;
  p.range_ = ed.range;
  p.source_ = ed.source;
  p.edges_ = {e};
  p.degree_ = Degree::unit(rank_, ed.color);
  return p;
}

std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId x, EdgeId y) const {
  auto it = swap_.find({x.index, y.index});
  if (it == swap_.end())
    throw Error(ErrorKind::NotComposable, "no square for " + edge(x).name + " " + edge(y).name);
  return it->second;
}

Path KGraph::path_from_word(const std::vector<EdgeId>& word, std::optional<VertexId> base) const {
  if (word.empty()) {
    if (!base) throw Error(ErrorKind::NotComposable, "empty word without a base vertex");
    return vertex_path(*base);
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (edge(word[i]).source != edge(word[i + 1]).range)
      throw Error(ErrorKind::NotComposable,
                  "edges " + edge(word[i]).name + " and " + edge(word[i + 1]).name + " do not meet");
  if (base && *base != edge(word.front()).range)
    throw Error(ErrorKind::NotComposable, "word does not start at the base vertex");

  Path p;
  p.edges_ = word;
  p.degree_ = Degree(rank_);
  for (EdgeId e : word) p.degree_[edge(e).color] += 1;
  // Bubble the colours into ascending blocks; each square application removes
  // exactly one inversion.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.edges_.size(); ++i) {
      if (edge(p.edges_[i]).color > edge(p.edges_[i + 1]).color) {
        auto [c, d] = swap(p.edges_[i], p.edges_[i + 1]);
        p.edges_[i] = c;
        p.edges_[i + 1] = d;
        changed = true;
      }
    }
  }
  p.range_ = edge(p.edges_.front()).range;
  p.source_ = edge(p.edges_.back()).source;
  return p;
}

Path KGraph::parse_path(const std::string& dotted) const {
  if (auto v = find_vertex(dotted)) return vertex_path(*v);
  std::vector<EdgeId> word;
  std::stringstream ss(dotted);
  std::string item;
  while (std::getline(ss, item, '.')) {
    auto e = find_edge(item);
    if (!e) throw Error(ErrorKind::UnknownIdentifier, "edge or vertex " + item);
    word.push_back(*e);
  }
  if (word.empty()) throw Error(ErrorKind::ParseError, "empty path");
  return path_from_word(word);
}

std::string KGraph::render(const Path& p, char sep) const {
  if (p.is_vertex()) return vertex_name(p.range());
  std::string out;
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i) out += sep;
    out += edge(p.edges()[i]).name;
  }
  return out;
}

Path KGraph::compose(const Path& mu, const Path& nu) const {
  if (mu.source() != nu.range())
    throw Error(ErrorKind::NotComposable, "s(" + render(mu) + ") != r(" + render(nu) + ")");
  if (mu.is_vertex()) return nu;
  if (nu.is_vertex()) return mu;
  std::vector<EdgeId> word = mu.edges();
  word.insert(word.end(), nu.edges().begin(), nu.edges().end());
  return path_from_word(word);
}

Path KGraph::rewrite_to_colors(const Path& p, const std::vector<std::size_t>& colors) const {
  // Returns a (non-canonical) representative whose colour sequence is `colors`.
  Path out = p;
  auto& w = out.edges_;
  for (std::size_t pos = 0; pos < colors.size(); ++pos) {
    std::size_t q = pos;
    while (edge(w[q]).color != colors[pos]) ++q;
    for (; q > pos; --q) {
      auto [c, d] = swap(w[q - 1], w[q]);
      w[q - 1] = c;
      w[q] = d;
    }
  }
  return out;
}

std::pair<Path, Path> KGraph::factorize(const Path& lambda, const Degree& m) const {
  if (!(Degree(rank_).leq(m) && m.leq(lambda.degree())))
    throw Error(ErrorKind::DegreeOutOfRange, "factorisation degree " + m.to_string() +
                                                 " outside [0, " + lambda.degree().to_string() + "]");
  if (m.is_zero()) return {vertex_path(lambda.range()), lambda};
  if (m == lambda.degree()) return {lambda, vertex_path(lambda.source())};
  std::vector<std::size_t> colors;
  Degree rest = lambda.degree() - m;
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), m[c], c);
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), rest[c], c);
  Path rep = rewrite_to_colors(lambda, colors);
  auto split = rep.edges_.begin() + static_cast<long>(m.total());
  std::vector<EdgeId> head(rep.edges_.begin(), split);
  std::vector<EdgeId> tail(split, rep.edges_.end());
  return {path_from_word(head), path_from_word(tail)};
}

Path KGraph::segment(const Path& lambda, const Degree& m, const Degree& n) const {
  if (!m.leq(n)) throw Error(ErrorKind::DegreeOutOfRange, "segment bounds out of order");
  auto upto = factorize(lambda, n).first;
  return factorize(upto, m).second;
}

std::vector<Path> KGraph::paths_of_degree(VertexId v, const Degree& n) const {
  std::vector<Path> out;
  std::vector<std::size_t> colors;
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), n[c], c);
  if (colors.empty()) return {vertex_path(v)};
  std::vector<EdgeId> word;
  // Depth-first over colour-sorted words; edge order makes the output lexicographic.
  auto dfs = [&](auto&& self, VertexId at, std::size_t depth) -> void {
    if (depth == colors.size()) {
      Path p;
      p.range_ = v;
      p.source_ = at;
      p.edges_ = word;
      p.degree_ = n;
      out.push_back(std::move(p));
      return;
    }
    for (EdgeId e : edges_at(at, colors[depth])) {
      word.push_back(e);
      self(self, edge(e).source, depth + 1);
      word.pop_back();
    }
  };
  dfs(dfs, v, 0);
  return out;
}

std::vector<Path> KGraph::paths_within(VertexId v, const Degree& bound) const {
  std::vector<Path> out;
  for (const Degree& m : box(bound)) {
    auto ps = paths_of_degree(v, m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> KGraph::paths_leq(VertexId v, const Degree& n) const {
  std::vector<Path> out;
  for (const Path& p : paths_within(v, n)) {
    bool maximal = true;
    for (std::size_t i = 0; i < rank_ && maximal; ++i)
      if (p.degree()[i] + 1 <= n[i] && emits(p.source(), i)) maximal = false;
    if (maximal) out.push_back(p);
  }
  return out;
}

bool KGraph::visit_paths_leq(VertexId v, const Degree& n,
                             const std::function<bool(const Path&)>& visit) const {
  for (const Degree& m : box(n)) {
    for (const Path& p : paths_of_degree(v, m)) {
      bool maximal = true;
      for (std::size_t i = 0; i < rank_ && maximal; ++i)
        if (m[i] + 1 <= n[i] && emits(p.source(), i)) maximal = false;
      if (maximal && !visit(p)) return false;
    }
  }
  return true;
}

GraphProperties KGraph::properties() const {
  GraphProperties props{true, true};
  for (VertexId v : vertices()) {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (!emits(v, i)) props.no_sources = false;
      for (std::size_t j = 0; j < rank_; ++j) {
        if (i == j || !emits(v, i) || !emits(v, j)) continue;
        for (EdgeId l : edges_at(v, i))
          if (!emits(edge(l).source, j)) props.locally_convex = false;
      }
    }
  }
  return props;
}

void KGraph::check_confluence() const {
  // For every tri-coloured composable triple, every rewrite order must reach
  // the same colour-sorted word.
  auto sorted_forms = [&](std::vector<EdgeId> start) {
    std::set<std::vector<EdgeId>> results;
    std::set<std::vector<EdgeId>> seen;
    std::vector<std::vector<EdgeId>> stack{start};
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      if (!seen.insert(w).second) continue;
      bool sorted = true;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (edge(w[i]).color > edge(w[i + 1]).color) {
          sorted = false;
          auto next = w;
          auto [c, d] = swap(w[i], w[i + 1]);
          next[i] = c;
          next[i + 1] = d;
          stack.push_back(next);
        }
      }
      if (sorted) results.insert(w);
    }
    return results;
  };
  for (std::uint32_t x = 0; x < edges_.size(); ++x) {
    const Edge& ex = edges_[x];
    for (std::size_t cy = 0; cy < rank_; ++cy) {
      if (cy == ex.color) continue;
      for (EdgeId y : edges_at(ex.source, cy)) {
        for (std::size_t cz = 0; cz < rank_; ++cz) {
          if (cz == ex.color || cz == cy) continue;
          for (EdgeId z : edges_at(edge(y).source, cz)) {
            auto forms = sorted_forms({EdgeId{x}, y, z});
            if (forms.size() != 1)
              throw Error(ErrorKind::ConfluenceFailure, "word " + ex.name + " " + edge(y).name + " " +
                                                            edge(z).name + " has " +
                                                            std::to_string(forms.size()) + " sorted forms");
          }
        }
      }
    }
  }
}

bool operator==(const KGraph& a, const KGraph& b) {
  if (a.rank_ != b.rank_ || a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size() ||
      a.squares_.size() != b.squares_.size())
    return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.name != y.name || x.color != y.color || x.source != y.source || x.range != y.range) return false;
  }
  for (std::size_t i = 0; i < a.squares_.size(); ++i) {
    const Square& x = a.squares_[i];
    const Square& y = b.squares_[i];
    if (x.a != y.a || x.b != y.b || x.c != y.c || x.d != y.d) return false;
  }
  return true;
}

}  // namespace kpalg
