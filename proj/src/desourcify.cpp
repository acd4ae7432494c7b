#include "kpalg/desourcify.hpp"

#include "json.hpp"

namespace kpalg {

namespace {

bool emits_none_of(const KGraph& g, VertexId v, const Degree& a) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (a[i] > 0 && g.emits(v, i)) return false;
  return true;
}

void require_valid(const KGraph& g, const MorphismClass& f) {
  if (!is_valid_class(g, f)) throw Error(ErrorKind::InvalidClass, "invalid class " + render_class(g, f));
}

nlohmann::ordered_json coords(const Degree& d) { return d.coords(); }

}  // namespace

bool is_valid_class(const KGraph& g, const VertexClass& c) {
  return c.offset.rank() == g.rank() && c.offset.is_nonnegative() && emits_none_of(g, c.base, c.offset);
}

bool is_valid_class(const KGraph& g, const MorphismClass& f) {
  if (f.offset.rank() != g.rank() || f.degree.rank() != g.rank()) return false;
  if (!f.offset.is_nonnegative() || !f.path.degree().leq(f.degree)) return false;
  if (!meet(f.offset, f.path.degree()).is_zero()) return false;
  return is_valid_class(g, range_class(f)) && is_valid_class(g, source_class(f));
}

VertexClass range_class(const MorphismClass& f) { return {f.path.range(), f.offset}; }

VertexClass source_class(const MorphismClass& f) {
  return {f.path.source(), f.offset + f.degree - f.path.degree()};
}

VertexClass vertex_class(const KGraph& g, const UPBoundaryPath& x, const Degree& m) {
  Degree low = meet(m, x.degree());
  return {vertex_at(g, x, low), m - low};
}

MorphismClass morphism_class(const KGraph& g, const UPBoundaryPath& x, const Degree& m, const Degree& n) {
  if (!m.leq(n)) throw Error(ErrorKind::DegreeOrderViolation, m.to_string() + " is not <= " + n.to_string());
  Degree lo = meet(m, x.degree());
  Degree hi = meet(n, x.degree());
  return {segment(g, x, lo, hi), m - lo, n - m};
}

std::pair<UPBoundaryPath, Degree> representative(const KGraph& g, const VertexClass& c) {
  if (!is_valid_class(g, c)) throw Error(ErrorKind::InvalidClass, "invalid vertex class " + class_name(g, c));
  UPBoundaryPath x = greedy_boundary_path(g, c.base);
  if (vertex_class(g, x, c.offset) != c) throw std::logic_error("internal: bad vertex representative");
  return {x, c.offset};
}

std::pair<UPBoundaryPath, std::pair<Degree, Degree>> representative(const KGraph& g, const MorphismClass& f) {
  require_valid(g, f);
  UPBoundaryPath x = extend(g, f.path, greedy_boundary_path(g, f.path.source()));
  Degree m = f.offset;
  Degree n = f.offset + f.degree;
  if (morphism_class(g, x, m, n) != f) throw std::logic_error("internal: bad morphism representative");
  return {x, {m, n}};
}

MorphismClass identity_class(const KGraph& g, const VertexClass& c) {
  return {g.vertex_path(c.base), c.offset, Degree(g.rank())};
}

MorphismClass compose_classes(const KGraph& g, const MorphismClass& f, const MorphismClass& h) {
  require_valid(g, f);
  require_valid(g, h);
  if (source_class(f) != range_class(h))
    throw Error(ErrorKind::NotComposable, render_class(g, f) + " o " + render_class(g, h));
  return {g.compose(f.path, h.path), f.offset, f.degree + h.degree};
}

MorphismClass compose_via_representatives(const KGraph& g, const MorphismClass& f, const MorphismClass& h) {
  auto [x, mn] = representative(g, f);
  auto [y, pq] = representative(g, h);
  const auto& [m, n] = mn;
  const auto& [p, q] = pq;
  if (vertex_class(g, x, n) != vertex_class(g, y, p))
    throw Error(ErrorKind::NotComposable, render_class(g, f) + " o " + render_class(g, h));
  Path head = segment(g, x, Degree(g.rank()), meet(n, x.degree()));
  UPBoundaryPath z = extend(g, head, shift(g, y, meet(p, y.degree())));
  return morphism_class(g, z, m, n + q - p);
}

std::pair<MorphismClass, MorphismClass> factor_class(const KGraph& g, const MorphismClass& f, const Degree& m) {
  if (!m.is_nonnegative() || !m.leq(f.degree))
    throw Error(ErrorKind::DegreeOutOfRange, "cannot split degree " + f.degree.to_string() + " at " + m.to_string());
  auto [x, pq] = representative(g, f);
  const auto& [p, q] = pq;
  return {morphism_class(g, x, p, p + m), morphism_class(g, x, p + m, q)};
}

MorphismClass iota(const Path& lambda) {
  return {lambda, Degree(lambda.degree().rank()), lambda.degree()};
}

MorphismClass pi(const MorphismClass& f) { return {f.path, Degree(f.degree.rank()), f.path.degree()}; }

std::string class_name(const KGraph& g, const VertexClass& c) {
  return g.vertex_name(c.base) + "@" + c.offset.to_string('_');
}

std::string render_class(const KGraph& g, const MorphismClass& f) {
  return "(" + g.render(f.path) + ", " + f.offset.to_string() + ", " + f.degree.to_string() + ")";
}

MorphismClass Truncation::class_of(const KGraph& base, const Path& p) const {
  if (p.is_vertex()) return identity_class(base, vertex_classes.at(p.range().index));
  MorphismClass out = edge_classes.at(p.edges().front().index);
  for (std::size_t i = 1; i < p.edges().size(); ++i)
    out = compose_classes(base, out, edge_classes.at(p.edges()[i].index));
  return out;
}

std::optional<VertexId> Truncation::find(const VertexClass& c) const {
  for (std::uint32_t i = 0; i < vertex_classes.size(); ++i)
    if (vertex_classes[i] == c) return VertexId{i};
  return std::nullopt;
}

Truncation desourcify_truncated(const KGraph& g, long bound) {
  if (!g.is_locally_convex()) throw Error(ErrorKind::NotLocallyConvex, g.name() + " is not locally convex");
  if (bound < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative truncation bound");
  const std::size_t k = g.rank();
  const Degree ceiling = Degree::constant(k, bound);

  Truncation t;
  t.bound = bound;
  std::vector<std::string> vnames;
  for (VertexId w : g.vertices())
    for (const Degree& a : box(ceiling)) {
      VertexClass c{w, a};
      if (!is_valid_class(g, c)) continue;
      t.vertex_classes.push_back(c);
      vnames.push_back(class_name(g, c));
    }

  KGraph::Builder b(g.name() + "_tilde", k);
  for (const auto& n : vnames) b.add_vertex(n);

  std::map<MorphismClass, std::string> edge_name;
  std::vector<std::size_t> edge_color;
  for (const VertexClass& c : t.vertex_classes) {
    for (std::size_t i = 0; i < k; ++i) {
      Degree unit = Degree::unit(k, i);
      std::vector<std::pair<MorphismClass, std::string>> edges;
      if (g.emits(c.base, i)) {
        for (EdgeId e : g.edges_at(c.base, i))
          edges.push_back({{g.edge_path(e), c.offset, unit}, g.edge(e).name + "@" + c.offset.to_string('_')});
      } else if (c.offset[i] + 1 <= bound) {
        edges.push_back({{g.vertex_path(c.base), c.offset, unit},
                         g.vertex_name(c.base) + "'" + std::to_string(i + 1) + "@" + c.offset.to_string('_')});
      }
      for (auto& [cls, name] : edges) {
        b.add_edge(name, i + 1, class_name(g, source_class(cls)), class_name(g, c));
        edge_name[cls] = name;
        t.edge_classes.push_back(cls);
        edge_color.push_back(i);
      }
    }
  }

  for (std::size_t x = 0; x < t.edge_classes.size(); ++x) {
    const MorphismClass& fx = t.edge_classes[x];
    for (std::size_t y = 0; y < t.edge_classes.size(); ++y) {
      if (edge_color[y] <= edge_color[x]) continue;
      const MorphismClass& fy = t.edge_classes[y];
      if (source_class(fx) != range_class(fy)) continue;
      MorphismClass f = compose_classes(g, fx, fy);
      auto [c, d] = factor_class(g, f, Degree::unit(k, edge_color[y]));
      b.add_square(edge_name.at(fx), edge_name.at(fy), edge_name.at(c), edge_name.at(d));
    }
  }
  t.graph = b.build();

  for (std::uint32_t v = 0; v < t.vertex_classes.size(); ++v) {
    const VertexClass& c = t.vertex_classes[v];
    bool inside = true;
    for (std::size_t i = 0; i < k; ++i)
      if (!g.emits(c.base, i) && c.offset[i] >= bound) inside = false;
    if (inside) t.interior.insert(VertexId{v});
  }
  return t;
}

std::string sidecar_json(const KGraph& g, const Truncation& t) {
  nlohmann::ordered_json j;
  j["graph"] = t.graph.name();
  j["base"] = g.name();
  j["bound"] = t.bound;
  nlohmann::ordered_json vs = nlohmann::ordered_json::object();
  for (std::uint32_t v = 0; v < t.vertex_classes.size(); ++v) {
    const VertexClass& c = t.vertex_classes[v];
    vs[t.graph.vertex_name(VertexId{v})] = {{"base", g.vertex_name(c.base)},
                                            {"offset", coords(c.offset)},
                                            {"interior", t.interior.count(VertexId{v}) > 0}};
  }
  j["vertices"] = vs;
  nlohmann::ordered_json es = nlohmann::ordered_json::object();
  for (std::uint32_t e = 0; e < t.edge_classes.size(); ++e) {
    const MorphismClass& f = t.edge_classes[e];
    es[t.graph.edge(EdgeId{e}).name] = {
        {"path", g.render(f.path)}, {"offset", coords(f.offset)}, {"degree", coords(f.degree)}};
  }
  j["edges"] = es;
  return j.dump(2) + "\n";
}

}  // namespace kpalg
