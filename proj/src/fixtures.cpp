#include "kpalg/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "kpalg/kg_format.hpp"

namespace kpalg::fixtures {

KGraph l1() {
  return KGraph::Builder("L1", 1).add_vertex("v").add_edge("e", 1, "v", "v").build();
}

KGraph a2() {
  return KGraph::Builder("A2", 1).add_vertex("u").add_vertex("v").add_edge("e", 1, "v", "u").build();
}

KGraph d2() { return KGraph::Builder("D2", 1).add_vertex("u").add_vertex("w").build(); }

KGraph t2() {
  return KGraph::Builder("T2", 2)
      .add_vertex("v")
      .add_edge("f", 1, "v", "v")
      .add_edge("g", 2, "v", "v")
      .add_square("f", "g", "g", "f")
      .build();
}

KGraph o22() { return omega(2, Degree{1, 1}, "O22"); }

KGraph omega(std::size_t k, const Degree& m, const std::string& name) {
  std::string gname = name.empty() ? "Omega" + std::to_string(k) + "_" + m.to_string('_') : name;
  KGraph::Builder b(gname, k);
  auto vname = [](const Degree& p) { return p.to_string('_'); };
  auto ename = [&](std::size_t i, const Degree& p) { return "e" + std::to_string(i + 1) + "@" + vname(p); };
  auto pts = box(m);
  for (const Degree& p : pts) b.add_vertex(vname(p));
  for (const Degree& p : pts)
    for (std::size_t i = 0; i < k; ++i) {
      Degree q = p + Degree::unit(k, i);
      if (q.leq(m)) b.add_edge(ename(i, p), i + 1, vname(q), vname(p));
    }
  for (const Degree& p : pts)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        Degree pi = p + Degree::unit(k, i);
        Degree pj = p + Degree::unit(k, j);
        if (!(pi + Degree::unit(k, j)).leq(m)) continue;
        b.add_square(ename(i, p), ename(j, pi), ename(j, p), ename(i, pj));
      }
  return b.build();
}

std::vector<KGraph> all() { return {l1(), a2(), d2(), t2(), o22()}; }

KGraph by_name(const std::string& name) {
  for (auto& g : all())
    if (g.name() == name) return g;
  throw Error(ErrorKind::UnknownIdentifier, "fixture " + name);
}

KGraph product(const KGraph& e, const KGraph& f, const std::string& name) {
  KGraph::Builder b(name, 2);
  auto vn = [&](VertexId u, VertexId x) { return e.vertex_name(u) + "_" + f.vertex_name(x); };
  auto e1 = [&](EdgeId a, VertexId x) { return e.edge(a).name + "_" + f.vertex_name(x); };
  auto e2 = [&](VertexId u, EdgeId c) { return e.vertex_name(u) + "_" + f.edge(c).name; };
  for (VertexId u : e.vertices())
    for (VertexId x : f.vertices()) b.add_vertex(vn(u, x));
  for (std::uint32_t a = 0; a < e.num_edges(); ++a)
    for (VertexId x : f.vertices()) {
      const Edge& ed = e.edge(EdgeId{a});
      b.add_edge(e1(EdgeId{a}, x), 1, vn(ed.source, x), vn(ed.range, x));
    }
  for (VertexId u : e.vertices())
    for (std::uint32_t c = 0; c < f.num_edges(); ++c) {
      const Edge& ed = f.edge(EdgeId{c});
      b.add_edge(e2(u, EdgeId{c}), 2, vn(u, ed.source), vn(u, ed.range));
    }
  for (std::uint32_t a = 0; a < e.num_edges(); ++a)
    for (std::uint32_t c = 0; c < f.num_edges(); ++c) {
      const Edge& ea = e.edge(EdgeId{a});
      const Edge& fc = f.edge(EdgeId{c});
      b.add_square(e1(EdgeId{a}, fc.range), e2(ea.source, EdgeId{c}), e2(ea.range, EdgeId{c}),
                   e1(EdgeId{a}, fc.source));
    }
  return b.build();
}

KGraph disjoint_union(const KGraph& a, const KGraph& b, const std::string& name) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::GraphMismatch, "disjoint union of different ranks");
  KGraph::Builder out(name, a.rank());
  auto add = [&](const KGraph& g, const std::string& pre) {
    for (VertexId v : g.vertices()) out.add_vertex(pre + g.vertex_name(v));
    for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(EdgeId{i});
      out.add_edge(pre + e.name, e.color + 1, pre + g.vertex_name(e.source), pre + g.vertex_name(e.range));
    }
    for (const Square& s : g.squares())
      out.add_square(pre + g.edge(s.a).name, pre + g.edge(s.b).name, pre + g.edge(s.c).name,
                     pre + g.edge(s.d).name);
  };
  add(a, "a");
  add(b, "b");
  return out.build();
}

KGraph random_one_graph(std::mt19937_64& rng, std::size_t max_vertices, const std::string& name) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(0, 2 * n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  KGraph::Builder b(name, 1);
  for (std::size_t i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  std::size_t m = ne(rng);
  for (std::size_t j = 0; j < m; ++j)
    b.add_edge("e" + std::to_string(j), 1, "v" + std::to_string(pick(rng)), "v" + std::to_string(pick(rng)));
  return b.build();
}

namespace {

KGraph single_vertex(std::mt19937_64& rng, const std::string& name) {
  std::uniform_int_distribution<std::size_t> cnt(0, 2);
  std::size_t m = cnt(rng), n = cnt(rng);
  KGraph::Builder b(name, 2);
  b.add_vertex("x");
  for (std::size_t i = 0; i < m; ++i) b.add_edge("f" + std::to_string(i), 1, "x", "x");
  for (std::size_t j = 0; j < n; ++j) b.add_edge("g" + std::to_string(j), 2, "x", "x");
  // Left words f_i g_j are matched to right words g_j' f_i' by a random permutation.
  std::vector<std::size_t> perm(m * n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t t = perm[i * n + j];
      std::size_t jj = t / m, ii = t % m;
      b.add_square("f" + std::to_string(i), "g" + std::to_string(j), "g" + std::to_string(jj),
                   "f" + std::to_string(ii));
    }
  return b.build();
}

KGraph one_colour(const KGraph& e, std::size_t colour, const std::string& name) {
  KGraph::Builder b(name, 2);
  for (VertexId v : e.vertices()) b.add_vertex(e.vertex_name(v));
  for (std::uint32_t i = 0; i < e.num_edges(); ++i) {
    const Edge& ed = e.edge(EdgeId{i});
    b.add_edge(ed.name, colour, e.vertex_name(ed.source), e.vertex_name(ed.range));
  }
  return b.build();
}

}  // namespace

KGraph random_two_graph(std::mt19937_64& rng, std::size_t max_vertices, const std::string& name) {
  std::uniform_int_distribution<int> family(0, 3);
  switch (family(rng)) {
    case 0: {
      std::size_t left_max = std::max<std::size_t>(1, std::min<std::size_t>(3, max_vertices));
      KGraph e = random_one_graph(rng, left_max, "E");
      std::size_t right_max = std::max<std::size_t>(1, max_vertices / e.num_vertices());
      KGraph f = random_one_graph(rng, std::min<std::size_t>(right_max, 3), "F");
      return product(e, f, name);
    }
    case 1:
      return single_vertex(rng, name);
    case 2: {
      std::uniform_int_distribution<std::size_t> col(1, 2);
      return one_colour(random_one_graph(rng, max_vertices, "E"), col(rng), name);
    }
    default: {
      if (max_vertices < 2) return single_vertex(rng, name);
      KGraph a = random_two_graph(rng, max_vertices / 2, "A");
      KGraph b = random_two_graph(rng, max_vertices - a.num_vertices(), "B");
      return disjoint_union(a, b, name);
    }
  }
}

}  // namespace kpalg::fixtures
