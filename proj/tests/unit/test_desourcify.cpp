#include <random>

#include "doctest.h"
#include "kpalg/desourcify.hpp"
#include "kpalg/fixtures.hpp"

using namespace kpalg;
namespace fx = kpalg::fixtures;

namespace {

UPBoundaryPath up(const KGraph& g, const std::string& prefix) {
  Path a = g.parse_path(prefix);
  return UPBoundaryPath::finite(g, a);
}

MorphismClass cls(const KGraph& g, const std::string& path, Degree a, Degree c) {
  return {g.parse_path(path), std::move(a), std::move(c)};
}

std::vector<KGraph> sourceful() {
  std::vector<KGraph> out{fx::a2(), fx::d2(), fx::o22(), fx::omega(2, Degree{2, 1}), fx::omega(1, Degree{2})};
  std::mt19937_64 rng(31);
  for (int i = 0; out.size() < 14 && i < 200; ++i) {
    KGraph g = fx::random_two_graph(rng, 4, "R" + std::to_string(i));
    if (!g.has_no_sources()) out.push_back(g);
  }
  for (int i = 0; out.size() < 20 && i < 200; ++i) {
    KGraph g = fx::random_one_graph(rng, 4, "G" + std::to_string(i));
    if (!g.has_no_sources()) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("vertex classes") {
  KGraph a2 = fx::a2();
  CHECK(vertex_class(a2, up(a2, "e"), Degree{1}) == VertexClass{a2.vertex("v"), Degree{0}});
  CHECK(vertex_class(a2, up(a2, "v"), Degree{2}) == VertexClass{a2.vertex("v"), Degree{2}});
  CHECK(vertex_class(a2, up(a2, "e"), Degree{0}) == VertexClass{a2.vertex("u"), Degree{0}});
  CHECK(is_valid_class(a2, VertexClass{a2.vertex("v"), Degree{3}}));
  CHECK_FALSE(is_valid_class(a2, VertexClass{a2.vertex("u"), Degree{1}}));
}

TEST_CASE("morphism classes") {
  KGraph a2 = fx::a2();
  UPBoundaryPath xu = up(a2, "e");
  UPBoundaryPath xv = up(a2, "v");
  CHECK(morphism_class(a2, xu, Degree{0}, Degree{1}) == cls(a2, "e", Degree{0}, Degree{1}));
  CHECK(morphism_class(a2, xv, Degree{1}, Degree{2}) == cls(a2, "v", Degree{1}, Degree{1}));
  MorphismClass id = morphism_class(a2, xu, Degree{1}, Degree{1});
  CHECK(id == identity_class(a2, vertex_class(a2, xu, Degree{1})));
  CHECK_THROWS_AS(morphism_class(a2, xu, Degree{1}, Degree{0}), Error);
}

TEST_CASE("composition of classes") {
  KGraph a2 = fx::a2();
  MorphismClass e01 = cls(a2, "e", Degree{0}, Degree{1});
  MorphismClass v11 = cls(a2, "v", Degree{1}, Degree{1});
  MorphismClass v21 = cls(a2, "v", Degree{2}, Degree{1});
  CHECK(compose_classes(a2, e01, cls(a2, "v", Degree{0}, Degree{1})) == cls(a2, "e", Degree{0}, Degree{2}));
  CHECK(compose_classes(a2, v11, v21) == cls(a2, "v", Degree{1}, Degree{2}));
  CHECK(compose_classes(a2, e01, identity_class(a2, source_class(e01))) == e01);
  CHECK(compose_via_representatives(a2, v11, v21) == cls(a2, "v", Degree{1}, Degree{2}));
  CHECK_THROWS_AS(compose_classes(a2, e01, v11), Error);
}

TEST_CASE("iota and pi") {
  KGraph a2 = fx::a2();
  CHECK(iota(a2.vertex_path(a2.vertex("v"))) == cls(a2, "v", Degree{0}, Degree{0}));
  CHECK(iota(a2.parse_path("e")) == cls(a2, "e", Degree{0}, Degree{1}));
  CHECK(pi(iota(a2.parse_path("e"))) == iota(a2.parse_path("e")));
  CHECK(pi(cls(a2, "v", Degree{1}, Degree{1})) == iota(a2.vertex_path(a2.vertex("v"))));
  KGraph t2 = fx::t2();
  CHECK(iota(t2.parse_path("f.g")) == cls(t2, "f.g", Degree{0, 0}, Degree{1, 1}));
}

TEST_CASE("truncations of the named fixtures") {
  KGraph l1 = fx::l1();
  Truncation tl = desourcify_truncated(l1, 3);
  CHECK(tl.graph.num_vertices() == 1);
  CHECK(tl.graph.num_edges() == 1);
  CHECK(tl.interior.size() == 1);

  KGraph a2 = fx::a2();
  Truncation ta = desourcify_truncated(a2, 3);
  REQUIRE(ta.graph.num_vertices() == 5);
  CHECK(ta.graph.num_edges() == 4);
  std::vector<std::string> expected{"u@0", "v@0", "v@1", "v@2", "v@3"};
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(ta.graph.vertex_name(VertexId{i}) == expected[i]);
  // The chain u <- v@0 <- v@1 <- v@2 <- v@3 (edges point from source to range).
  CHECK(ta.graph.edge(*ta.graph.find_edge("e@0")).source == ta.graph.vertex("v@0"));
  CHECK(ta.graph.edge(*ta.graph.find_edge("v'1@2")).source == ta.graph.vertex("v@3"));
  CHECK(ta.interior.size() == 4);
  CHECK_FALSE(ta.interior.count(ta.graph.vertex("v@3")));

  KGraph d2 = fx::d2();
  Truncation td = desourcify_truncated(d2, 1);
  CHECK(td.graph.num_vertices() == 4);
  CHECK(td.graph.num_edges() == 2);
  CHECK(reaches(td.graph, td.graph.vertex("u@0"), td.graph.vertex("u@1")));
  CHECK(reaches(td.graph, td.graph.vertex("w@0"), td.graph.vertex("w@1")));
  CHECK_FALSE(reaches(td.graph, td.graph.vertex("u@0"), td.graph.vertex("w@1")));

  Truncation to = desourcify_truncated(fx::o22(), 2);
  CHECK(to.graph.is_locally_convex());
  CHECK_FALSE(sidecar_json(fx::o22(), to).empty());
}

TEST_CASE("no sources: truncation is the graph itself") {
  std::mt19937_64 rng(8);
  std::vector<KGraph> gs{fx::l1(), fx::t2()};
  for (int i = 0; gs.size() < 8 && i < 300; ++i) {
    KGraph g = fx::random_two_graph(rng, 4, "S");
    if (g.has_no_sources()) gs.push_back(g);
  }
  for (const KGraph& g : gs) {
    Truncation t = desourcify_truncated(g, 2);
    CHECK(t.graph.num_vertices() == g.num_vertices());
    CHECK(t.graph.num_edges() == g.num_edges());
    CHECK(t.graph.squares().size() == g.squares().size());
    CHECK(t.interior.size() == g.num_vertices());
    for (const auto& e : t.edge_classes) CHECK(e == iota(e.path));
  }
}

TEST_CASE("interior vertices are not sources") {
  for (const KGraph& g : sourceful()) {
    Truncation t = desourcify_truncated(g, 3);
    for (VertexId v : t.interior)
      for (std::size_t i = 0; i < g.rank(); ++i) CHECK(t.graph.emits(v, i));
    CHECK(t.graph.is_locally_convex());
  }
}

TEST_CASE("class composition agrees with representatives") {
  for (const KGraph& g : sourceful()) {
    Truncation t = desourcify_truncated(g, 2);
    std::vector<MorphismClass> morphisms;
    for (VertexId v : t.graph.vertices())
      for (const Path& p : t.graph.paths_within(v, Degree::constant(g.rank(), 1))) morphisms.push_back(t.class_of(g, p));
    for (const auto& f : morphisms) {
      CHECK(is_valid_class(g, f));
      CHECK(pi(pi(f)) == pi(f));
      CHECK(pi(iota(f.path)) == iota(f.path));
      for (const auto& h : morphisms) {
        if (source_class(f) != range_class(h)) continue;
        CHECK(compose_classes(g, f, h) == compose_via_representatives(g, f, h));
      }
    }
  }
}

TEST_CASE("class of a truncation path respects range, source and degree") {
  for (const KGraph& g : sourceful()) {
    Truncation t = desourcify_truncated(g, 2);
    for (VertexId v : t.graph.vertices())
      for (const Path& p : t.graph.paths_within(v, Degree::constant(g.rank(), 2))) {
        MorphismClass f = t.class_of(g, p);
        CHECK(range_class(f) == t.vertex_classes[p.range().index]);
        CHECK(source_class(f) == t.vertex_classes[p.source().index]);
        CHECK(f.degree == p.degree());
        for (const Degree& m : box(p.degree())) {
          auto [a, b] = factor_class(g, f, m);
          auto [pa, pb] = t.graph.factorize(p, m);
          CHECK(a == t.class_of(g, pa));
          CHECK(b == t.class_of(g, pb));
        }
      }
  }
}

TEST_CASE("Lemma: offsets avoiding d(x) give path-independent classes") {
  std::mt19937_64 rng(12);
  for (const KGraph& g : sourceful()) {
    for (VertexId v : g.vertices()) {
      auto xs = boundary_paths_from(g, v, 2);
      for (const auto& x : xs)
        for (const Degree& p : box(Degree::constant(g.rank(), 2))) {
          if (!meet(p, x.degree()).is_zero()) continue;
          for (const auto& z : xs) {
            CHECK(meet(p, z.degree()).is_zero());
            CHECK(morphism_class(g, x, Degree(g.rank()), p) == morphism_class(g, z, Degree(g.rank()), p));
          }
        }
    }
  }
}

TEST_CASE("class functions respect the V and P relations") {
  std::mt19937_64 rng(13);
  std::size_t related = 0, unrelated = 0;
  for (const KGraph& g : sourceful()) {
    auto xs = sample_boundary_paths(g, rng, 12, 1);
    auto degs = box(Degree::constant(g.rank(), 2));
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (std::size_t i = 0; i < degs.size(); i += 2)
          for (std::size_t j = 0; j < degs.size(); j += 2) {
            const Degree& m = degs[i];
            const Degree& n = degs[j];
            Degree mx = meet(m, x.degree()), ny = meet(n, y.degree());
            bool v_rel = vertex_at(g, x, mx) == vertex_at(g, y, ny) && m - mx == n - ny;
            CHECK(v_rel == (vertex_class(g, x, m) == vertex_class(g, y, n)));
            Degree m2 = m + Degree::unit(g.rank(), 0);
            Degree n2 = n + Degree::unit(g.rank(), 0);
            Degree mx2 = meet(m2, x.degree()), ny2 = meet(n2, y.degree());
            bool p_rel = segment(g, x, mx, mx2) == segment(g, y, ny, ny2) && m - mx == n - ny;
            CHECK(p_rel == (morphism_class(g, x, m, m2) == morphism_class(g, y, n, n2)));
            (p_rel ? related : unrelated) += 1;
          }
  }
  CHECK(related >= 100);
  CHECK(unrelated >= 100);
}

TEST_CASE("MT3 and aperiodicity transfer to the truncation interior") {
  for (const KGraph& g : sourceful()) {
    long bound = 4;
    Truncation t = desourcify_truncated(g, bound);
    bool mt3 = !check_mt3(g).has_value();
    bool mt3_tilde = !check_mt3(t.graph, t.interior).has_value();
    CHECK(mt3 == mt3_tilde);
    std::vector<VertexId> interior(t.interior.begin(), t.interior.end());
    auto ap = is_aperiodic(g, default_aperiodicity_bound(g));
    auto ap_tilde = is_aperiodic(t.graph, default_aperiodicity_bound(g), &interior);
    CHECK(ap.verdict == ap_tilde.verdict);
  }
}
