#include <random>

#include "doctest.h"
#include "kpalg/fixtures.hpp"
#include "kpalg/ideals.hpp"

using namespace kpalg;
namespace fx = kpalg::fixtures;

namespace {

VertexSet set_of(const KGraph& g, std::initializer_list<const char*> ids) {
  VertexSet s;
  for (const char* id : ids) s.insert(g.vertex(id));
  return s;
}

std::vector<KGraph> corpus() {
  std::vector<KGraph> out = fx::all();
  out.push_back(fx::omega(2, Degree{2, 1}));
  out.push_back(fx::product(fx::a2(), fx::l1(), "A2xL1"));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) out.push_back(fx::random_one_graph(rng, 5, "G" + std::to_string(i)));
  for (int i = 0; i < 10; ++i) out.push_back(fx::random_two_graph(rng, 5, "R" + std::to_string(i)));
  return out;
}

// All subsets, as an oracle for small graphs.
std::vector<VertexSet> all_subsets(const KGraph& g) {
  std::vector<VertexSet> out;
  std::size_t n = g.num_vertices();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    VertexSet s;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(VertexId{i});
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("reaches") {
  KGraph a2 = fx::a2();
  CHECK(reaches(a2, a2.vertex("u"), a2.vertex("v")));
  CHECK_FALSE(reaches(a2, a2.vertex("v"), a2.vertex("u")));
  KGraph d2 = fx::d2();
  CHECK_FALSE(reaches(d2, d2.vertex("u"), d2.vertex("w")));
  CHECK(reaches(d2, d2.vertex("u"), d2.vertex("u")));
}

TEST_CASE("closures") {
  KGraph a2 = fx::a2();
  CHECK(hereditary_closure(a2, set_of(a2, {"u"})) == set_of(a2, {"u", "v"}));
  CHECK(hereditary_closure(a2, {}).empty());
  KGraph d2 = fx::d2();
  CHECK(hereditary_closure(d2, set_of(d2, {"u"})) == set_of(d2, {"u"}));

  CHECK(saturation(a2, set_of(a2, {"v"})) == set_of(a2, {"u", "v"}));
  CHECK(saturation(a2, {}).empty());
  KGraph l1 = fx::l1();
  CHECK(saturation(l1, set_of(l1, {"v"})) == set_of(l1, {"v"}));
  CHECK_THROWS_AS(saturation(a2, set_of(a2, {"u"})), Error);
}

TEST_CASE("enumerate_sat_her") {
  KGraph a2 = fx::a2();
  CHECK(enumerate_sat_her(a2) == std::vector<VertexSet>{{}, set_of(a2, {"u", "v"})});
  KGraph d2 = fx::d2();
  CHECK(enumerate_sat_her(d2) ==
        std::vector<VertexSet>{{}, set_of(d2, {"u"}), set_of(d2, {"w"}), set_of(d2, {"u", "w"})});
  KGraph l1 = fx::l1();
  CHECK(enumerate_sat_her(l1) == std::vector<VertexSet>{{}, set_of(l1, {"v"})});
  KGraph t2 = fx::t2();
  CHECK(enumerate_sat_her(t2).size() == 2);
  // O22: hereditary sets are up-sets of the lattice; saturation adds any
  // vertex whose colour-i successor is in H.
  KGraph o22 = fx::o22();
  auto o = enumerate_sat_her(o22);
  CHECK(o == std::vector<VertexSet>{{}, full_set(o22)});
}

TEST_CASE("enumeration matches a subset scan") {
  for (const KGraph& g : corpus()) {
    std::vector<VertexSet> expected;
    for (const VertexSet& s : all_subsets(g))
      if (is_hereditary(g, s) && is_saturated(g, s)) expected.push_back(s);
    auto got = enumerate_sat_her(g);
    CHECK(std::set<VertexSet>(got.begin(), got.end()) == std::set<VertexSet>(expected.begin(), expected.end()));
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("maximal tails") {
  KGraph a2 = fx::a2();
  CHECK(is_maximal_tail(a2, set_of(a2, {"u", "v"})).ok);
  auto bad = is_maximal_tail(a2, set_of(a2, {"v"}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failed == TailCondition::MT1);
  CHECK(bad.witness.front() == a2.vertex("u"));

  KGraph d2 = fx::d2();
  auto both = is_maximal_tail(d2, set_of(d2, {"u", "w"}));
  CHECK_FALSE(both.ok);
  CHECK(both.failed == TailCondition::MT3);
  CHECK(both.witness == std::vector<VertexId>{d2.vertex("u"), d2.vertex("w")});
  CHECK(is_maximal_tail(d2, set_of(d2, {"u"})).ok);

  KGraph l1 = fx::l1();
  CHECK(is_maximal_tail(l1, set_of(l1, {"v"})).ok);
  CHECK_THROWS_AS(is_maximal_tail(l1, {}), Error);

  // MT2: in O22 the set {(0,0)} is closed under MT1 but (0,0) emits both
  // colours into vertices outside it.
  KGraph o22 = fx::o22();
  auto mt2 = is_maximal_tail(o22, set_of(o22, {"0_0"}));
  CHECK_FALSE(mt2.ok);
  CHECK(mt2.failed == TailCondition::MT2);
}

TEST_CASE("check_mt3") {
  CHECK_FALSE(check_mt3(fx::a2()).has_value());
  KGraph d2 = fx::d2();
  auto w = check_mt3(d2);
  REQUIRE(w);
  CHECK(w->first == d2.vertex("u"));
  CHECK(w->second == d2.vertex("w"));
  CHECK_FALSE(check_mt3(fx::o22()).has_value());
}

TEST_CASE("quotient") {
  KGraph l1 = fx::l1();
  CHECK(quotient(l1, {}) == l1);
  KGraph d2 = fx::d2();
  KGraph q = quotient(d2, set_of(d2, {"w"}));
  CHECK(q.num_vertices() == 1);
  CHECK(q.vertex_name(VertexId{0}) == "u");
  KGraph a2 = fx::a2();
  CHECK(quotient(a2, full_set(a2)).num_vertices() == 0);
  CHECK_THROWS_AS(quotient(a2, set_of(a2, {"v"})), Error);
}

TEST_CASE("strong aperiodicity") {
  CHECK(is_strongly_aperiodic(fx::a2(), 4).verdict == Tristate::True);
  auto l1 = is_strongly_aperiodic(fx::l1(), 4);
  CHECK(l1.verdict == Tristate::False);
  REQUIRE(l1.witness);
  CHECK(l1.witness->empty());
  CHECK(is_strongly_aperiodic(fx::d2(), 4).verdict == Tristate::True);
  CHECK(is_strongly_aperiodic(fx::o22(), 4).verdict == Tristate::True);
}

TEST_CASE("complement duality") {
  for (const KGraph& g : corpus()) {
    VertexSet all = full_set(g);
    auto sat_her = enumerate_sat_her(g);
    std::set<VertexSet> lattice(sat_her.begin(), sat_her.end());
    for (const VertexSet& h : all_subsets(g)) {
      if (h == all) continue;
      auto tail = is_maximal_tail(g, complement(g, h));
      bool mt12 = tail.ok || tail.failed == TailCondition::MT3;
      CHECK(mt12 == (lattice.count(h) > 0));
    }
  }
}

TEST_CASE("closure laws") {
  for (const KGraph& g : corpus()) {
    auto subsets = all_subsets(g);
    for (const VertexSet& s : subsets) {
      VertexSet h = hereditary_closure(g, s);
      CHECK(hereditary_closure(g, h) == h);
      CHECK(std::includes(h.begin(), h.end(), s.begin(), s.end()));
      VertexSet sat = saturation(g, h);
      CHECK(saturation(g, sat) == sat);
      CHECK(std::includes(sat.begin(), sat.end(), h.begin(), h.end()));
      CHECK(is_hereditary(g, sat));
    }
    // Monotonicity on nested pairs.
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = 0; j < subsets.size(); j += 3) {
        const VertexSet& a = subsets[i];
        const VertexSet& b = subsets[j];
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
        VertexSet ha = hereditary_closure(g, a), hb = hereditary_closure(g, b);
        CHECK(std::includes(hb.begin(), hb.end(), ha.begin(), ha.end()));
        VertexSet sa = saturation(g, ha), sb = saturation(g, hb);
        CHECK(std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
      }
  }
}

TEST_CASE("lattice is closed under intersection and quotients behave") {
  for (const KGraph& g : corpus()) {
    auto sat_her = enumerate_sat_her(g);
    std::set<VertexSet> lattice(sat_her.begin(), sat_her.end());
    CHECK(lattice.count({}) == 1);
    CHECK(lattice.count(full_set(g)) == 1);
    for (const VertexSet& a : sat_her)
      for (const VertexSet& b : sat_her) {
        VertexSet meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(meet, meet.begin()));
        CHECK(lattice.count(meet) == 1);
      }
    CHECK(quotient(g, {}) == g);
    CHECK(quotient(g, full_set(g)).num_vertices() == 0);
    for (const VertexSet& h : sat_her) CHECK(quotient(g, h).is_locally_convex());
  }
}
