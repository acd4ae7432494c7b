#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kpalg/classifier.hpp"
#include "kpalg/desourcify.hpp"
#include "kpalg/fixtures.hpp"
#include "kpalg/kp_algebra.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace kpalg;
namespace fx = kpalg::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

GraphPtr share(const KGraph& g) { return std::make_shared<const KGraph>(g); }

using Names = std::vector<std::vector<std::string>>;

Names named(const KGraph& g, const std::vector<VertexSet>& sets) {
  Names out;
  for (const auto& h : sets) out.push_back(names(g, h));
  return out;
}

void fixture_table(Outcome& o) {
  struct Row {
    KGraph g;
    std::string ring;
    bool prime;
    std::string primitive;
  };
  std::vector<Row> rows{{fx::l1(), "q", true, "false"},  {fx::a2(), "q", true, "true"},
                        {fx::t2(), "q", true, "false"},  {fx::d2(), "q", false, "false"},
                        {fx::l1(), "z", true, "false"},  {fx::l1(), "zmod:6", false, "false"}};
  for (const auto& r : rows) {
    auto rep = classify(r.g, Ring::parse(r.ring));
    o.require(rep.prime == r.prime && rep.primitive == r.primitive, r.g.name() + "/" + r.ring);
  }
  o.detail << rows.size() << " rows";
}

void primeness_cross_validation(Outcome& o) {
  std::mt19937_64 rng(3303);
  Ring q = Ring::rationals();
  std::size_t graphs = 0, nonprime = 0, prime = 0, pairs_total = 0;
  for (int i = 0; graphs < 24 && i < 400; ++i) {
    KGraph g = i % 2 ? fx::random_two_graph(rng, 5, "R" + std::to_string(i))
                     : fx::random_one_graph(rng, 6, "G" + std::to_string(i));
    if (!g.is_locally_convex() || g.num_vertices() > 6) continue;
    ++graphs;
    GraphPtr gp = share(g);
    auto rep = classify(g, q);
    if (!rep.prime) {
      ++nonprime;
      auto w = check_mt3(g);
      o.require(w.has_value(), g.name() + ": non-prime without MT3 witness");
      if (!w) continue;
      o.require(corner_is_zero(g, w->second, w->first), g.name() + ": corner nonzero");
      o.require(corner_vanishes_exhaustively(gp, q, w->second, w->first, 3), g.name() + ": exhaustive corner");
      continue;
    }
    ++prime;
    auto pool = testing::monomials_within(g, 1);
    long limit = static_cast<long>(g.num_vertices()) + 2;
    int pairs = 0;
    for (int t = 0; pairs < 50 && t < 2000; ++t) {
      KPElement a = KPElement::monomial(gp, q, pool[rng() % pool.size()]);
      KPElement b = KPElement::monomial(gp, q, pool[rng() % pool.size()]);
      if (is_zero(a).verdict != ZeroVerdict::Nonzero || is_zero(b).verdict != ZeroVerdict::Nonzero) continue;
      ++pairs;
      auto c = find_connecting_monomial(a, b);
      bool ok = c.has_value();
      if (ok) {
        const Monomial& m = c->terms().begin()->first;
        ok = m.alpha.degree().total() <= limit && m.beta.degree().total() <= limit &&
             is_zero(a * *c * b).verdict == ZeroVerdict::Nonzero;
      }
      o.require(ok, g.name() + ": no connecting monomial");
    }
    o.require(pairs == 50, g.name() + ": fewer than 50 nonzero pairs");
    pairs_total += pairs;
  }
  o.require(graphs >= 20, "fewer than 20 graphs");
  o.require(nonprime > 0 && prime > 0, "corpus lacks prime or non-prime graphs");
  o.detail << graphs << " graphs, " << nonprime << " non-prime, " << prime << " prime, " << pairs_total
           << " monomial pairs";
}

void extraction(Outcome& o) {
  std::mt19937_64 rng(3101);
  std::size_t total = 0;
  for (const KGraph& g : {fx::l1(), fx::t2()})
    for (const std::string spec : {"q", "z"}) {
      GraphPtr gp = share(g);
      Ring r = Ring::parse(spec);
      auto pool = testing::monomials_within(g, 2);
      int done = 0;
      for (int i = 0; done < 100 && i < 2000; ++i) {
        KPElement x = testing::random_homogeneous(gp, r, rng, pool, 4);
        if (is_zero(x).verdict != ZeroVerdict::Nonzero) continue;
        Extraction ex = extract_vertex_multiple(x);
        KPElement diff = ex.left * x * ex.right - KPElement::vertex(gp, r, ex.v).scaled(ex.r);
        o.require(sgn(ex.r) != 0 && is_zero(diff).verdict == ZeroVerdict::Zero, g.name() + ": certificate");
        ++done;
      }
      o.require(done == 100, g.name() + ": fewer than 100 nonzero elements");
      total += done;
    }
  o.detail << total << " elements over L1 and T2";
}

void kp_identities(Outcome& o) {
  std::mt19937_64 rng(3404);
  std::size_t paths = 0, checks = 0;
  for (const KGraph& g : {fx::l1(), fx::t2()}) {
    auto xs = sample_boundary_paths(g, rng, 60, 2);
    o.require(xs.size() >= 50, g.name() + ": fewer than 50 paths");
    for (const auto& x : xs) {
      auto t = testing::check_kp_relations(g, x);
      o.require(t.failed == 0, g.name() + ": relation fails");
      checks += t.checked;
    }
    paths += xs.size();
  }
  KGraph l1 = fx::l1();
  GraphPtr lp = share(l1);
  KPElement k = parse_expression(lp, Ring::rationals(), "s(e) - p(v)");
  o.require(is_zero(k).verdict == ZeroVerdict::Nonzero, "s_e - p_v is zero in the algebra");
  auto xs = sample_boundary_paths(l1, rng, 60, 3);
  for (const auto& x : xs) o.require(act(k, x).empty(), "s_e - p_v acts nontrivially");
  o.detail << paths << " paths, " << checks << " relation checks, kernel element on " << xs.size() << " paths";
}

void aperiodicity_oracle(Outcome& o) {
  std::vector<KGraph> gs{fx::l1(), fx::a2(), fx::d2(), fx::omega(1, Degree{2}), fx::omega(1, Degree{5})};
  gs.push_back(KGraph::Builder("B2", 1).add_vertex("v").add_edge("e", 1, "v", "v").add_edge("f", 1, "v", "v").build());
  std::mt19937_64 rng(3505);
  for (int i = 0; i < 200; ++i) gs.push_back(fx::random_one_graph(rng, 6, "G" + std::to_string(i)));
  std::size_t ap = 0, per = 0;
  for (const KGraph& g : gs) {
    auto res = is_aperiodic(g, static_cast<long>(g.num_vertices()) + 2);
    o.require(res.verdict != AperiodicityVerdict::Unknown, g.name() + ": Unknown");
    bool expected = testing::every_cycle_has_exit(g);
    o.require((res.verdict == AperiodicityVerdict::Aperiodic) == expected, g.name() + ": disagrees with oracle");
    (expected ? ap : per) += 1;
  }
  o.detail << gs.size() << " 1-graphs (" << ap << " aperiodic, " << per << " periodic)";
}

void desourcification(Outcome& o) {
  std::size_t morphisms = 0, pairs = 0;
  for (const KGraph& g : {fx::a2(), fx::d2(), fx::o22()}) {
    Truncation t = desourcify_truncated(g, 4);
    bool mt3 = !check_mt3(g).has_value();
    bool mt3_t = !check_mt3(t.graph, t.interior).has_value();
    o.require(mt3 == mt3_t, g.name() + ": MT3 transfer");
    std::vector<VertexId> interior(t.interior.begin(), t.interior.end());
    long b = default_aperiodicity_bound(g);
    o.require(is_aperiodic(g, b).verdict == is_aperiodic(t.graph, b, &interior).verdict,
              g.name() + ": aperiodicity transfer");
    for (VertexId v : t.interior)
      for (std::size_t i = 0; i < g.rank(); ++i) o.require(t.graph.emits(v, i), g.name() + ": interior source");
    std::vector<MorphismClass> ms;
    for (VertexId v : t.graph.vertices())
      for (const Path& p : t.graph.paths_within(v, Degree::constant(g.rank(), 4))) ms.push_back(t.class_of(g, p));
    for (const auto& f : ms) {
      o.require(pi(iota(f.path)) == iota(f.path) && pi(pi(f)) == pi(f), g.name() + ": pi/iota");
      for (const auto& h : ms) {
        if (source_class(f) != range_class(h)) continue;
        o.require(compose_classes(g, f, h) == compose_via_representatives(g, f, h), g.name() + ": composition");
        ++pairs;
      }
    }
    morphisms += ms.size();
  }
  o.detail << morphisms << " truncation morphisms, " << pairs << " composable pairs";
}

void ideal_lists(Outcome& o) {
  Ring q = Ring::rationals();
  struct Expected {
    KGraph g;
    Names sat_her, tails, prime, primitive;
  };
  std::vector<Expected> rows{
      {fx::l1(), {{}, {"v"}}, {{"v"}}, {{}}, {}},
      {fx::a2(), {{}, {"u", "v"}}, {{"u", "v"}}, {{}}, {{}}},
      {fx::d2(), {{}, {"u"}, {"w"}, {"u", "w"}}, {{"w"}, {"u"}}, {{"u"}, {"w"}}, {{"u"}, {"w"}}},
      {fx::t2(), {{}, {"v"}}, {{"v"}}, {{}}, {}},
      {fx::o22(), {{}, {"0_0", "0_1", "1_0", "1_1"}}, {{"0_0", "0_1", "1_0", "1_1"}}, {{}}, {{}}},
  };
  for (const auto& r : rows) {
    const KGraph& g = r.g;
    std::vector<VertexSet> tails;
    for (const auto& h : maximal_tail_complements(g)) tails.push_back(complement(g, h));
    o.require(named(g, enumerate_sat_her(g)) == r.sat_her, g.name() + ": saturated hereditary sets");
    o.require(named(g, tails) == r.tails, g.name() + ": maximal tails");
    o.require(named(g, prime_graded_ideals(g, q).sets()) == r.prime, g.name() + ": prime ideals");
    o.require(named(g, primitive_graded_ideals(g, q, 0).sets()) == r.primitive, g.name() + ": primitive ideals");
  }
  o.detail << rows.size() << " fixtures";
}

void corollary(Outcome& o) {
  for (const KGraph& g : {fx::a2(), fx::d2(), fx::o22()}) {
    o.require(is_strongly_aperiodic(g, default_aperiodicity_bound(g)).verdict == Tristate::True,
              g.name() + ": not strongly aperiodic");
    o.require(corollary_check(g, Ring::rationals(), 0).consistent, g.name() + ": lists differ");
  }
  o.detail << "A2, D2, O22 over Q";
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(KP_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

void determinism(Outcome& o) {
  std::size_t reports = 0;
  for (const KGraph& g : fx::all())
    for (const std::string ring : {"q", "z", "zmod:6", "flags:field"}) {
      std::string a = to_json(classify(g, Ring::parse(ring)));
      std::string b = to_json(classify(g, Ring::parse(ring)));
      o.require(a == b, g.name() + "/" + ring + ": in-process reports differ");
      o.require(report_from_json(a) == classify(g, Ring::parse(ring)), g.name() + ": JSON round-trip");
      ++reports;
    }
  for (const char* name : {"l1", "a2", "d2", "t2", "o22"}) {
    std::string args = std::string("classify ") + KP_DATA + "/" + name + ".kg --ring q --format json --seed 42";
    std::string a = run_cli(args);
    o.require(!a.empty() && a == run_cli(args), std::string(name) + ": CLI reports differ");
    ++reports;
  }
  std::string r1 = run_cli("fixtures random --seed 42 --rank 2 --vertices 4");
  o.require(!r1.empty() && r1 == run_cli("fixtures random --seed 42 --rank 2 --vertices 4"), "seeded fixture differs");
  o.detail << reports << " reports compared byte for byte";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "fixture classification table", fixture_table},
      {2, "primeness vs corners and connecting monomials", primeness_cross_validation},
      {3, "vertex-multiple extraction certificates", extraction},
      {4, "KP1-KP4 under the boundary path representation", kp_identities},
      {5, "aperiodicity vs cycle-exit oracle", aperiodicity_oracle},
      {6, "desourcification transfer", desourcification},
      {7, "ideal enumeration", ideal_lists},
      {8, "prime and primitive lists agree when strongly aperiodic", corollary},
      {9, "deterministic reports", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " -- " << o.detail.str() << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
