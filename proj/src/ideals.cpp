#include "kpalg/ideals.hpp"

#include <algorithm>
#include <deque>

namespace kpalg {

VertexSet reachable_from(const KGraph& g, VertexId v) {
  VertexSet seen{v};
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (EdgeId e : g.edges_at(w, i))
        if (seen.insert(g.edge(e).source).second) queue.push_back(g.edge(e).source);
  }
  return seen;
}

bool reaches(const KGraph& g, VertexId v, VertexId w) { return reachable_from(g, v).count(w) > 0; }

bool is_hereditary(const KGraph& g, const VertexSet& s) { return hereditary_closure(g, s) == s; }

bool is_saturated(const KGraph& g, const VertexSet& s) {
  for (VertexId v : g.vertices()) {
    if (s.count(v)) continue;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (!g.emits(v, i)) continue;
      bool all_in = true;
      for (EdgeId e : g.edges_at(v, i))
        if (!s.count(g.edge(e).source)) all_in = false;
      if (all_in) return false;
    }
  }
  return true;
}

VertexSet hereditary_closure(const KGraph& g, const VertexSet& s) {
  VertexSet out;
  for (VertexId v : s) {
    VertexSet r = reachable_from(g, v);
    out.insert(r.begin(), r.end());
  }
  return out;
}

VertexSet saturation(const KGraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw Error(ErrorKind::NotHereditary, "saturation needs a hereditary set");
  VertexSet out = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : g.vertices()) {
      if (out.count(v)) continue;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        if (!g.emits(v, i)) continue;
        bool all_in = std::all_of(g.edges_at(v, i).begin(), g.edges_at(v, i).end(),
                                  [&](EdgeId e) { return out.count(g.edge(e).source) > 0; });
        if (all_in) {
          out.insert(v);
          changed = true;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<VertexSet> enumerate_sat_her(const KGraph& g) {
  std::set<VertexSet> found{VertexSet{}};
  std::deque<VertexSet> queue{VertexSet{}};
  while (!queue.empty()) {
    VertexSet h = queue.front();
    queue.pop_front();
    for (VertexId v : g.vertices()) {
      if (h.count(v)) continue;
      VertexSet grown = h;
      grown.insert(v);
      VertexSet next = saturation(g, hereditary_closure(g, grown));
      if (found.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

TailCheck is_maximal_tail(const KGraph& g, const VertexSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptySet, "a maximal tail is nonempty");
  TailCheck res;
  for (VertexId v : g.vertices()) {
    if (m.count(v)) continue;
    VertexSet r = reachable_from(g, v);
    for (VertexId w : m)
      if (r.count(w)) {
        res.ok = false;
        res.failed = TailCondition::MT1;
        res.witness = {v, w};
        return res;
      }
  }
  for (VertexId v : m) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
      bool hit = false;
      for (const Path& lam : g.paths_leq(v, Degree::unit(g.rank(), i)))
        if (m.count(lam.source())) hit = true;
      if (!hit) {
        res.ok = false;
        res.failed = TailCondition::MT2;
        res.witness = {v};
        res.color = i;
        return res;
      }
    }
  }
  if (auto w = check_mt3(g, m, m)) {
    res.ok = false;
    res.failed = TailCondition::MT3;
    res.witness = {w->first, w->second};
  }
  return res;
}

std::optional<std::pair<VertexId, VertexId>> check_mt3(const KGraph& g, const VertexSet& among,
                                                       const VertexSet& targets) {
  std::vector<VertexSet> reach(g.num_vertices());
  for (VertexId v : among)
    for (VertexId z : reachable_from(g, v))
      if (targets.count(z)) reach[v.index].insert(z);
  for (auto a = among.begin(); a != among.end(); ++a)
    for (auto b = std::next(a); b != among.end(); ++b) {
      const VertexSet& ra = reach[a->index];
      const VertexSet& rb = reach[b->index];
      bool common = std::any_of(ra.begin(), ra.end(), [&](VertexId z) { return rb.count(z) > 0; });
      if (!common) return std::make_pair(*a, *b);
    }
  return std::nullopt;
}

std::optional<std::pair<VertexId, VertexId>> check_mt3(const KGraph& g, const VertexSet& among) {
  return check_mt3(g, among, full_set(g));
}

std::optional<std::pair<VertexId, VertexId>> check_mt3(const KGraph& g) { return check_mt3(g, full_set(g)); }

KGraph quotient(const KGraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h) || !is_saturated(g, h))
    throw Error(ErrorKind::NotSaturatedHereditary, "quotient needs a saturated hereditary set");
  KGraph::Builder b(g.name() + "_quot", g.rank());
  for (VertexId v : g.vertices())
    if (!h.count(v)) b.add_vertex(g.vertex_name(v));
  auto keep = [&](EdgeId e) { return !h.count(g.edge(e).source); };
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(EdgeId{i});
    if (keep(EdgeId{i})) b.add_edge(e.name, e.color + 1, g.vertex_name(e.source), g.vertex_name(e.range));
  }
  for (const Square& s : g.squares())
    if (keep(s.a) && keep(s.b) && keep(s.c) && keep(s.d))
      b.add_square(g.edge(s.a).name, g.edge(s.b).name, g.edge(s.c).name, g.edge(s.d).name);
  return b.build();
}

std::vector<VertexSet> maximal_tail_complements(const KGraph& g) {
  std::vector<VertexSet> out;
  VertexSet all = full_set(g);
  for (const VertexSet& h : enumerate_sat_her(g)) {
    if (h == all) continue;
    if (is_maximal_tail(g, complement(g, h)).ok) out.push_back(h);
  }
  return out;
}

StrongAperiodicity is_strongly_aperiodic(const KGraph& g, long bound) {
  StrongAperiodicity res;
  res.verdict = Tristate::True;
  VertexSet all = full_set(g);
  for (const VertexSet& h : enumerate_sat_her(g)) {
    if (h == all) continue;
    auto ap = is_aperiodic(quotient(g, h), bound);
    if (ap.verdict == AperiodicityVerdict::Periodic) {
      res.verdict = Tristate::False;
      res.witness = h;
      return res;
    }
    if (ap.verdict == AperiodicityVerdict::Unknown) res.verdict = Tristate::Unknown;
  }
  return res;
}

VertexSet full_set(const KGraph& g) {
  auto vs = g.vertices();
  return VertexSet(vs.begin(), vs.end());
}

VertexSet complement(const KGraph& g, const VertexSet& s) {
  VertexSet out;
  for (VertexId v : g.vertices())
    if (!s.count(v)) out.insert(v);
  return out;
}

std::vector<std::string> names(const KGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v : s) out.push_back(g.vertex_name(v));
  return out;
}

VertexSet parse_vertex_set(const KGraph& g, const std::vector<std::string>& ids) {
  VertexSet out;
  for (const auto& id : ids) out.insert(g.vertex(id));
  return out;
}

}  // namespace kpalg
