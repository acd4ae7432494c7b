#include "kpalg/boundary.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace kpalg {

namespace {

// Number of cycle repetitions needed so that alpha.mu^J covers degree q.
long reps_needed(const UPBoundaryPath& x, const Degree& q) {
  const Degree& a = x.prefix().degree();
  const Degree& d = x.cycle().degree();
  long j = 0;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (d[i] == 0 || q[i] <= a[i]) continue;
    j = std::max(j, (q[i] - a[i] + d[i] - 1) / d[i]);
  }
  return j;
}

Path materialize(const KGraph& g, const UPBoundaryPath& x, long reps) {
  Path p = x.prefix();
  for (long r = 0; r < reps; ++r) p = g.compose(p, x.cycle());
  return p;
}

Degree ones(const KGraph& g) { return Degree::constant(g.rank(), 1); }

}  // namespace

UPBoundaryPath::UPBoundaryPath(Path prefix, Path cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.range() != cycle_.source() || cycle_.range() != prefix_.source())
    throw Error(ErrorKind::MalformedCycle, "cycle must be based at the source of the prefix");
}

UPBoundaryPath UPBoundaryPath::finite(const KGraph& g, const Path& prefix) {
  return UPBoundaryPath(prefix, g.vertex_path(prefix.source()));
}

Degree UPBoundaryPath::degree() const {
  Degree d = prefix_.degree();
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (cycle_.degree()[i] > 0) d[i] = Degree::kInfinity;
  return d;
}

Path segment(const KGraph& g, const UPBoundaryPath& x, const Degree& p, const Degree& q) {
  if (!p.is_finite() || !q.is_finite() || !p.leq(q) || !q.leq(x.degree()) || !p.is_nonnegative())
    throw Error(ErrorKind::DegreeOutOfRange, "segment bounds " + p.to_string() + " / " + q.to_string());
  Path whole = materialize(g, x, reps_needed(x, q));
  return g.segment(whole, p, q);
}

VertexId vertex_at(const KGraph& g, const UPBoundaryPath& x, const Degree& p) {
  return segment(g, x, p, p).range();
}

UPBoundaryPath shift(const KGraph& g, const UPBoundaryPath& x, const Degree& n) {
  if (!n.is_finite() || !n.is_nonnegative() || !n.leq(x.degree()))
    throw Error(ErrorKind::ShiftExceedsDegree, "shift " + n.to_string() + " exceeds " + x.degree().to_string());
  Degree t = join(n, x.prefix().degree());
  const Degree& period = x.cycle().degree();
  Path head = segment(g, x, n, t);
  Path loop = segment(g, x, t, t + period);
  return UPBoundaryPath(std::move(head), std::move(loop));
}

UPBoundaryPath extend(const KGraph& g, const Path& lambda, const UPBoundaryPath& x) {
  return UPBoundaryPath(g.compose(lambda, x.prefix()), x.cycle());
}

bool is_boundary_path(const KGraph& g, const UPBoundaryPath& x) {
  // Every shift of x is represented by one of finitely many normal forms; the
  // condition at the lattice point n is a condition on sigma^n(x) at 0.
  std::set<UPBoundaryPath> seen;
  std::deque<UPBoundaryPath> queue{x};
  seen.insert(x);
  while (!queue.empty()) {
    UPBoundaryPath y = queue.front();
    queue.pop_front();
    Degree d = y.degree();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (d[i] == 0) {
        if (g.emits(y.range(), i)) return false;
        continue;
      }
      UPBoundaryPath z = shift(g, y, Degree::unit(g.rank(), i));
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return true;
}

bool same_path(const KGraph& g, const UPBoundaryPath& x, const UPBoundaryPath& y) {
  if (x.degree() != y.degree() || x.range() != y.range()) return false;
  std::set<std::pair<UPBoundaryPath, UPBoundaryPath>> seen;
  std::deque<std::pair<UPBoundaryPath, UPBoundaryPath>> queue{{x, y}};
  seen.insert({x, y});
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (a.range() != b.range()) return false;
    Degree d = a.degree();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (d[i] == 0) continue;
      Degree e = Degree::unit(g.rank(), i);
      if (segment(g, a, Degree(g.rank()), e) != segment(g, b, Degree(g.rank()), e)) return false;
      std::pair<UPBoundaryPath, UPBoundaryPath> next{shift(g, a, e), shift(g, b, e)};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return true;
}

UPBoundaryPath greedy_boundary_path(const KGraph& g, VertexId v) {
  std::vector<VertexId> visited{v};
  std::vector<Path> steps;
  VertexId w = v;
  for (;;) {
    Path step = g.paths_leq(w, ones(g)).front();
    if (step.is_vertex()) return UPBoundaryPath::finite(g, steps.empty() ? g.vertex_path(v) : [&] {
      Path p = steps.front();
      for (std::size_t i = 1; i < steps.size(); ++i) p = g.compose(p, steps[i]);
      return p;
    }());
    steps.push_back(step);
    w = step.source();
    auto it = std::find(visited.begin(), visited.end(), w);
    if (it != visited.end()) {
      std::size_t start = static_cast<std::size_t>(it - visited.begin());
      Path prefix = g.vertex_path(v);
      for (std::size_t i = 0; i < start; ++i) prefix = g.compose(prefix, steps[i]);
      Path loop = g.vertex_path(w);
      for (std::size_t i = start; i < steps.size(); ++i) loop = g.compose(loop, steps[i]);
      return UPBoundaryPath(prefix, loop);
    }
    visited.push_back(w);
  }
}

std::vector<UPBoundaryPath> boundary_paths_from(const KGraph& g, VertexId v, long budget) {
  constexpr std::size_t kMaxResults = 64;
  constexpr std::size_t kMaxNodes = 4000;
  std::vector<UPBoundaryPath> out;
  auto add = [&](const UPBoundaryPath& x) {
    if (out.size() >= kMaxResults || !is_boundary_path(g, x)) return;
    for (const auto& y : out)
      if (same_path(g, x, y)) return;
    out.push_back(x);
  };
  add(greedy_boundary_path(g, v));

  // Walks of Lambda^{<=1} steps closing up at a repeated vertex.
  std::size_t nodes = 0;
  const Degree unit = ones(g);
  std::vector<Path> steps;
  std::vector<VertexId> visited{v};
  std::function<void()> walk = [&] {
    if (++nodes > kMaxNodes || out.size() >= kMaxResults) return;
    VertexId w = visited.back();
    for (const Path& step : g.paths_leq(w, unit)) {
      if (step.is_vertex()) {
        Path p = g.vertex_path(v);
        for (const auto& s : steps) p = g.compose(p, s);
        add(UPBoundaryPath::finite(g, p));
        continue;
      }
      auto it = std::find(visited.begin(), visited.end(), step.source());
      steps.push_back(step);
      if (it != visited.end()) {
        std::size_t start = static_cast<std::size_t>(it - visited.begin());
        Path prefix = g.vertex_path(v);
        for (std::size_t i = 0; i < start; ++i) prefix = g.compose(prefix, steps[i]);
        Path loop = g.vertex_path(step.source());
        for (std::size_t i = start; i < steps.size(); ++i) loop = g.compose(loop, steps[i]);
        add(UPBoundaryPath(prefix, loop));
      } else if (static_cast<long>(steps.size()) < budget) {
        visited.push_back(step.source());
        walk();
        visited.pop_back();
      }
      steps.pop_back();
    }
  };
  walk();

  // Small prefixes followed by small cycles.
  long small = std::min<long>(budget, 2);
  Degree box_bound = Degree::constant(g.rank(), small);
  nodes = 0;
  for (const Path& alpha : g.paths_within(v, box_bound)) {
    for (const Path& mu : g.paths_within(alpha.source(), box_bound)) {
      if (++nodes > kMaxNodes || out.size() >= kMaxResults) return out;
      if (mu.source() != mu.range()) continue;
      add(UPBoundaryPath(alpha, mu));
    }
  }
  return out;
}

std::vector<UPBoundaryPath> sample_boundary_paths(const KGraph& g, std::mt19937_64& rng, std::size_t count,
                                                  long depth) {
  std::vector<UPBoundaryPath> pool;
  for (VertexId u : g.vertices())
    for (auto& x : boundary_paths_from(g, u, 2)) pool.push_back(std::move(x));
  std::map<VertexId, std::vector<Path>> by_source;
  for (VertexId u : g.vertices())
    for (Path& p : g.paths_within(u, Degree::constant(g.rank(), depth))) by_source[p.source()].push_back(p);

  std::vector<UPBoundaryPath> out;
  if (pool.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const UPBoundaryPath& y = pool[pick(rng)];
    const auto& ext = by_source[y.range()];
    std::uniform_int_distribution<std::size_t> pick_ext(0, ext.size() - 1);
    out.push_back(extend(g, ext[pick_ext(rng)], y));
  }
  return out;
}

bool distinguishes(const KGraph& g, const UPBoundaryPath& x, const Degree& m, const Degree& n) {
  Degree d = x.degree();
  Degree a = meet(m, d);
  Degree b = meet(n, d);
  if (m - a != n - b) return true;
  return !same_path(g, shift(g, x, a), shift(g, x, b));
}

namespace {

enum class PairOutcome { Equal, Differ, Limit };

// Decides whether beta z = gamma z for every boundary path z from the common
// source. On Differ, `trace` is a word from that source along which the
// difference shows.
PairOutcome compare_tails(const KGraph& g, const Path& beta, const Path& gamma, std::size_t limit,
                          std::vector<EdgeId>& trace) {
  using State = std::pair<Path, Path>;
  auto normalize = [&](const Path& b, const Path& c) -> std::optional<State> {
    Degree common = meet(b.degree(), c.degree());
    auto [bh, bt] = g.factorize(b, common);
    auto [ch, ct] = g.factorize(c, common);
    if (bh != ch) return std::nullopt;
    return State{bt, ct};
  };
  struct Node {
    State state;
    std::size_t parent;
    EdgeId via;
  };
  auto unwind = [&](const std::vector<Node>& nodes, std::size_t idx) {
    std::vector<EdgeId> word;
    while (idx != 0) {
      word.push_back(nodes[idx].via);
      idx = nodes[idx].parent;
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  trace.clear();
  auto start = normalize(beta, gamma);
  if (!start) return PairOutcome::Differ;
  std::vector<Node> nodes{{*start, 0, EdgeId{0}}};
  std::set<State> seen{*start};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes.size() > limit) return PairOutcome::Limit;
    State st = nodes[head].state;
    VertexId w = st.first.source();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (!g.emits(w, i)) {
        if (st.first.degree()[i] != st.second.degree()[i]) {
          trace = unwind(nodes, head);
          return PairOutcome::Differ;
        }
        continue;
      }
      for (EdgeId e : g.edges_at(w, i)) {
        Path xi = g.edge_path(e);
        auto next = normalize(g.compose(st.first, xi), g.compose(st.second, xi));
        if (!next) {
          trace = unwind(nodes, head);
          trace.push_back(e);
          return PairOutcome::Differ;
        }
        if (seen.insert(*next).second) nodes.push_back({*next, head, e});
      }
    }
  }
  return PairOutcome::Equal;
}

}  // namespace

std::optional<bool> is_period(const KGraph& g, VertexId v, const Degree& m, const Degree& n,
                              UPBoundaryPath* counterexample, std::size_t state_limit) {
  Degree top = join(m, n);
  std::optional<bool> result = true;
  g.visit_paths_leq(v, top, [&](const Path& lambda) {
    Degree a = meet(m, lambda.degree());
    Degree b = meet(n, lambda.degree());
    if (m - a != n - b) {
      if (counterexample) *counterexample = extend(g, lambda, greedy_boundary_path(g, lambda.source()));
      result = false;
      return false;
    }
    Path beta = g.segment(lambda, a, lambda.degree());
    Path gamma = g.segment(lambda, b, lambda.degree());
    std::vector<EdgeId> trace;
    switch (compare_tails(g, beta, gamma, state_limit, trace)) {
      case PairOutcome::Equal:
        return true;
      case PairOutcome::Limit:
        result = std::nullopt;
        return false;
      case PairOutcome::Differ: {
        if (counterexample) {
          Path xi = g.path_from_word(trace, lambda.source());
          *counterexample = extend(g, g.compose(lambda, xi), greedy_boundary_path(g, xi.source()));
        }
        result = false;
        return false;
      }
    }
    return true;
  });
  return result;
}

long default_aperiodicity_bound(const KGraph& g) { return std::max<long>(4, static_cast<long>(g.num_vertices())); }

AperiodicityResult is_aperiodic(const KGraph& g, long bound, const std::vector<VertexId>* vertices,
                                std::size_t state_limit) {
  if (!g.is_locally_convex()) throw Error(ErrorKind::NotLocallyConvex, g.name() + " is not locally convex");
  AperiodicityResult res;
  res.bound = bound;
  std::vector<VertexId> vs = vertices ? *vertices : g.vertices();

  std::vector<Degree> degs = box(Degree::constant(g.rank(), bound));
  std::vector<std::pair<Degree, Degree>> pairs;
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (std::size_t j = i + 1; j < degs.size(); ++j) pairs.push_back({degs[i], degs[j]});
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
    long tp = p.first.total() + p.second.total();
    long tq = q.first.total() + q.second.total();
    if (tp != tq) return tp < tq;
    if (p.first != q.first) return p.first < q.first;
    return p.second > q.second;
  });

  bool unknown = false;
  for (VertexId v : vs) {
    for (const auto& [m, n] : pairs) {
      ++res.triples_checked;
      UPBoundaryPath ce(g.vertex_path(v), g.vertex_path(v));
      auto r = is_period(g, v, m, n, &ce, state_limit);
      if (!r) {
        unknown = true;
        continue;
      }
      if (*r) {
        res.verdict = AperiodicityVerdict::Periodic;
        res.witness = PeriodicityWitness{v, m, n};
        res.certificate.clear();
        return res;
      }
      if (!is_boundary_path(g, ce) || !distinguishes(g, ce, m, n))
        throw std::logic_error("internal: unverified distinguishing path");
      res.certificate.push_back({v, m, n, ce});
    }
  }
  res.verdict = unknown ? AperiodicityVerdict::Unknown : AperiodicityVerdict::Aperiodic;
  return res;
}

std::optional<UPBoundaryPath> rep_apply(const KGraph& g, const Generator& gen, const UPBoundaryPath& x) {
  if (!g.has_no_sources()) throw Error(ErrorKind::SourcefulGraph, g.name() + " has sources");
  switch (gen.kind) {
    case Generator::Kind::Vertex:
      if (x.range() != gen.path.range()) return std::nullopt;
      return x;
    case Generator::Kind::Path:
      if (x.range() != gen.path.source()) return std::nullopt;
      return extend(g, gen.path, x);
    case Generator::Kind::Ghost: {
      const Degree& d = gen.path.degree();
      if (!d.leq(x.degree())) return std::nullopt;
      if (segment(g, x, Degree(g.rank()), d) != gen.path) return std::nullopt;
      return shift(g, x, d);
    }
  }
  return std::nullopt;
}

}  // namespace kpalg
