#pragma once

#include <optional>
#include <random>
#include <vector>

#include "kpalg/kgraph.hpp"

namespace kpalg {

/// An ultimately periodic boundary path x = prefix . cycle . cycle . ...
///
/// The cycle is a path with range = source = s(prefix); a degree-zero cycle
/// means the path is finite. Coordinate i of d(x) is infinite exactly when
/// the cycle has a colour-i edge, and equals d(prefix)_i otherwise.
class UPBoundaryPath {
 public:
  /// Throws MalformedCycle unless r(cycle) = s(cycle) = s(prefix).
  UPBoundaryPath(Path prefix, Path cycle);
  /// The finite path `prefix` with no cycle.
  static UPBoundaryPath finite(const KGraph& g, const Path& prefix);

  const Path& prefix() const { return prefix_; }
  const Path& cycle() const { return cycle_; }
  VertexId range() const { return prefix_.range(); }
  Degree degree() const;

  /// Same representation (not the same path; see `same_path`).
  friend bool operator==(const UPBoundaryPath&, const UPBoundaryPath&) = default;
  friend auto operator<=>(const UPBoundaryPath& a, const UPBoundaryPath& b) {
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    return a.cycle_ <=> b.cycle_;
  }

 private:
  Path prefix_;
  Path cycle_;
};

/// x(p) for finite p <= d(x).
VertexId vertex_at(const KGraph& g, const UPBoundaryPath& x, const Degree& p);
/// x(p, q) for finite p <= q <= d(x).
Path segment(const KGraph& g, const UPBoundaryPath& x, const Degree& p, const Degree& q);

/// Checks the boundary condition at every lattice point of x.
bool is_boundary_path(const KGraph& g, const UPBoundaryPath& x);

/// sigma^n(x); throws ShiftExceedsDegree unless n <= d(x).
UPBoundaryPath shift(const KGraph& g, const UPBoundaryPath& x, const Degree& n);
/// lambda x; throws NotComposable unless s(lambda) = r(x).
UPBoundaryPath extend(const KGraph& g, const Path& lambda, const UPBoundaryPath& x);

/// Equality of the underlying boundary paths, decided exactly by walking the
/// finite space of joint shifts.
bool same_path(const KGraph& g, const UPBoundaryPath& x, const UPBoundaryPath& y);

/// Follows first choices in s(.)Lambda^{<=(1,...,1)} until a vertex repeats.
UPBoundaryPath greedy_boundary_path(const KGraph& g, VertexId v);

/// A deduplicated, nonempty set of ultimately periodic boundary paths from v
/// found with search depth `budget`.
std::vector<UPBoundaryPath> boundary_paths_from(const KGraph& g, VertexId v, long budget);

/// `count` random boundary paths (with repetition), each a random extension
/// lambda y of a base path y; extension degrees stay <= depth in every colour.
std::vector<UPBoundaryPath> sample_boundary_paths(const KGraph& g, std::mt19937_64& rng, std::size_t count,
                                                  long depth = 2);

/// True iff x witnesses that (v, m, n) is not a period: either
/// m - m^d(x) != n - n^d(x) or sigma^{m^d(x)}(x) != sigma^{n^d(x)}(x).
bool distinguishes(const KGraph& g, const UPBoundaryPath& x, const Degree& m, const Degree& n);

struct PeriodicityWitness {
  VertexId vertex;
  Degree m, n;
};

struct DistinguishingWitness {
  VertexId vertex;
  Degree m, n;
  UPBoundaryPath path;
};

enum class AperiodicityVerdict { Aperiodic, Periodic, Unknown };

struct AperiodicityResult {
  AperiodicityVerdict verdict = AperiodicityVerdict::Unknown;
  long bound = 0;
  std::optional<PeriodicityWitness> witness;
  /// For Aperiodic: one verified distinguishing path per (v, m, n) checked.
  std::vector<DistinguishingWitness> certificate;
  std::size_t triples_checked = 0;
};

/// Searches all v (or the given subset) and all m != n <= bound*(1,...,1).
///
/// Periodic means one triple was verified periodic for every boundary path
/// from v. Aperiodic means every triple in the box has a distinguishing path.
/// Unknown is returned when some triple exhausts `state_limit` without a
/// decision and no periodic triple was found. Requires a locally convex graph.
AperiodicityResult is_aperiodic(const KGraph& g, long bound, const std::vector<VertexId>* vertices = nullptr,
                                std::size_t state_limit = 200000);

/// Whether sigma^m(x) = sigma^n(x) and m - m^d(x) = n - n^d(x) hold for every
/// boundary path x from v. Returns nullopt if the state limit is hit; when
/// false, `counterexample` receives a distinguishing path.
std::optional<bool> is_period(const KGraph& g, VertexId v, const Degree& m, const Degree& n,
                              UPBoundaryPath* counterexample = nullptr, std::size_t state_limit = 200000);

long default_aperiodicity_bound(const KGraph& g);

/// Generators of the infinite-path representation.
struct Generator {
  enum class Kind { Vertex, Path, Ghost };
  Kind kind;
  Path path;  // for Vertex, the degree-zero path at the vertex

  static Generator vertex(const KGraph& g, VertexId v) { return {Kind::Vertex, g.vertex_path(v)}; }
  static Generator of(const Path& p) { return {Kind::Path, p}; }
  static Generator ghost(const Path& p) { return {Kind::Ghost, p}; }
};

/// f_v, f_lambda, f_{mu*} applied to x; nullopt is the zero vector. Throws
/// SourcefulGraph when the graph has sources.
std::optional<UPBoundaryPath> rep_apply(const KGraph& g, const Generator& gen, const UPBoundaryPath& x);

}  // namespace kpalg
