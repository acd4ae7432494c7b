#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpalg/boundary.hpp"
#include "kpalg/kgraph.hpp"

namespace kpalg {

using VertexSet = std::set<VertexId>;

/// v <= w: some path has range v and source w. Reflexive.
bool reaches(const KGraph& g, VertexId v, VertexId w);
/// {w : v <= w}.
VertexSet reachable_from(const KGraph& g, VertexId v);

bool is_hereditary(const KGraph& g, const VertexSet& s);
bool is_saturated(const KGraph& g, const VertexSet& s);

VertexSet hereditary_closure(const KGraph& g, const VertexSet& s);
/// The smallest saturated superset; throws NotHereditary.
VertexSet saturation(const KGraph& g, const VertexSet& h);

/// Every saturated hereditary subset, ordered by size and then by the sorted
/// vertex indices. Always contains the empty set and the full vertex set.
std::vector<VertexSet> enumerate_sat_her(const KGraph& g);

enum class TailCondition { MT1, MT2, MT3 };

struct TailCheck {
  bool ok = true;
  TailCondition failed = TailCondition::MT1;
  /// MT1: (v outside M, w in M with v <= w). MT2: (v). MT3: (v1, v2).
  std::vector<VertexId> witness;
  /// The colour for an MT2 failure.
  std::size_t color = 0;
};

/// Checks MT1, MT2 and MT3 in order; throws EmptySet.
TailCheck is_maximal_tail(const KGraph& g, const VertexSet& m);

/// The first pair (v1, v2) in declaration order with no common w, if any.
std::optional<std::pair<VertexId, VertexId>> check_mt3(const KGraph& g);
/// As above, restricted to pairs in `among`; common vertices range over all of g.
std::optional<std::pair<VertexId, VertexId>> check_mt3(const KGraph& g, const VertexSet& among);
/// Pairs from `among` with common vertices restricted to `targets`.
std::optional<std::pair<VertexId, VertexId>> check_mt3(const KGraph& g, const VertexSet& among,
                                                       const VertexSet& targets);

/// Lambda \ H; throws NotSaturatedHereditary.
KGraph quotient(const KGraph& g, const VertexSet& h);

/// Proper saturated hereditary sets whose complement is a maximal tail.
std::vector<VertexSet> maximal_tail_complements(const KGraph& g);

enum class Tristate { False, True, Unknown };

struct StrongAperiodicity {
  Tristate verdict = Tristate::Unknown;
  /// For False: the H with a periodic quotient.
  std::optional<VertexSet> witness;
};

StrongAperiodicity is_strongly_aperiodic(const KGraph& g, long bound);

VertexSet full_set(const KGraph& g);
VertexSet complement(const KGraph& g, const VertexSet& s);
std::vector<std::string> names(const KGraph& g, const VertexSet& s);
VertexSet parse_vertex_set(const KGraph& g, const std::vector<std::string>& ids);

}  // namespace kpalg
