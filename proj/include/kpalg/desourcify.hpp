#pragma once

#include <map>
#include <string>
#include <vector>

#include "kpalg/boundary.hpp"
#include "kpalg/ideals.hpp"

namespace kpalg {

/// [x; m] in canonical form (x(m ^ d(x)), m - m ^ d(x)).
struct VertexClass {
  VertexId base;
  Degree offset;
  friend auto operator<=>(const VertexClass&, const VertexClass&) = default;
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// [x; (m, n)] in canonical form (x(m ^ d(x), n ^ d(x)), m - m ^ d(x), n - m).
struct MorphismClass {
  Path path;
  Degree offset;
  Degree degree;
  friend auto operator<=>(const MorphismClass&, const MorphismClass&) = default;
  friend bool operator==(const MorphismClass&, const MorphismClass&) = default;
};

bool is_valid_class(const KGraph& g, const VertexClass& c);
bool is_valid_class(const KGraph& g, const MorphismClass& f);

VertexClass range_class(const MorphismClass& f);
VertexClass source_class(const MorphismClass& f);

VertexClass vertex_class(const KGraph& g, const UPBoundaryPath& x, const Degree& m);
/// Throws DegreeOrderViolation unless m <= n.
MorphismClass morphism_class(const KGraph& g, const UPBoundaryPath& x, const Degree& m, const Degree& n);

/// (x; m) with [x; m] = c.
std::pair<UPBoundaryPath, Degree> representative(const KGraph& g, const VertexClass& c);
/// (x; (m, n)) with [x; (m, n)] = f.
std::pair<UPBoundaryPath, std::pair<Degree, Degree>> representative(const KGraph& g, const MorphismClass& f);

MorphismClass identity_class(const KGraph& g, const VertexClass& c);

/// f o g; throws NotComposable unless s(f) = r(g). Throws InvalidClass on
/// malformed input.
MorphismClass compose_classes(const KGraph& g, const MorphismClass& f, const MorphismClass& h);
/// f o g evaluated through explicit representatives and the set-level formula.
MorphismClass compose_via_representatives(const KGraph& g, const MorphismClass& f, const MorphismClass& h);
/// The unique (f1, f2) with f = f1 o f2 and d(f1) = m.
std::pair<MorphismClass, MorphismClass> factor_class(const KGraph& g, const MorphismClass& f, const Degree& m);

MorphismClass iota(const Path& lambda);
MorphismClass pi(const MorphismClass& f);

/// The full subgraph of the desourcification on classes with offset <= bound.
struct Truncation {
  KGraph graph;
  long bound = 0;
  /// Indexed by the truncation's vertex and edge ids.
  std::vector<VertexClass> vertex_classes;
  std::vector<MorphismClass> edge_classes;
  /// Vertices whose edges of every colour all lie inside the truncation.
  VertexSet interior;

  MorphismClass class_of(const KGraph& base, const Path& p) const;
  std::optional<VertexId> find(const VertexClass& c) const;
};

/// Throws NotLocallyConvex.
Truncation desourcify_truncated(const KGraph& g, long bound);

/// The `.kg` identifier of a class: `w@a`.
std::string class_name(const KGraph& g, const VertexClass& c);
std::string render_class(const KGraph& g, const MorphismClass& f);

/// Sidecar JSON mapping synthesised identifiers to classes.
std::string sidecar_json(const KGraph& g, const Truncation& t);

}  // namespace kpalg
