#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kpalg/boundary.hpp"
#include "kpalg/ideals.hpp"
#include "kpalg/ring.hpp"

namespace kpalg {

/// s_alpha s_{beta*} with s(alpha) = s(beta).
struct Monomial {
  Path alpha;
  Path beta;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using GraphPtr = std::shared_ptr<const KGraph>;

/// A finite R-linear combination of spanning monomials of KP_R(Lambda).
/// Like terms are always combined and zero coefficients dropped.
class KPElement {
 public:
  KPElement(GraphPtr g, Ring r);

  static KPElement vertex(GraphPtr g, Ring r, VertexId v);
  static KPElement of_path(GraphPtr g, Ring r, const Path& lambda);
  static KPElement ghost(GraphPtr g, Ring r, const Path& lambda);
  static KPElement monomial(GraphPtr g, Ring r, const Monomial& m, const mpq_class& coef = 1);
  /// The unit, sum of all p_v.
  static KPElement one(GraphPtr g, Ring r);

  const KGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Ring& ring() const { return ring_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const mpq_class& coef);

  KPElement operator+(const KPElement& o) const;
  KPElement operator-(const KPElement& o) const;
  KPElement operator-() const;
  KPElement scaled(const mpq_class& c) const;
  /// Contracted product. Throws GraphMismatch or RingMismatch.
  KPElement operator*(const KPElement& o) const;

  /// Contracts full KP4 sums over v Lambda^{e_i} to a fixpoint.
  KPElement contracted() const;

  /// Grading degree d(alpha) - d(beta) of a monomial.
  static Degree grade(const Monomial& m);
  std::map<Degree, KPElement> degree_components() const;
  bool is_homogeneous() const;

  /// Every component expanded to a common ghost degree t; these monomials
  /// are linearly independent. nullopt when more than `max_terms` arise.
  std::optional<KPElement> normal_form(std::size_t max_terms = 200000) const;

  friend bool operator==(const KPElement& a, const KPElement& b);

 private:
  void check_compatible(const KPElement& o) const;

  GraphPtr graph_;
  Ring ring_;
  std::map<Monomial, mpq_class> terms_;
};

KPElement mult(const KPElement& x, const KPElement& y);

/// s_{beta*} s_gamma as a sum of pairs (lambda, mu) giving s_lambda s_{mu*}.
std::vector<std::pair<Path, Path>> ghost_times_path(const KGraph& g, const Path& beta, const Path& gamma);

enum class ZeroVerdict { Zero, Nonzero, Unknown };

/// s_{alpha*} x_d s_beta = r p_v with r != 0, where x_d is the degree-d
/// component of x.
struct SandwichWitness {
  Degree component;
  Path alpha;
  Path beta;
  mpq_class r;
  VertexId v;
};

struct ZeroTest {
  ZeroVerdict verdict = ZeroVerdict::Unknown;
  std::optional<SandwichWitness> sandwich;
  /// A boundary path on which x acts nontrivially (graphs without sources).
  std::optional<UPBoundaryPath> path_witness;
};

ZeroTest is_zero(const KPElement& x, std::size_t max_terms = 200000);

struct Extraction {
  mpq_class r;
  VertexId v;
  KPElement left;
  KPElement right;
};

/// For nonzero homogeneous x in a graph without sources: left * x * right = r p_v.
/// Throws HasSources, NotHomogeneous or ZeroElement.
Extraction extract_vertex_multiple(const KPElement& x);

/// Membership predicate for the spanning set of I_H.
class IdealBasis {
 public:
  /// Throws NotSaturatedHereditary.
  IdealBasis(const KGraph& g, VertexSet h);
  bool accepts(const Monomial& m) const { return h_.count(m.alpha.source()) > 0; }
  const VertexSet& set() const { return h_; }

 private:
  VertexSet h_;
};

IdealBasis ideal_basis(const KGraph& g, const VertexSet& h);
/// Exact membership of x in I_H.
std::optional<bool> in_ideal(const KPElement& x, const IdealBasis& basis, std::size_t max_terms = 200000);

/// p_w KP_R(Lambda) p_v = 0, decided on the graph.
bool corner_is_zero(const KGraph& g, VertexId w, VertexId v);
/// A monomial m with p_w m p_v != 0, built from shortest skeleton paths.
std::optional<KPElement> find_corner_monomial(GraphPtr g, const Ring& r, VertexId w, VertexId v);
/// Checks p_w m p_v = 0 for every monomial with |d(alpha)|, |d(beta)| <= max_total.
bool corner_vanishes_exhaustively(GraphPtr g, const Ring& r, VertexId w, VertexId v, long max_total);

/// c with a c b != 0 for single monomials a, b, if one exists.
std::optional<KPElement> find_connecting_monomial(const KPElement& a, const KPElement& b);

/// The image of a boundary path under the infinite-path representation.
using PathCombination = std::vector<std::pair<UPBoundaryPath, mpq_class>>;
PathCombination act(const KPElement& x, const UPBoundaryPath& y);
bool same_combination(const KGraph& g, const PathCombination& a, const PathCombination& b);

/// Rendering: p(v), s(a.b), st(a.b), s(a)*st(b), scalars and signs.
std::string render(const KPElement& x);
std::string render(const KGraph& g, const Monomial& m);

/// Parses p(v), s(path), st(path), scalars, + - *, parentheses.
KPElement parse_expression(GraphPtr g, const Ring& r, const std::string& text);

}  // namespace kpalg
