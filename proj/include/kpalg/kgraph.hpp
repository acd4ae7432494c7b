#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpalg/degree.hpp"
#include "kpalg/error.hpp"

namespace kpalg {

struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t index = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

/// A degree-e_i morphism. Colours are zero-based internally and one-based in
/// the text format.
struct Edge {
  std::string name;
  std::size_t color = 0;
  VertexId source;
  VertexId range;
};

/// a.b = c.d with color(a) = color(d) < color(b) = color(c).
struct Square {
  EdgeId a, b, c, d;
};

class KGraph;

/// A morphism of a k-graph in canonical form: its edge word lists all
/// colour-0 edges first, then colour-1, and so on. Degree-zero paths carry no
/// edges and are identified with their vertex.
class Path {
 public:
  Path() = default;

  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  const Degree& degree() const { return degree_; }
  bool is_vertex() const { return edges_.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.range_ == b.range_ && a.source_ == b.source_ && a.edges_ == b.edges_;
  }
  /// Lexicographic by edge word; degree-zero paths first, ordered by vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                        b.edges_.begin(), b.edges_.end());
        c != 0)
      return c;
    if (auto c = a.range_ <=> b.range_; c != 0) return c;
    return a.source_ <=> b.source_;
  }

 private:
  friend class KGraph;
  VertexId range_;
  VertexId source_;
  std::vector<EdgeId> edges_;
  Degree degree_;
};

struct GraphProperties {
  bool no_sources = false;
  bool locally_convex = false;
  friend bool operator==(const GraphProperties&, const GraphProperties&) = default;
};

/// A finite k-graph presented by its coloured 1-skeleton and a complete set of
/// commuting squares. Instances are immutable once built and always valid.
class KGraph {
 public:
  class Builder {
   public:
    Builder(std::string name, std::size_t rank);

    Builder& add_vertex(const std::string& name);
    /// `color` is one-based. The edge lies in range Lambda^{e_color} source.
    Builder& add_edge(const std::string& name, std::size_t color, const std::string& source,
                      const std::string& range);
    Builder& add_square(const std::string& a, const std::string& b, const std::string& c,
                        const std::string& d);

    /// Validates the presentation and throws `Error` on the first violation.
    KGraph build() const;

   private:
    struct RawEdge {
      std::string name;
      std::size_t color;
      std::string source, range;
    };
    std::string name_;
    std::size_t rank_;
    std::vector<std::string> vertices_;
    std::vector<RawEdge> edges_;
    std::vector<std::array<std::string, 4>> squares_;
  };

  KGraph() = default;

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Square>& squares() const { return squares_; }

  std::vector<VertexId> vertices() const;
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.index); }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  VertexId vertex(const std::string& name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e.index); }
  std::optional<EdgeId> find_edge(const std::string& name) const;

  /// The edges in v Lambda^{e_color}, in declaration order.
  std::span<const EdgeId> edges_at(VertexId v, std::size_t color) const {
    return edges_at_[v.index][color];
  }
  bool emits(VertexId v, std::size_t color) const { return !edges_at(v, color).empty(); }

  Path vertex_path(VertexId v) const;
  Path edge_path(EdgeId e) const;
  /// Canonicalises an arbitrary composable edge word. An empty word needs
  /// `base` for its vertex.
  Path path_from_word(const std::vector<EdgeId>& word, std::optional<VertexId> base = {}) const;
  /// Parses `e1.e2...` (or a vertex name) into a canonical path.
  Path parse_path(const std::string& dotted) const;
  std::string render(const Path& p, char sep = '.') const;

  Path compose(const Path& mu, const Path& nu) const;
  std::pair<Path, Path> factorize(const Path& lambda, const Degree& m) const;
  /// lambda(m, n) for 0 <= m <= n <= d(lambda).
  Path segment(const Path& lambda, const Degree& m, const Degree& n) const;

  /// The other factorisation of a composable bi-coloured edge pair.
  std::pair<EdgeId, EdgeId> swap(EdgeId x, EdgeId y) const;

  std::vector<Path> paths_of_degree(VertexId v, const Degree& n) const;
  std::vector<Path> paths_leq(VertexId v, const Degree& n) const;
  /// Visits v Lambda^{<=n} in a fixed order until `visit` returns false.
  /// Returns false if the visit was cut short.
  bool visit_paths_leq(VertexId v, const Degree& n, const std::function<bool(const Path&)>& visit) const;
  /// Every path with range v and degree <= bound.
  std::vector<Path> paths_within(VertexId v, const Degree& bound) const;

  GraphProperties properties() const;
  bool has_no_sources() const { return properties().no_sources; }
  bool is_locally_convex() const { return properties().locally_convex; }

  friend bool operator==(const KGraph& a, const KGraph& b);

 private:
  Path rewrite_to_colors(const Path& p, const std::vector<std::size_t>& colors) const;
  void check_confluence() const;

  std::string name_;
  std::size_t rank_ = 1;
  std::vector<std::string> vertex_names_;
  std::map<std::string, VertexId> vertex_index_;
  std::vector<Edge> edges_;
  std::map<std::string, EdgeId> edge_index_;
  std::vector<Square> squares_;
  std::vector<std::vector<std::vector<EdgeId>>> edges_at_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<EdgeId, EdgeId>> swap_;
};

}  // namespace kpalg
