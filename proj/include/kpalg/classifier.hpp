#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpalg/ideals.hpp"
#include "kpalg/ring.hpp"

namespace kpalg {

struct GradedIdeal {
  VertexSet h;
  /// Aperiodicity of Lambda \ H; only meaningful for primitive lists.
  Tristate quotient_aperiodic = Tristate::True;
  friend bool operator==(const GradedIdeal&, const GradedIdeal&) = default;
};

struct IdealList {
  std::vector<GradedIdeal> ideals;
  /// Empty when the ring hypothesis holds, otherwise NotID or NotField.
  std::string reason;
  std::vector<VertexSet> sets() const;
};

/// Proper saturated hereditary H with Lambda^0 \ H a maximal tail, over an ID.
IdealList prime_graded_ideals(const KGraph& g, const Ring& r);
/// As above with Lambda \ H aperiodic, over a field. Periodic quotients are
/// skipped; undecided ones are kept with quotient_aperiodic = Unknown.
IdealList primitive_graded_ideals(const KGraph& g, const Ring& r, long bound);

/// With H = {w : v <= w} listed v first and then in declaration order, paths
/// lambda_1, lambda_2, ... with lambda_{i+1} extending lambda_i and
/// v_i <= s(lambda_i). Throws MT3Fails.
std::vector<Path> primitivity_chain(const KGraph& g, VertexId v);

struct CorollaryResult {
  bool consistent = true;
  std::vector<VertexSet> prime_only;
  std::vector<VertexSet> primitive_only;
};

/// Compares the prime and primitive graded ideal lists. Throws
/// PreconditionsUnmet unless r is a field and g is strongly aperiodic.
CorollaryResult corollary_check(const KGraph& g, const Ring& r, long bound);

struct Verdicts {
  bool prime = false;
  Tristate primitive = Tristate::Unknown;
};

/// Prime and primitive verdicts read off the interior of the truncated
/// desourcification with parameter `truncation`.
Verdicts desourcified_verdicts(const KGraph& g, const Ring& r, long truncation, long bound);

struct ClassificationReport {
  struct GraphInfo {
    std::string name;
    std::size_t rank = 0, vertices = 0, edges = 0;
    friend bool operator==(const GraphInfo&, const GraphInfo&) = default;
  };
  struct Ideal {
    std::vector<std::string> h;
    std::string quotient_aperiodic;  // "unknown" for undecided entries, else empty
    friend bool operator==(const Ideal&, const Ideal&) = default;
  };

  GraphInfo graph;
  std::string ring_spec;
  std::string ring_kind;
  bool no_sources = false;
  bool locally_convex = false;

  bool mt3_ok = false;
  std::vector<std::string> mt3_witness;

  std::string aperiodic;  // aperiodic | periodic | unknown
  long bound = 0;
  std::optional<std::string> aperiodic_vertex;
  std::vector<long> aperiodic_m, aperiodic_n;

  bool prime = false;
  std::string prime_reason;
  std::string primitive;  // true | false | unknown
  std::string primitive_reason;
  std::string strongly_aperiodic;  // true | false | unknown

  std::vector<std::vector<std::string>> sat_her;
  std::vector<std::vector<std::string>> maximal_tails;
  std::vector<Ideal> prime_ideals;
  std::string prime_ideals_reason;
  std::vector<Ideal> primitive_ideals;
  std::string primitive_ideals_reason;
  bool ideal_lists_complete = false;

  std::vector<std::string> chain;
  std::vector<std::string> zero_divisors;
  std::vector<std::string> corner;
  std::vector<std::string> notes;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Throws NotLocallyConvex. A bound <= 0 selects default_aperiodicity_bound.
ClassificationReport classify(const KGraph& g, const Ring& r, long bound = 0);

std::string to_json(const ClassificationReport& report, int indent = 2);
/// Throws ParseError on malformed input.
ClassificationReport report_from_json(const std::string& text);
std::string to_text(const ClassificationReport& report);

std::string to_string(Tristate t);

}  // namespace kpalg
