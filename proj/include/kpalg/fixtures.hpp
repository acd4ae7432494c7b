#pragma once

#include <random>
#include <string>
#include <vector>

#include "kpalg/kgraph.hpp"

namespace kpalg::fixtures {

/// One vertex v with a loop e (k = 1).
KGraph l1();
/// u <- v through e: r(e) = u, s(e) = v (k = 1).
KGraph a2();
/// Two isolated vertices u and w (k = 1).
KGraph d2();
/// One vertex v, loops f (colour 1) and g (colour 2), square f.g ~ g.f.
KGraph t2();
/// Omega_{2,(1,1)}.
KGraph o22();

/// Omega_{k,m}: vertices p <= m, edges (p, p + e_i) with range p.
KGraph omega(std::size_t k, const Degree& m, const std::string& name = "");

/// All named fixtures: L1, A2, D2, T2, O22.
std::vector<KGraph> all();
KGraph by_name(const std::string& name);

/// Cartesian product E x F of two 1-graphs as a 2-graph.
KGraph product(const KGraph& e, const KGraph& f, const std::string& name);
/// Disjoint union of two graphs of equal rank; names are prefixed.
KGraph disjoint_union(const KGraph& a, const KGraph& b, const std::string& name);

/// Random directed graph with 1..max_vertices vertices.
KGraph random_one_graph(std::mt19937_64& rng, std::size_t max_vertices, const std::string& name);
/// Random valid locally convex 2-graph with at most max_vertices vertices,
/// drawn from products, single-vertex 2-graphs with random squares,
/// single-colour embeddings and disjoint unions of those.
KGraph random_two_graph(std::mt19937_64& rng, std::size_t max_vertices, const std::string& name);

}  // namespace kpalg::fixtures
