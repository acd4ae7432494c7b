#pragma once

#include <random>
#include <vector>

#include "kpalg/kp_algebra.hpp"

namespace kpalg::testing {

inline std::vector<Monomial> monomials_within(const KGraph& g, long bound) {
  std::vector<Monomial> out;
  Degree b = Degree::constant(g.rank(), bound);
  std::vector<Path> all;
  for (VertexId v : g.vertices())
    for (const Path& p : g.paths_within(v, b)) all.push_back(p);
  for (const Path& a : all)
    for (const Path& c : all)
      if (a.source() == c.source()) out.push_back({a, c});
  return out;
}

inline mpq_class random_coefficient(std::mt19937_64& rng, const Ring& r) {
  for (;;) {
    long c = std::uniform_int_distribution<long>(-4, 4)(rng);
    mpq_class q = r.normalize(c);
    if (sgn(q) != 0) return q;
  }
}

inline KPElement random_element(const GraphPtr& g, const Ring& r, std::mt19937_64& rng,
                                const std::vector<Monomial>& pool, std::size_t max_terms = 4) {
  KPElement x(g, r);
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  for (std::size_t i = 0; i < n; ++i)
    x.add_term(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], random_coefficient(rng, r));
  return x;
}

/// Random element supported on a single grading degree.
inline KPElement random_homogeneous(const GraphPtr& g, const Ring& r, std::mt19937_64& rng,
                                    const std::vector<Monomial>& pool, std::size_t max_terms = 4) {
  const Monomial& seed = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  Degree d = KPElement::grade(seed);
  std::vector<Monomial> same;
  for (const auto& m : pool)
    if (KPElement::grade(m) == d) same.push_back(m);
  return random_element(g, r, rng, same, max_terms);
}

inline PathCombination act_on(const KPElement& x, const PathCombination& ys) {
  PathCombination out;
  for (const auto& [y, c] : ys)
    for (const auto& [z, d] : act(x, y)) {
      bool merged = false;
      for (auto& [w, e] : out)
        if (same_path(x.graph(), w, z)) {
          e = x.ring().normalize(e + c * d);
          merged = true;
          break;
        }
      if (!merged) out.push_back({z, x.ring().normalize(c * d)});
    }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  return out;
}

inline bool equal_in_algebra(const KPElement& a, const KPElement& b) {
  return is_zero(a - b).verdict == ZeroVerdict::Zero;
}

}  // namespace kpalg::testing
