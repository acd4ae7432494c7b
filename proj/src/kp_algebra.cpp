#include "kpalg/kp_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace kpalg {

KPElement::KPElement(GraphPtr g, Ring r) : graph_(std::move(g)), ring_(std::move(r)) {
  if (!ring_.has_arithmetic())
    throw Error(ErrorKind::RingMismatch, "ring " + ring_.spec() + " has no arithmetic backend");
}

KPElement KPElement::vertex(GraphPtr g, Ring r, VertexId v) {
  Path p = g->vertex_path(v);
  return monomial(std::move(g), std::move(r), {p, p});
}

KPElement KPElement::of_path(GraphPtr g, Ring r, const Path& lambda) {
  Path s = g->vertex_path(lambda.source());
  return monomial(std::move(g), std::move(r), {lambda, s});
}

KPElement KPElement::ghost(GraphPtr g, Ring r, const Path& lambda) {
  Path s = g->vertex_path(lambda.source());
  return monomial(std::move(g), std::move(r), {s, lambda});
}

KPElement KPElement::monomial(GraphPtr g, Ring r, const Monomial& m, const mpq_class& coef) {
  if (m.alpha.source() != m.beta.source())
    throw Error(ErrorKind::NotComposable, "monomial needs s(alpha) = s(beta)");
  KPElement x(std::move(g), std::move(r));
  x.add_term(m, coef);
  return x;
}

KPElement KPElement::one(GraphPtr g, Ring r) {
  KPElement x(g, r);
  for (VertexId v : g->vertices()) x.add_term({g->vertex_path(v), g->vertex_path(v)}, 1);
  return x;
}

void KPElement::add_term(const Monomial& m, const mpq_class& coef) {
  auto it = terms_.find(m);
  mpq_class c = ring_.normalize(it == terms_.end() ? coef : it->second + coef);
  if (sgn(c) == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = c;
  }
}

void KPElement::check_compatible(const KPElement& o) const {
  if (graph_ != o.graph_ && !(*graph_ == *o.graph_))
    throw Error(ErrorKind::GraphMismatch, "elements over different graphs");
  if (!(ring_ == o.ring_)) throw Error(ErrorKind::RingMismatch, "elements over different rings");
}

KPElement KPElement::operator+(const KPElement& o) const {
  check_compatible(o);
  KPElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

KPElement KPElement::operator-(const KPElement& o) const { return *this + (-o); }

KPElement KPElement::operator-() const { return scaled(-1); }

KPElement KPElement::scaled(const mpq_class& c) const {
  KPElement out(graph_, ring_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

std::vector<std::pair<Path, Path>> ghost_times_path(const KGraph& g, const Path& beta, const Path& gamma) {
  std::vector<std::pair<Path, Path>> out;
  if (beta.range() != gamma.range()) return out;
  Degree n = join(beta.degree(), gamma.degree());
  std::map<Path, Path> left;
  for (const Path& lam : g.paths_leq(beta.source(), n - beta.degree())) left.emplace(g.compose(beta, lam), lam);
  for (const Path& mu : g.paths_leq(gamma.source(), n - gamma.degree())) {
    auto it = left.find(g.compose(gamma, mu));
    if (it != left.end()) out.push_back({it->second, mu});
  }
  std::sort(out.begin(), out.end());
  return out;
}

KPElement KPElement::operator*(const KPElement& o) const {
  check_compatible(o);
  const KGraph& g = *graph_;
  KPElement out(graph_, ring_);
  std::map<std::pair<Path, Path>, std::vector<std::pair<Path, Path>>> cache;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      auto key = std::make_pair(a.beta, b.alpha);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, ghost_times_path(g, a.beta, b.alpha)).first;
      for (const auto& [lam, mu] : it->second)
        out.add_term({g.compose(a.alpha, lam), g.compose(b.beta, mu)}, ca * cb);
    }
  return out.contracted();
}

KPElement mult(const KPElement& x, const KPElement& y) { return x * y; }

KPElement KPElement::contracted() const {
  const KGraph& g = *graph_;
  KPElement out = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [m, c] : out.terms_) {
      for (std::size_t i = 0; i < g.rank() && !changed; ++i) {
        if (m.alpha.degree()[i] < 1 || m.beta.degree()[i] < 1) continue;
        Degree e = Degree::unit(g.rank(), i);
        auto [alpha, lam] = g.factorize(m.alpha, m.alpha.degree() - e);
        auto [beta, lam2] = g.factorize(m.beta, m.beta.degree() - e);
        if (lam != lam2) continue;
        std::vector<Monomial> family;
        bool full = true;
        for (EdgeId xi : g.edges_at(alpha.source(), i)) {
          Path p = g.edge_path(xi);
          Monomial f{g.compose(alpha, p), g.compose(beta, p)};
          auto it = out.terms_.find(f);
          if (it == out.terms_.end() || it->second != c) {
            full = false;
            break;
          }
          family.push_back(f);
        }
        if (!full) continue;
        mpq_class coef = c;
        for (const auto& f : family) out.terms_.erase(f);
        out.add_term({alpha, beta}, coef);
        changed = true;
      }
      if (changed) break;
    }
  }
  return out;
}

Degree KPElement::grade(const Monomial& m) { return m.alpha.degree() - m.beta.degree(); }

std::map<Degree, KPElement> KPElement::degree_components() const {
  std::map<Degree, KPElement> out;
  for (const auto& [m, c] : terms_) {
    auto it = out.find(grade(m));
    if (it == out.end()) it = out.emplace(grade(m), KPElement(graph_, ring_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

bool KPElement::is_homogeneous() const { return degree_components().size() <= 1; }

std::optional<KPElement> KPElement::normal_form(std::size_t max_terms) const {
  const KGraph& g = *graph_;
  KPElement out(graph_, ring_);
  std::size_t produced = 0;
  for (const auto& [deg, part] : degree_components()) {
    Degree t(g.rank());
    for (const auto& [m, c] : part.terms_) t = join(t, m.beta.degree());
    for (const auto& [m, c] : part.terms_) {
      for (const Path& lam : g.paths_leq(m.beta.source(), t - m.beta.degree())) {
        if (++produced > max_terms) return std::nullopt;
        out.add_term({g.compose(m.alpha, lam), g.compose(m.beta, lam)}, c);
      }
    }
  }
  return out;
}

bool operator==(const KPElement& a, const KPElement& b) {
  return a.ring_ == b.ring_ && (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.terms_ == b.terms_;
}

ZeroTest is_zero(const KPElement& x, std::size_t max_terms) {
  ZeroTest res;
  auto nf = x.normal_form(max_terms);
  if (!nf) return res;
  if (nf->empty()) {
    res.verdict = ZeroVerdict::Zero;
    return res;
  }
  const KGraph& g = x.graph();
  const auto& [m, r] = *nf->terms().begin();
  Degree d = KPElement::grade(m);
  VertexId v = m.alpha.source();
  KPElement left = KPElement::ghost(x.graph_ptr(), x.ring(), m.alpha);
  KPElement right = KPElement::of_path(x.graph_ptr(), x.ring(), m.beta);
  KPElement check = left * x.degree_components().at(d) * right - KPElement::vertex(x.graph_ptr(), x.ring(), v).scaled(r);
  auto cnf = check.normal_form(max_terms);
  if (cnf && !cnf->empty()) throw std::logic_error("internal: sandwich witness failed");
  res.verdict = ZeroVerdict::Nonzero;
  res.sandwich = SandwichWitness{d, m.alpha, m.beta, r, v};

  if (g.has_no_sources()) {
    auto candidates = boundary_paths_from(g, m.beta.source(), 1);
    if (candidates.size() > 8) candidates.erase(candidates.begin() + 8, candidates.end());
    for (const auto& y : candidates) {
      UPBoundaryPath z = extend(g, m.beta, y);
      if (!act(x, z).empty()) {
        res.path_witness = z;
        break;
      }
    }
  }
  return res;
}

Extraction extract_vertex_multiple(const KPElement& x) {
  const KGraph& g = x.graph();
  if (!g.has_no_sources()) throw Error(ErrorKind::HasSources, g.name() + " has sources");
  if (!x.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "element is not homogeneous");
  auto nf = x.normal_form();
  if (!nf) throw Error(ErrorKind::ZeroElement, "expansion too large to decide");
  if (nf->empty()) throw Error(ErrorKind::ZeroElement, "element is zero");
  const auto& [m, r] = *nf->terms().begin();
  Extraction out{r, m.alpha.source(), KPElement::ghost(x.graph_ptr(), x.ring(), m.alpha),
                 KPElement::of_path(x.graph_ptr(), x.ring(), m.beta)};
  return out;
}

IdealBasis::IdealBasis(const KGraph& g, VertexSet h) : h_(std::move(h)) {
  if (!is_hereditary(g, h_) || !is_saturated(g, h_))
    throw Error(ErrorKind::NotSaturatedHereditary, "ideal basis needs a saturated hereditary set");
}

IdealBasis ideal_basis(const KGraph& g, const VertexSet& h) { return IdealBasis(g, h); }

std::optional<bool> in_ideal(const KPElement& x, const IdealBasis& basis, std::size_t max_terms) {
  auto nf = x.normal_form(max_terms);
  if (!nf) return std::nullopt;
  for (const auto& [m, c] : nf->terms())
    if (!basis.accepts(m)) return false;
  return true;
}

namespace {

// Shortest skeleton word from v to each vertex it reaches.
std::map<VertexId, std::vector<EdgeId>> shortest_words(const KGraph& g, VertexId v) {
  std::map<VertexId, std::vector<EdgeId>> out{{v, {}}};
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (EdgeId e : g.edges_at(w, i)) {
        VertexId s = g.edge(e).source;
        if (out.count(s)) continue;
        auto word = out[w];
        word.push_back(e);
        out[s] = word;
        queue.push_back(s);
      }
  }
  return out;
}

std::optional<std::pair<Path, Path>> connecting_paths(const KGraph& g, VertexId a, VertexId b) {
  auto wa = shortest_words(g, a);
  auto wb = shortest_words(g, b);
  std::optional<std::pair<Path, Path>> best;
  std::size_t best_len = 0;
  for (const auto& [z, word] : wa) {
    auto it = wb.find(z);
    if (it == wb.end()) continue;
    std::size_t len = word.size() + it->second.size();
    if (best && len >= best_len) continue;
    best = std::make_pair(g.path_from_word(word, a), g.path_from_word(it->second, b));
    best_len = len;
  }
  return best;
}

}  // namespace

bool corner_is_zero(const KGraph& g, VertexId w, VertexId v) {
  VertexSet rw = reachable_from(g, w);
  VertexSet rv = reachable_from(g, v);
  return std::none_of(rw.begin(), rw.end(), [&](VertexId z) { return rv.count(z) > 0; });
}

std::optional<KPElement> find_corner_monomial(GraphPtr g, const Ring& r, VertexId w, VertexId v) {
  auto paths = connecting_paths(*g, w, v);
  if (!paths) return std::nullopt;
  KPElement m = KPElement::monomial(g, r, {paths->first, paths->second});
  KPElement sandwich = KPElement::vertex(g, r, w) * m * KPElement::vertex(g, r, v);
  if (is_zero(sandwich).verdict != ZeroVerdict::Nonzero) return std::nullopt;
  return m;
}

bool corner_vanishes_exhaustively(GraphPtr g, const Ring& r, VertexId w, VertexId v, long max_total) {
  KPElement pw = KPElement::vertex(g, r, w);
  KPElement pv = KPElement::vertex(g, r, v);
  Degree bound = Degree::constant(g->rank(), max_total);
  for (VertexId a : g->vertices())
    for (const Path& alpha : g->paths_within(a, bound)) {
      if (alpha.degree().total() > max_total) continue;
      for (VertexId b : g->vertices())
        for (const Path& beta : g->paths_within(b, bound)) {
          if (beta.degree().total() > max_total || beta.source() != alpha.source()) continue;
          KPElement c = KPElement::monomial(g, r, {alpha, beta});
          if (is_zero(pw * c * pv).verdict != ZeroVerdict::Zero) return false;
        }
    }
  return true;
}

std::optional<KPElement> find_connecting_monomial(const KPElement& a, const KPElement& b) {
  if (a.size() != 1 || b.size() != 1) throw Error(ErrorKind::ParseError, "connecting monomials join single monomials");
  const KGraph& g = a.graph();
  const Monomial& ma = a.terms().begin()->first;
  const Monomial& mb = b.terms().begin()->first;
  auto paths = connecting_paths(g, ma.beta.source(), mb.alpha.source());
  if (!paths) return std::nullopt;
  KPElement c = KPElement::monomial(a.graph_ptr(), a.ring(),
                                    {g.compose(ma.beta, paths->first), g.compose(mb.alpha, paths->second)});
  if (is_zero(a * c * b).verdict != ZeroVerdict::Nonzero) return std::nullopt;
  return c;
}

PathCombination act(const KPElement& x, const UPBoundaryPath& y) {
  const KGraph& g = x.graph();
  PathCombination out;
  for (const auto& [m, c] : x.terms()) {
    auto y1 = rep_apply(g, Generator::ghost(m.beta), y);
    if (!y1) continue;
    auto y2 = rep_apply(g, Generator::of(m.alpha), *y1);
    if (!y2) continue;
    bool merged = false;
    for (auto& [z, d] : out)
      if (same_path(g, z, *y2)) {
        d = x.ring().normalize(d + c);
        merged = true;
        break;
      }
    if (!merged) out.push_back({*y2, c});
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return sgn(t.second) == 0; }), out.end());
  return out;
}

bool same_combination(const KGraph& g, const PathCombination& a, const PathCombination& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [y, c] : a) {
    bool found = false;
    for (const auto& [z, d] : b)
      if (c == d && same_path(g, y, z)) found = true;
    if (!found) return false;
  }
  return true;
}

std::string render(const KGraph& g, const Monomial& m) {
  if (m.alpha.is_vertex() && m.beta.is_vertex()) return "p(" + g.vertex_name(m.alpha.range()) + ")";
  if (m.beta.is_vertex()) return "s(" + g.render(m.alpha) + ")";
  if (m.alpha.is_vertex()) return "st(" + g.render(m.beta) + ")";
  return "s(" + g.render(m.alpha) + ")*st(" + g.render(m.beta) + ")";
}

std::string render(const KPElement& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    mpq_class mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += render(x.graph(), m);
    first = false;
  }
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(GraphPtr g, const Ring& r, const std::string& text) : g_(std::move(g)), r_(r), s_(text) {}

  KPElement parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return as_element(v);
  }

 private:
  struct Value {
    std::optional<mpq_class> scalar;
    std::optional<KPElement> element;
  };

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  KPElement as_element(const Value& v) const {
    if (v.element) return *v.element;
    return KPElement::one(g_, r_).scaled(*v.scalar);
  }

  Value add(const Value& a, const Value& b, int sign) const {
    if (a.scalar && b.scalar) return {r_.normalize(*a.scalar + sign * *b.scalar), std::nullopt};
    KPElement rhs = as_element(b);
    return {std::nullopt, sign > 0 ? as_element(a) + rhs : as_element(a) - rhs};
  }

  Value times(const Value& a, const Value& b) const {
    if (a.scalar && b.scalar) return {r_.normalize(*a.scalar * *b.scalar), std::nullopt};
    if (a.scalar) return {std::nullopt, b.element->scaled(*a.scalar)};
    if (b.scalar) return {std::nullopt, a.element->scaled(*b.scalar)};
    return {std::nullopt, *a.element * *b.element};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+'))
        v = add(v, term(), 1);
      else if (eat('-'))
        v = add(v, term(), -1);
      else
        return v;
    }
  }

  Value term() {
    Value v = factor();
    while (eat('*')) v = times(v, factor());
    return v;
  }

  std::string argument() {
    if (!eat('(')) fail("expected '('");
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
    if (pos_ == s_.size()) fail("missing ')'");
    std::string arg = s_.substr(start, pos_ - start);
    ++pos_;
    arg.erase(0, arg.find_first_not_of(" \t"));
    arg.erase(arg.find_last_not_of(" \t") + 1);
    if (arg.empty()) fail("empty argument");
    return arg;
  }

  Value factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (eat('-')) {
      Value v = factor();
      return times({mpq_class(-1), std::nullopt}, v);
    }
    if (eat('(')) {
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return {r_.parse_scalar(s_.substr(start, pos_ - start)), std::nullopt};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string head = s_.substr(start, pos_ - start);
    if (head == "p") {
      std::string arg = argument();
      auto v = g_->find_vertex(arg);
      if (!v) throw Error(ErrorKind::UnknownIdentifier, "vertex " + arg);
      return {std::nullopt, KPElement::vertex(g_, r_, *v)};
    }
    if (head == "s") return {std::nullopt, KPElement::of_path(g_, r_, g_->parse_path(argument()))};
    if (head == "st") return {std::nullopt, KPElement::ghost(g_, r_, g_->parse_path(argument()))};
    pos_ = start;
    fail("expected p(..), s(..), st(..), a scalar or '('");
  }

  GraphPtr g_;
  const Ring& r_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

KPElement parse_expression(GraphPtr g, const Ring& r, const std::string& text) {
  return ExprParser(std::move(g), r, text).parse();
}

}  // namespace kpalg
