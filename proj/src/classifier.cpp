#include "kpalg/classifier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kpalg/desourcify.hpp"
#include "kpalg/kp_algebra.hpp"

namespace kpalg {

using json = nlohmann::ordered_json;

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::True:
      return "true";
    case Tristate::False:
      return "false";
    case Tristate::Unknown:
      break;
  }
  return "unknown";
}

std::vector<VertexSet> IdealList::sets() const {
  std::vector<VertexSet> out;
  for (const auto& i : ideals) out.push_back(i.h);
  return out;
}

namespace {

Tristate tristate(AperiodicityVerdict v) {
  switch (v) {
    case AperiodicityVerdict::Aperiodic:
      return Tristate::True;
    case AperiodicityVerdict::Periodic:
      return Tristate::False;
    case AperiodicityVerdict::Unknown:
      break;
  }
  return Tristate::Unknown;
}

std::string verdict_name(AperiodicityVerdict v) {
  switch (v) {
    case AperiodicityVerdict::Aperiodic:
      return "aperiodic";
    case AperiodicityVerdict::Periodic:
      return "periodic";
    case AperiodicityVerdict::Unknown:
      break;
  }
  return "unknown";
}

long effective_bound(const KGraph& g, long bound) { return bound > 0 ? bound : default_aperiodicity_bound(g); }

void require_convex(const KGraph& g) {
  if (!g.is_locally_convex()) throw Error(ErrorKind::NotLocallyConvex, g.name() + " is not locally convex");
}

Tristate primitive_verdict(const Ring& r, bool mt3, Tristate aperiodic) {
  if (!r.is_field() || !mt3 || aperiodic == Tristate::False) return Tristate::False;
  return aperiodic;
}

std::vector<long> coords(const Degree& d) {
  std::vector<long> out;
  for (std::size_t i = 0; i < d.rank(); ++i) out.push_back(d[i]);
  return out;
}

}  // namespace

IdealList prime_graded_ideals(const KGraph& g, const Ring& r) {
  require_convex(g);
  IdealList out;
  if (!r.is_domain()) {
    out.reason = "NotID";
    return out;
  }
  for (const VertexSet& h : maximal_tail_complements(g)) out.ideals.push_back({h, Tristate::True});
  return out;
}

IdealList primitive_graded_ideals(const KGraph& g, const Ring& r, long bound) {
  require_convex(g);
  IdealList out;
  if (!r.is_field()) {
    out.reason = "NotField";
    return out;
  }
  for (const VertexSet& h : maximal_tail_complements(g)) {
    KGraph q = quotient(g, h);
    Tristate ap = tristate(is_aperiodic(q, effective_bound(q, bound)).verdict);
    if (ap != Tristate::False) out.ideals.push_back({h, ap});
  }
  return out;
}

std::vector<Path> primitivity_chain(const KGraph& g, VertexId v) {
  if (auto w = check_mt3(g))
    throw Error(ErrorKind::MT3Fails,
                "no common descendant of " + g.vertex_name(w->first) + " and " + g.vertex_name(w->second));
  VertexSet reach = reachable_from(g, v);
  std::vector<VertexId> order{v};
  for (VertexId w : g.vertices())
    if (w != v && reach.count(w)) order.push_back(w);

  std::vector<Path> chain{g.vertex_path(v)};
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Path& last = chain.back();
    VertexSet targets = reachable_from(g, order[i]);
    VertexId start = last.source();
    std::map<VertexId, std::vector<EdgeId>> words{{start, {}}};
    std::deque<VertexId> queue{start};
    std::optional<VertexId> hit;
    while (!queue.empty() && !hit) {
      VertexId x = queue.front();
      queue.pop_front();
      if (targets.count(x)) {
        hit = x;
        break;
      }
      for (std::size_t c = 0; c < g.rank(); ++c)
        for (EdgeId e : g.edges_at(x, c)) {
          VertexId s = g.edge(e).source;
          if (words.count(s)) continue;
          words[s] = words[x];
          words[s].push_back(e);
          queue.push_back(s);
        }
    }
    if (!hit) throw Error(ErrorKind::MT3Fails, "no common descendant for " + g.vertex_name(order[i]));
    chain.push_back(g.compose(last, g.path_from_word(words[*hit], start)));
  }
  return chain;
}

CorollaryResult corollary_check(const KGraph& g, const Ring& r, long bound) {
  require_convex(g);
  if (!r.is_field()) throw Error(ErrorKind::PreconditionsUnmet, "ring " + r.spec() + " is not a field");
  auto strong = is_strongly_aperiodic(g, effective_bound(g, bound));
  if (strong.verdict != Tristate::True)
    throw Error(ErrorKind::PreconditionsUnmet, g.name() + " is not known to be strongly aperiodic");
  auto prime = prime_graded_ideals(g, r).sets();
  auto primitive = primitive_graded_ideals(g, r, bound).sets();
  CorollaryResult res;
  for (const auto& h : prime)
    if (std::find(primitive.begin(), primitive.end(), h) == primitive.end()) res.prime_only.push_back(h);
  for (const auto& h : primitive)
    if (std::find(prime.begin(), prime.end(), h) == prime.end()) res.primitive_only.push_back(h);
  res.consistent = res.prime_only.empty() && res.primitive_only.empty();
  return res;
}

Verdicts desourcified_verdicts(const KGraph& g, const Ring& r, long truncation, long bound) {
  Truncation t = desourcify_truncated(g, truncation);
  std::vector<VertexId> interior(t.interior.begin(), t.interior.end());
  bool mt3 = !check_mt3(t.graph, t.interior).has_value();
  Tristate ap = tristate(is_aperiodic(t.graph, effective_bound(g, bound), &interior).verdict);
  return {r.is_domain() && mt3, primitive_verdict(r, mt3, ap)};
}

ClassificationReport classify(const KGraph& g, const Ring& r, long bound) {
  require_convex(g);
  long b = effective_bound(g, bound);
  ClassificationReport rep;
  rep.graph = {g.name(), g.rank(), g.num_vertices(), g.num_edges()};
  rep.ring_spec = r.spec();
  rep.ring_kind = r.describe();
  GraphProperties props = g.properties();
  rep.no_sources = props.no_sources;
  rep.locally_convex = props.locally_convex;

  auto mt3 = check_mt3(g);
  rep.mt3_ok = !mt3.has_value();
  if (mt3) rep.mt3_witness = {g.vertex_name(mt3->first), g.vertex_name(mt3->second)};

  AperiodicityResult ap = is_aperiodic(g, b);
  rep.aperiodic = verdict_name(ap.verdict);
  rep.bound = b;
  if (ap.witness) {
    rep.aperiodic_vertex = g.vertex_name(ap.witness->vertex);
    rep.aperiodic_m = coords(ap.witness->m);
    rep.aperiodic_n = coords(ap.witness->n);
  }

  rep.prime = r.is_domain() && rep.mt3_ok;
  if (!r.is_domain()) {
    rep.prime_reason = "ring is not an integral domain";
    if (r.zero_divisors()) rep.zero_divisors = {r.zero_divisors()->first, r.zero_divisors()->second};
  } else if (!rep.mt3_ok) {
    rep.prime_reason = "MT3 fails at (" + rep.mt3_witness[0] + ", " + rep.mt3_witness[1] + ")";
  } else {
    rep.prime_reason = "integral domain and MT3 holds";
  }

  Tristate prim = primitive_verdict(r, rep.mt3_ok, tristate(ap.verdict));
  rep.primitive = to_string(prim);
  if (!r.is_field())
    rep.primitive_reason = "ring is not a field";
  else if (!rep.mt3_ok)
    rep.primitive_reason = "MT3 fails";
  else if (ap.verdict == AperiodicityVerdict::Periodic)
    rep.primitive_reason = "graph is periodic";
  else if (ap.verdict == AperiodicityVerdict::Unknown)
    rep.primitive_reason = "aperiodicity undecided at bound " + std::to_string(b);
  else
    rep.primitive_reason = "field, MT3 and aperiodic";

  Tristate strong = is_strongly_aperiodic(g, b).verdict;
  rep.strongly_aperiodic = to_string(strong);

  for (const auto& h : enumerate_sat_her(g)) rep.sat_her.push_back(names(g, h));
  for (const auto& h : maximal_tail_complements(g)) rep.maximal_tails.push_back(names(g, complement(g, h)));

  IdealList prime = prime_graded_ideals(g, r);
  for (const auto& i : prime.ideals) rep.prime_ideals.push_back({names(g, i.h), ""});
  rep.prime_ideals_reason = prime.reason;
  IdealList primitive = primitive_graded_ideals(g, r, bound);
  for (const auto& i : primitive.ideals)
    rep.primitive_ideals.push_back({names(g, i.h), i.quotient_aperiodic == Tristate::Unknown ? "unknown" : ""});
  rep.primitive_ideals_reason = primitive.reason;
  rep.ideal_lists_complete = r.is_field() && strong == Tristate::True;
  if (!rep.ideal_lists_complete)
    rep.notes.push_back("ideal lists cover graded basic ideals only; other prime ideals are out of scope");

  if (rep.mt3_ok && g.num_vertices() > 0)
    for (const Path& p : primitivity_chain(g, g.vertices().front())) rep.chain.push_back(g.render(p));

  if (!r.has_arithmetic()) {
    rep.notes.push_back("structural ring flags only; algebra witness checks disabled");
  } else if (mt3) {
    auto gp = std::make_shared<const KGraph>(g);
    bool zero = corner_is_zero(g, mt3->second, mt3->first) &&
                !find_corner_monomial(gp, r, mt3->second, mt3->first).has_value();
    rep.corner = {rep.mt3_witness[1], rep.mt3_witness[0], zero ? "zero" : "nonzero"};
  }
  return rep;
}

namespace {

json ideals_json(const std::vector<ClassificationReport::Ideal>& list) {
  json out = json::array();
  for (const auto& i : list) {
    json e{{"H", i.h}};
    if (!i.quotient_aperiodic.empty()) e["quotient_aperiodic"] = i.quotient_aperiodic;
    out.push_back(e);
  }
  return out;
}

json verdict_json(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  return v;
}

std::string verdict_from(const json& j) {
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.get<std::string>();
}

std::vector<ClassificationReport::Ideal> ideals_from(const json& j) {
  std::vector<ClassificationReport::Ideal> out;
  for (const auto& e : j) out.push_back({e.at("H").get<std::vector<std::string>>(), e.value("quotient_aperiodic", "")});
  return out;
}

std::string join_names(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

std::string render_coords(const std::vector<long>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

}  // namespace

std::string to_json(const ClassificationReport& r, int indent) {
  json j;
  j["graph"] = {{"name", r.graph.name}, {"rank", r.graph.rank}, {"vertices", r.graph.vertices}, {"edges", r.graph.edges}};
  j["ring"] = {{"spec", r.ring_spec}, {"kind", r.ring_kind}};
  j["properties"] = {{"no_sources", r.no_sources}, {"locally_convex", r.locally_convex}};
  j["mt3"] = {{"ok", r.mt3_ok}, {"witness", r.mt3_witness.empty() ? json(nullptr) : json(r.mt3_witness)}};
  json witness = nullptr;
  if (r.aperiodic_vertex) witness = {{"vertex", *r.aperiodic_vertex}, {"m", r.aperiodic_m}, {"n", r.aperiodic_n}};
  j["aperiodic"] = {{"verdict", r.aperiodic}, {"bound", r.bound}, {"witness", witness}};
  j["prime"] = {{"verdict", r.prime}, {"reason", r.prime_reason}};
  j["primitive"] = {{"verdict", verdict_json(r.primitive)}, {"reason", r.primitive_reason}};
  j["strongly_aperiodic"] = {{"verdict", verdict_json(r.strongly_aperiodic)}};
  j["sat_her"] = r.sat_her;
  j["maximal_tails"] = r.maximal_tails;
  j["prime_ideals"] = ideals_json(r.prime_ideals);
  j["primitive_ideals"] = ideals_json(r.primitive_ideals);
  j["ideal_lists"] = {{"complete", r.ideal_lists_complete},
                      {"prime_reason", r.prime_ideals_reason},
                      {"primitive_reason", r.primitive_ideals_reason}};
  j["certificates"] = {{"chain", r.chain}, {"zero_divisors", r.zero_divisors}, {"corner", r.corner}};
  j["notes"] = r.notes;
  return j.dump(indent);
}

ClassificationReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    ClassificationReport r;
    const json& g = j.at("graph");
    r.graph = {g.at("name"), g.at("rank"), g.at("vertices"), g.at("edges")};
    r.ring_spec = j.at("ring").at("spec");
    r.ring_kind = j.at("ring").at("kind");
    r.no_sources = j.at("properties").at("no_sources");
    r.locally_convex = j.at("properties").at("locally_convex");
    r.mt3_ok = j.at("mt3").at("ok");
    if (!j.at("mt3").at("witness").is_null()) r.mt3_witness = j["mt3"]["witness"].get<std::vector<std::string>>();
    const json& ap = j.at("aperiodic");
    r.aperiodic = ap.at("verdict");
    r.bound = ap.at("bound");
    if (!ap.at("witness").is_null()) {
      r.aperiodic_vertex = ap["witness"].at("vertex").get<std::string>();
      r.aperiodic_m = ap["witness"].at("m").get<std::vector<long>>();
      r.aperiodic_n = ap["witness"].at("n").get<std::vector<long>>();
    }
    r.prime = j.at("prime").at("verdict");
    r.prime_reason = j.at("prime").at("reason");
    r.primitive = verdict_from(j.at("primitive").at("verdict"));
    r.primitive_reason = j.at("primitive").at("reason");
    r.strongly_aperiodic = verdict_from(j.at("strongly_aperiodic").at("verdict"));
    r.sat_her = j.at("sat_her").get<std::vector<std::vector<std::string>>>();
    r.maximal_tails = j.at("maximal_tails").get<std::vector<std::vector<std::string>>>();
    r.prime_ideals = ideals_from(j.at("prime_ideals"));
    r.primitive_ideals = ideals_from(j.at("primitive_ideals"));
    r.ideal_lists_complete = j.at("ideal_lists").at("complete");
    r.prime_ideals_reason = j["ideal_lists"].at("prime_reason");
    r.primitive_ideals_reason = j["ideal_lists"].at("primitive_reason");
    const json& c = j.at("certificates");
    r.chain = c.at("chain").get<std::vector<std::string>>();
    r.zero_divisors = c.at("zero_divisors").get<std::vector<std::string>>();
    r.corner = c.at("corner").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "graph " << r.graph.name << ": k=" << r.graph.rank << ", " << r.graph.vertices << " vertices, "
     << r.graph.edges << " edges\n";
  os << "ring " << r.ring_spec << " (" << r.ring_kind << ")\n";
  os << "no_sources=" << (r.no_sources ? "true" : "false")
     << " locally_convex=" << (r.locally_convex ? "true" : "false") << "\n";
  os << "mt3=" << (r.mt3_ok ? "true" : "false");
  if (!r.mt3_ok) os << " witness=(" << r.mt3_witness[0] << "," << r.mt3_witness[1] << ")";
  os << "\naperiodic=" << r.aperiodic << " bound=" << r.bound;
  if (r.aperiodic_vertex)
    os << " witness=" << *r.aperiodic_vertex << " m=" << render_coords(r.aperiodic_m)
       << " n=" << render_coords(r.aperiodic_n);
  os << "\nprime=" << (r.prime ? "true" : "false") << " (" << r.prime_reason << ")\n";
  os << "primitive=" << r.primitive << " (" << r.primitive_reason << ")\n";
  os << "strongly_aperiodic=" << r.strongly_aperiodic << "\n";
  os << "sat_her:";
  for (const auto& h : r.sat_her) os << " " << join_names(h);
  os << "\nmaximal_tails:";
  for (const auto& h : r.maximal_tails) os << " " << join_names(h);
  os << "\nprime_ideals:";
  if (!r.prime_ideals_reason.empty()) os << " none (" << r.prime_ideals_reason << ")";
  for (const auto& i : r.prime_ideals) os << " " << join_names(i.h);
  os << "\nprimitive_ideals:";
  if (!r.primitive_ideals_reason.empty()) os << " none (" << r.primitive_ideals_reason << ")";
  for (const auto& i : r.primitive_ideals)
    os << " " << join_names(i.h) << (i.quotient_aperiodic.empty() ? "" : "?");
  os << "\n";
  if (!r.chain.empty()) {
    os << "chain:";
    for (const auto& p : r.chain) os << " " << p;
    os << "\n";
  }
  if (!r.zero_divisors.empty()) os << "zero_divisors: " << r.zero_divisors[0] << "*" << r.zero_divisors[1] << " = 0\n";
  if (!r.corner.empty()) os << "corner p(" << r.corner[0] << ") KP p(" << r.corner[1] << "): " << r.corner[2] << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace kpalg
