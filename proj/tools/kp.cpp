#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kpalg/classifier.hpp"
#include "kpalg/desourcify.hpp"
#include "kpalg/fixtures.hpp"
#include "kpalg/kg_format.hpp"
#include "kpalg/kp_algebra.hpp"

using namespace kpalg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string ring = "q";
  long bound = 0;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 20240101;
  bool strict = false;

  std::string kind = "prime";
  std::string hset;
  std::string vertex;
  std::string sidecar;
  std::string expression;
  std::vector<std::string> fixture_args;
  std::size_t vertices = 4;
  std::size_t rank = 1;
};

KGraph load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FileError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_kg(ss.str());
}

Ring ring_of(const Config& c) {
  try {
    return Ring::parse(c.ring);
  } catch (const Error& e) {
    throw UsageError(std::string("--ring: ") + e.what());
  }
}

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw FileError("cannot write " + c.output);
  f << text;
}

bool as_json(const Config& c) { return c.format == "json"; }

std::string braces(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

std::string tuple(const Degree& d) { return "(" + d.to_string(',') + ")"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string set_list(const KGraph& g, const std::vector<VertexSet>& sets, bool json_out) {
  if (json_out) {
    json j = json::array();
    for (const auto& h : sets) j.push_back(names(g, h));
    return j.dump() + "\n";
  }
  std::string out;
  for (const auto& h : sets) out += braces(names(g, h)) + "\n";
  return out;
}

int cmd_validate(const Config& c) {
  KGraph g = load(c.input);
  std::ostringstream os;
  if (as_json(c)) {
    os << json{{"valid", true}, {"name", g.name()}}.dump() << "\n";
  } else {
    os << "ok: " << g.name() << " (k=" << g.rank() << ", " << g.num_vertices() << " vertices, " << g.num_edges()
       << " edges, " << g.squares().size() << " squares)\n";
  }
  emit(c, os.str());
  return kExitOk;
}

int cmd_info(const Config& c) {
  KGraph g = load(c.input);
  GraphProperties p = g.properties();
  std::vector<std::string> vs;
  for (VertexId v : g.vertices()) vs.push_back(g.vertex_name(v));
  if (as_json(c)) {
    json edges = json::array();
    for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(EdgeId{i});
      edges.push_back({{"id", e.name},
                       {"color", e.color + 1},
                       {"source", g.vertex_name(e.source)},
                       {"range", g.vertex_name(e.range)}});
    }
    json j{{"name", g.name()},
           {"rank", g.rank()},
           {"vertices", vs},
           {"edges", edges},
           {"squares", g.squares().size()},
           {"properties", {{"no_sources", p.no_sources}, {"locally_convex", p.locally_convex}}}};
    emit(c, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "graph " << g.name() << "\nrank " << g.rank() << "\nvertices " << g.num_vertices() << ":";
  for (const auto& v : vs) os << " " << v;
  os << "\nedges " << g.num_edges() << "\nsquares " << g.squares().size() << "\nno_sources "
     << (p.no_sources ? "true" : "false") << "\nlocally_convex " << (p.locally_convex ? "true" : "false") << "\n";
  emit(c, os.str());
  return kExitOk;
}

int cmd_hsets(const Config& c) {
  KGraph g = load(c.input);
  emit(c, set_list(g, enumerate_sat_her(g), as_json(c)));
  return kExitOk;
}

int cmd_tails(const Config& c) {
  KGraph g = load(c.input);
  std::vector<VertexSet> tails;
  for (const auto& h : maximal_tail_complements(g)) tails.push_back(complement(g, h));
  emit(c, set_list(g, tails, as_json(c)));
  return kExitOk;
}

int cmd_aperiodic(const Config& c) {
  KGraph g = load(c.input);
  long b = c.bound > 0 ? c.bound : default_aperiodicity_bound(g);
  AperiodicityResult r = is_aperiodic(g, b);
  std::string verdict = r.verdict == AperiodicityVerdict::Aperiodic  ? "aperiodic"
                        : r.verdict == AperiodicityVerdict::Periodic ? "periodic"
                                                                     : "unknown";
  if (as_json(c)) {
    json w = nullptr;
    if (r.witness) w = {{"vertex", g.vertex_name(r.witness->vertex)}, {"m", tuple(r.witness->m)}, {"n", tuple(r.witness->n)}};
    emit(c, json{{"verdict", verdict}, {"bound", b}, {"witness", w}}.dump(2) + "\n");
  } else {
    std::string line = "aperiodic=" + verdict + " bound=" + std::to_string(b);
    if (r.witness)
      line += " witness=" + g.vertex_name(r.witness->vertex) + " m=" + tuple(r.witness->m) + " n=" + tuple(r.witness->n);
    emit(c, line + "\n");
  }
  return c.strict && r.verdict == AperiodicityVerdict::Unknown ? kExitUnknown : kExitOk;
}

int cmd_classify(const Config& c) {
  KGraph g = load(c.input);
  ClassificationReport r = classify(g, ring_of(c), c.bound);
  emit(c, as_json(c) ? to_json(r) + "\n" : to_text(r));
  bool unknown = r.aperiodic == "unknown" || r.primitive == "unknown" || r.strongly_aperiodic == "unknown";
  return c.strict && unknown ? kExitUnknown : kExitOk;
}

int cmd_ideals(const Config& c) {
  KGraph g = load(c.input);
  Ring r = ring_of(c);
  IdealList list;
  if (c.kind == "prime")
    list = prime_graded_ideals(g, r);
  else
    list = primitive_graded_ideals(g, r, c.bound);
  bool unknown = false;
  if (as_json(c)) {
    json j = json::array();
    for (const auto& i : list.ideals) {
      json e{{"H", names(g, i.h)}};
      if (i.quotient_aperiodic == Tristate::Unknown) e["quotient_aperiodic"] = "unknown";
      j.push_back(e);
    }
    emit(c, j.dump() + "\n");
  } else {
    std::string out;
    if (!list.reason.empty()) out = "none (" + list.reason + ")\n";
    for (const auto& i : list.ideals)
      out += braces(names(g, i.h)) + (i.quotient_aperiodic == Tristate::Unknown ? " (quotient aperiodicity unknown)" : "") +
             "\n";
    emit(c, out);
  }
  for (const auto& i : list.ideals) unknown = unknown || i.quotient_aperiodic == Tristate::Unknown;
  if (!list.reason.empty()) std::cerr << c.kind << " ideal list empty: " << list.reason << "\n";
  return c.strict && unknown ? kExitUnknown : kExitOk;
}

int cmd_quotient(const Config& c) {
  KGraph g = load(c.input);
  VertexSet h = parse_vertex_set(g, split(c.hset, ','));
  emit(c, write_kg(quotient(g, h)));
  return kExitOk;
}

int cmd_desourcify(const Config& c) {
  KGraph g = load(c.input);
  Truncation t = desourcify_truncated(g, c.bound > 0 ? c.bound : 2);
  emit(c, write_kg(t.graph));
  if (!c.sidecar.empty()) {
    std::ofstream f(c.sidecar);
    if (!f) throw FileError("cannot write " + c.sidecar);
    f << sidecar_json(g, t) << "\n";
  }
  return kExitOk;
}

int cmd_chain(const Config& c) {
  KGraph g = load(c.input);
  VertexId v = c.vertex.empty() ? g.vertices().front() : g.vertex(c.vertex);
  std::vector<std::string> paths;
  for (const Path& p : primitivity_chain(g, v)) paths.push_back(g.render(p));
  if (as_json(c)) {
    emit(c, json{{"vertex", g.vertex_name(v)}, {"chain", paths}}.dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& p : paths) out += p + "\n";
    emit(c, out);
  }
  return kExitOk;
}

int cmd_eval(const Config& c) {
  auto g = std::make_shared<const KGraph>(load(c.input));
  Ring r = ring_of(c);
  KPElement x = parse_expression(g, r, c.expression);
  ZeroTest z = is_zero(x);
  std::string verdict = z.verdict == ZeroVerdict::Zero ? "zero" : z.verdict == ZeroVerdict::Nonzero ? "nonzero" : "unknown";
  auto parts = x.degree_components();
  if (as_json(c)) {
    json comps = json::object();
    for (const auto& [d, part] : parts) comps[tuple(d)] = render(part);
    json j{{"element", render(x)}, {"components", comps}, {"zero", verdict}};
    if (z.sandwich)
      j["witness"] = {{"left", "st(" + g->render(z.sandwich->alpha) + ")"},
                      {"right", "s(" + g->render(z.sandwich->beta) + ")"},
                      {"result", render(KPElement::vertex(g, r, z.sandwich->v).scaled(z.sandwich->r))}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::string out = render(x) + "\n";
    for (const auto& [d, part] : parts) out += "degree " + tuple(d) + ": " + render(part) + "\n";
    out += "zero: " + verdict + "\n";
    emit(c, out);
  }
  return c.strict && z.verdict == ZeroVerdict::Unknown ? kExitUnknown : kExitOk;
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

int cmd_fixtures(const Config& c) {
  const auto& a = c.fixture_args;
  if (a.empty()) {
    if (c.output.empty()) {
      for (const auto& g : fixtures::all()) std::cout << lower(g.name()) << "\n";
      return kExitOk;
    }
    std::filesystem::create_directories(c.output);
    for (const auto& g : fixtures::all()) {
      std::string path = (std::filesystem::path(c.output) / (lower(g.name()) + ".kg")).string();
      std::ofstream f(path);
      if (!f) throw FileError("cannot write " + path);
      f << write_kg(g);
    }
    return kExitOk;
  }
  std::string name = lower(a[0]);
  if (name == "omega") {
    if (a.size() != 3) throw UsageError("usage: kp fixtures omega <k> <m1,...,mk>");
    std::size_t k = std::stoul(a[1]);
    std::vector<long> m;
    for (const auto& part : split(a[2], ',')) m.push_back(std::stol(part));
    if (m.size() != k) throw UsageError("omega: m needs exactly k coordinates");
    emit(c, write_kg(fixtures::omega(k, Degree(m))));
    return kExitOk;
  }
  if (name == "random") {
    std::mt19937_64 rng(c.seed);
    KGraph g = c.rank == 2 ? fixtures::random_two_graph(rng, c.vertices, "R" + std::to_string(c.seed))
                           : fixtures::random_one_graph(rng, c.vertices, "G" + std::to_string(c.seed));
    emit(c, write_kg(g));
    return kExitOk;
  }
  if (a.size() != 1) throw UsageError("fixture " + a[0] + " takes no arguments");
  for (const auto& g : fixtures::all())
    if (lower(g.name()) == name) {
      emit(c, write_kg(g));
      return kExitOk;
    }
  throw UsageError("unknown fixture " + a[0]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kumjian-Pask algebras of higher-rank graphs: validation, ideals and classification"};
  app.require_subcommand(1);
  Config c;
  int (*handler)(const Config&) = nullptr;

  auto common = [&](CLI::App* sub, bool input = true) {
    if (input) sub->add_option("input", c.input, ".kg file")->required();
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", c.output, "write the result to this path");
    sub->add_option("--seed", c.seed, "seed for randomized runs");
    sub->add_flag("--strict", c.strict, "exit 2 on Unknown verdicts");
  };
  auto ringed = [&](CLI::App* sub) {
    sub->add_option("--ring", c.ring, "q | z | zmod:<n> | flags:field | flags:id | flags:zd(<r1>,<r2>)");
    sub->add_option("--bound", c.bound, "search bound B >= 1")->check(CLI::PositiveNumber);
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Config&);
  };
  const Entry entries[] = {
      {"validate", "parse and validate a presentation", cmd_validate},
      {"info", "graph summary and properties", cmd_info},
      {"hsets", "saturated hereditary vertex sets", cmd_hsets},
      {"tails", "maximal tails", cmd_tails},
      {"aperiodic", "decide aperiodicity with witnesses", cmd_aperiodic},
      {"classify", "prime and primitive classification report", cmd_classify},
      {"ideals", "prime or primitive graded basic ideals", cmd_ideals},
      {"quotient", "the quotient graph by a saturated hereditary set", cmd_quotient},
      {"desourcify", "truncated desourcification", cmd_desourcify},
      {"chain", "chain of paths behind the primitivity construction", cmd_chain},
      {"eval", "evaluate a Kumjian-Pask expression", cmd_eval},
      {"fixtures", "emit built-in fixtures", cmd_fixtures},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    std::string name = e.name;
    common(sub, name != "fixtures");
    if (name == "aperiodic" || name == "classify" || name == "ideals" || name == "desourcify" || name == "eval")
      ringed(sub);
    if (name == "ideals")
      sub->add_option("--kind", c.kind, "prime or primitive")->check(CLI::IsMember({"prime", "primitive"}));
    if (name == "quotient") sub->add_option("--hset", c.hset, "comma-separated vertex ids")->required();
    if (name == "desourcify") sub->add_option("--sidecar", c.sidecar, "write the class map as JSON here");
    if (name == "chain") sub->add_option("--vertex", c.vertex, "base vertex (default: first declared)");
    if (name == "eval") sub->add_option("expression", c.expression, "element expression")->required();
    if (name == "fixtures") {
      sub->add_option("name", c.fixture_args, "l1 | a2 | d2 | t2 | o22 | omega <k> <m> | random");
      sub->add_option("--vertices", c.vertices, "vertex bound for random graphs")->check(CLI::PositiveNumber);
      sub->add_option("--rank", c.rank, "rank of random graphs")->check(CLI::IsMember({1, 2}));
    }
    sub->callback([&handler, fn = e.fn] { handler = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return handler(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
