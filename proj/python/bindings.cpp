#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kpalg/classifier.hpp"
#include "kpalg/desourcify.hpp"
#include "kpalg/fixtures.hpp"
#include "kpalg/kg_format.hpp"
#include "kpalg/kp_algebra.hpp"

namespace py = pybind11;
using namespace kpalg;

namespace {

using Sets = std::vector<std::vector<std::string>>;

Sets named(const KGraph& g, const std::vector<VertexSet>& sets) {
  Sets out;
  for (const auto& h : sets) out.push_back(names(g, h));
  return out;
}

py::dict aperiodicity(const KGraph& g, long bound) {
  long b = bound > 0 ? bound : default_aperiodicity_bound(g);
  AperiodicityResult r = is_aperiodic(g, b);
  py::dict d;
  d["verdict"] = r.verdict == AperiodicityVerdict::Aperiodic  ? "aperiodic"
                 : r.verdict == AperiodicityVerdict::Periodic ? "periodic"
                                                              : "unknown";
  d["bound"] = b;
  if (r.witness)
    d["witness"] = py::make_tuple(g.vertex_name(r.witness->vertex), r.witness->m.coords(), r.witness->n.coords());
  else
    d["witness"] = py::none();
  return d;
}

py::dict evaluate(const KGraph& g, const std::string& ring, const std::string& expr) {
  auto gp = std::make_shared<const KGraph>(g);
  KPElement x = parse_expression(gp, Ring::parse(ring), expr);
  ZeroTest z = is_zero(x);
  py::dict comps;
  for (const auto& [d, part] : x.degree_components()) comps[py::tuple(py::cast(d.coords()))] = render(part);
  py::dict out;
  out["element"] = render(x);
  out["components"] = comps;
  out["zero"] = z.verdict == ZeroVerdict::Zero ? "zero" : z.verdict == ZeroVerdict::Nonzero ? "nonzero" : "unknown";
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kumjian-Pask algebras of higher-rank graphs";
  py::register_exception<Error>(m, "KPError");

  py::class_<KGraph>(m, "Graph")
      .def_property_readonly("name", &KGraph::name)
      .def_property_readonly("rank", &KGraph::rank)
      .def_property_readonly("vertices",
                             [](const KGraph& g) {
                               std::vector<std::string> out;
                               for (VertexId v : g.vertices()) out.push_back(g.vertex_name(v));
                               return out;
                             })
      .def_property_readonly("num_edges", &KGraph::num_edges)
      .def_property_readonly("num_squares", [](const KGraph& g) { return g.squares().size(); })
      .def_property_readonly("no_sources", &KGraph::has_no_sources)
      .def_property_readonly("locally_convex", &KGraph::is_locally_convex)
      .def("to_kg", &write_kg)
      .def("__repr__", [](const KGraph& g) {
        return "<Graph " + g.name() + " k=" + std::to_string(g.rank()) + " |V|=" + std::to_string(g.num_vertices()) +
               ">";
      });

  m.def("parse_kg", &parse_kg, py::arg("text"));
  m.def("load_kg", &load_kg, py::arg("path"));
  m.def("fixture", &fixtures::by_name, py::arg("name"), "One of L1, A2, D2, T2, O22.");
  m.def("omega", [](std::size_t k, std::vector<long> top) { return fixtures::omega(k, Degree(std::move(top))); },
        py::arg("k"), py::arg("m"));

  m.def("sat_her", [](const KGraph& g) { return named(g, enumerate_sat_her(g)); });
  m.def("maximal_tails", [](const KGraph& g) {
    std::vector<VertexSet> tails;
    for (const auto& h : maximal_tail_complements(g)) tails.push_back(complement(g, h));
    return named(g, tails);
  });
  m.def("check_mt3", [](const KGraph& g) -> std::optional<std::pair<std::string, std::string>> {
    auto w = check_mt3(g);
    if (!w) return std::nullopt;
    return std::make_pair(g.vertex_name(w->first), g.vertex_name(w->second));
  });
  m.def("is_aperiodic", &aperiodicity, py::arg("graph"), py::arg("bound") = 0);

  m.def(
      "prime_ideals", [](const KGraph& g, const std::string& ring) { return named(g, prime_graded_ideals(g, Ring::parse(ring)).sets()); },
      py::arg("graph"), py::arg("ring") = "q");
  m.def(
      "primitive_ideals",
      [](const KGraph& g, const std::string& ring, long bound) {
        return named(g, primitive_graded_ideals(g, Ring::parse(ring), bound).sets());
      },
      py::arg("graph"), py::arg("ring") = "q", py::arg("bound") = 0);
  m.def(
      "quotient",
      [](const KGraph& g, const std::vector<std::string>& h) { return quotient(g, parse_vertex_set(g, h)); },
      py::arg("graph"), py::arg("hset"));
  m.def(
      "desourcify",
      [](const KGraph& g, long bound) {
        Truncation t = desourcify_truncated(g, bound);
        return py::make_tuple(t.graph, sidecar_json(g, t));
      },
      py::arg("graph"), py::arg("bound"));
  m.def(
      "primitivity_chain",
      [](const KGraph& g, const std::string& v) {
        std::vector<std::string> out;
        for (const Path& p : primitivity_chain(g, g.vertex(v))) out.push_back(g.render(p));
        return out;
      },
      py::arg("graph"), py::arg("vertex"));
  m.def(
      "classify_json",
      [](const KGraph& g, const std::string& ring, long bound) { return to_json(classify(g, Ring::parse(ring), bound)); },
      py::arg("graph"), py::arg("ring") = "q", py::arg("bound") = 0);
  m.def(
      "classify_text",
      [](const KGraph& g, const std::string& ring, long bound) { return to_text(classify(g, Ring::parse(ring), bound)); },
      py::arg("graph"), py::arg("ring") = "q", py::arg("bound") = 0);
  m.def("evaluate", &evaluate, py::arg("graph"), py::arg("ring"), py::arg("expression"));
}
