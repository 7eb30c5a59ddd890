#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rp2/admissibility.hpp"
#include "rp2/errors.hpp"
#include "rp2/generators.hpp"
#include "rp2/json_io.hpp"
#include "rp2/rp2_builder.hpp"

namespace py = pybind11;
using namespace rp2;

namespace {

std::vector<Triple> triples(const std::vector<std::array<Vertex, 3>>& list) {
  std::vector<Triple> out;
  out.reserve(list.size());
  for (const auto& t : list) out.emplace_back(t[0], t[1], t[2]);
  return out;
}

std::vector<std::array<Vertex, 3>> as_lists(const std::vector<Triple>& ts) {
  std::vector<std::array<Vertex, 3>> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.v);
  return out;
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Hypergraph3>(m, "Hypergraph")
      .def(py::init([](std::size_t n, const std::vector<std::array<Vertex, 3>>& edges) {
             return Hypergraph3(n, triples(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_hypergraph(text); })
      .def_property_readonly("n", &Hypergraph3::n)
      .def_property_readonly("edges", [](const Hypergraph3& h) { return as_lists(h.edges()); })
      .def("__len__", &Hypergraph3::edge_count)
      .def("__contains__", [](const Hypergraph3& h, std::array<Vertex, 3> t) { return h.contains(t[0], t[1], t[2]); })
      .def("__str__", &serialize_hypergraph)
      .def("__eq__", [](const Hypergraph3& a, const Hypergraph3& b) { return a == b; });

  m.def(
      "classify",
      [](const std::vector<std::array<Vertex, 3>>& facets) { return to_py(report_json(classify(Complex2(triples(facets))))); },
      py::arg("facets"));

  m.def(
      "find_rp2",
      [](const Hypergraph3& h, const std::string& config, std::uint64_t seed, std::size_t threads) -> py::object {
        SearchConfig cfg;
        cfg.apply_key_values(config);
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.validate();
        SearchResult res;
        {
          py::gil_scoped_release release;
          res = find_rp2(h, cfg);
        }
        if (!res.certificate) return py::none();
        return to_py(certificate_json(*res.certificate));
      },
      py::arg("h"), py::arg("config") = "", py::arg("seed") = 1, py::arg("threads") = 1);

  m.def(
      "find_sphere",
      [](const Hypergraph3& h, std::size_t budget, std::uint64_t seed) -> py::object {
        auto cert = find_sphere(h, budget, seed);
        if (!cert) return py::none();
        return to_py(sphere_json(*cert));
      },
      py::arg("h"), py::arg("budget") = 1000, py::arg("seed") = 1);

  m.def(
      "admissibility",
      [](const std::vector<std::pair<Vertex, Vertex>>& edges, std::size_t n, Vertex x, Vertex y, double p, double epsilon,
         std::size_t k, std::size_t samples, std::uint64_t seed) {
        std::vector<Edge> es;
        for (auto [a, b] : edges) es.emplace_back(a, b);
        AdmissibilityParams ap;
        ap.p = p;
        ap.epsilon = epsilon;
        ap.k = k;
        ap.mc_samples = samples;
        ap.validate();
        return to_py(estimate_json(assess_edge(Graph::complete_vertex_set(n, es), x, y, ap, seed)));
      },
      py::arg("edges"), py::arg("n"), py::arg("x"), py::arg("y"), py::arg("p") = 0.5, py::arg("epsilon") = 0.1,
      py::arg("k") = 1, py::arg("samples") = 10000, py::arg("seed") = 1);

  m.def("random_hypergraph", &random_hypergraph, py::arg("n"), py::arg("m"), py::arg("seed") = 1);
  m.def("complete_hypergraph", &complete_hypergraph, py::arg("n"));
  m.def("fixture_names", &fixture_names);
  m.def(
      "fixture",
      [](const std::string& name) {
        const auto f = fixture(name);
        return py::make_tuple(as_lists(f.facets.facets()), f.expected);
      },
      py::arg("name"));
}
