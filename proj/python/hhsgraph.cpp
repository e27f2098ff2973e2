#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hhs/errors.hpp"
#include "hhs/generators.hpp"
#include "hhs/graph_io.hpp"
#include "hhs/hyperplanes.hpp"
#include "hhs/metrics.hpp"
#include "hhs/quasi_median.hpp"
#include "hhs/report.hpp"

namespace py = pybind11;
using namespace hhs;

namespace {

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(n, es, std::move(labels));
}

std::vector<std::pair<std::string, std::string>> labelled_edges(const Graph& g, const std::vector<int>& ids) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int e : ids) out.push_back({g.label(g.edges()[e].u), g.label(g.edges()[e].v)});
  return out;
}

RunConfig make_config(const std::string& pipeline, std::uint64_t seed, const std::map<std::string, std::string>& bounds) {
  RunConfig cfg;
  cfg.input_name = "python";
  cfg.pipeline = pipeline_from_name(pipeline);
  cfg.check.seed = seed;
  for (const auto& [k, v] : bounds) cfg.bounds[k] = parse_ratio(v);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(hhsgraph, m) {
  m.doc() = "Hierarchy structures and exact coarse-geometry checks on finite graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_edges), py::arg("order"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
      .def_static("from_json", &parse_json_graph)
      .def_static("from_edgelist", &parse_edgelist_string)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("labels", &Graph::labels)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (auto e : g.edges()) out.push_back({e.u, e.v});
                               return out;
                             })
      .def("adjacent", &Graph::adjacent)
      .def("to_json", [](const Graph& g) { return to_json_graph(g); })
      .def("to_dot", [](const Graph& g) { return to_dot(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("hypercube", &gen::hypercube);
  m.def("hamming", &gen::hamming);
  m.def("path", &gen::path);
  m.def("cycle", &gen::cycle);
  m.def("complete", &gen::complete);
  m.def("glued_squares", &gen::glued_squares);
  m.def("random_tree", &gen::random_tree, py::arg("n"), py::arg("seed") = 1);
  m.def("cartesian_product", &gen::cartesian_product);

  m.def("is_quasi_median", [](const Graph& g) {
    auto r = is_quasi_median(g);
    py::dict d;
    d["is_quasi_median"] = r.is_quasi_median;
    d["failure"] = to_string(r.failure);
    std::vector<std::string> w;
    for (int v : r.witness) w.push_back(g.label(v));
    d["witness"] = w;
    return d;
  });
  m.def("hyperplanes", [](const Graph& g) {
    HyperplaneSystem hs(g);
    std::vector<std::vector<std::pair<std::string, std::string>>> out;
    for (int h = 0; h < hs.count(); ++h) out.push_back(labelled_edges(g, hs.dual_edges(h)));
    return out;
  });
  m.def("crossing_graph", [](const Graph& g) { return HyperplaneSystem(g).crossing_graph(); });
  m.def("contact_graph", [](const Graph& g) { return HyperplaneSystem(g).contact_graph(); });
  m.def("gromov_delta", [](const Graph& g) { return gromov_delta(g).delta().value(); });
  m.def("bottleneck_delta", [](const Graph& g) { return bottleneck_delta(g).delta; });
  m.def(
      "factor_system",
      [](const Graph& g, const std::string& pipeline) {
        auto cfg = make_config(pipeline, 1, {});
        return loads(factor_system_json(build_bundle(g, cfg).ph.system()));
      },
      py::arg("graph"), py::arg("pipeline") = "qm");
  m.def(
      "augmented_graph",
      [](const Graph& g, const std::string& pipeline) {
        return loads(build_bundle(g, make_config(pipeline, 1, {})).ph.augmented().to_json());
      },
      py::arg("graph"), py::arg("pipeline") = "qm");
  m.def(
      "full_report",
      [](const Graph& g, const std::string& pipeline, std::uint64_t seed,
         const std::map<std::string, std::string>& bounds) {
        return loads(report_json(full_report(g, make_config(pipeline, seed, bounds))));
      },
      py::arg("graph"), py::arg("pipeline") = "qm", py::arg("seed") = 1,
      py::arg("bounds") = std::map<std::string, std::string>{});
}
