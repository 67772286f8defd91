#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gem/canonical.hpp"
#include "gem/catalog.hpp"
#include "gem/cli.hpp"
#include "gem/io.hpp"
#include "gem/moves.hpp"
#include "gem/tensor_model.hpp"

namespace py = pybind11;
using namespace gem;

namespace {

ColoredGraph parse_graph(const std::string& text) { return ColoredGraph(parse_graph_text(text)); }

// Laurent coefficients as exponent -> Python int (via decimal strings, no overflow).
py::dict laurent_dict(const LaurentPolynomial& poly) {
  py::dict out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& [e, c] : poly.terms()) out[py::int_(e)] = to_int(c.str());
  return out;
}

Bubble bubble_arg(const std::string& json_text) { return bubble_from_json(nlohmann::json::parse(json_text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Colored graphs, crystallizations and tensor-model Gaussian means";

  auto base = py::register_exception<Error>(m, "GemError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NotABubble>(m, "NotABubble", base.ptr());

  py::class_<ColoredGraph>(m, "Graph")
      .def(py::init([](int d, std::vector<std::vector<int>> colors) { return ColoredGraph(d, std::move(colors)); }),
           py::arg("dimension"), py::arg("colors"))
      .def_static("parse", &parse_graph, py::arg("text"), "GEM-JSON or a census line")
      .def_static("standard", &ColoredGraph::standard, py::arg("dimension"))
      .def_property_readonly("dimension", &ColoredGraph::dimension)
      .def_property_readonly("order", &ColoredGraph::order)
      .def_property_readonly("colors", &ColoredGraph::matchings)
      .def("census_line", [](const ColoredGraph& g) { return to_census_line(g); })
      .def("gem_json", [](const ColoredGraph& g) { return to_gem_json(g).dump(); })
      .def("canonical", [](const ColoredGraph& g) { return canonical_form(g).text(); })
      .def("gurau_degree_x2", [](const ColoredGraph& g) { return gurau_degree(g).gurau_degree_x2; })
      .def("regular_genus_x2", [](const ColoredGraph& g) { return gurau_degree(g).regular_genus_x2; })
      .def("euler_characteristic", &euler_characteristic)
      .def("automorphisms", [](const ColoredGraph& g) { return automorphism_count(g); })
      .def("certify_sphere", [](const ColoredGraph& g) { return std::string(to_string(certify_sphere(g).status)); })
      .def("certify_gem", [](const ColoredGraph& g) { return std::string(to_string(certify_gem(g).status)); })
      .def("info_json", [](const ColoredGraph& g) { return info_json(g).dump(); })
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) { return "Graph('" + to_census_line(g) + "')"; });

  m.def("connected_sum", &connected_sum, py::arg("a"), py::arg("va"), py::arg("b"), py::arg("vb"));
  m.def("isomorphic", &isomorphic);

  m.def(
      "enumerate_json",
      [](int dimension, int max_order, bool bipartite, bool crystallizations) {
        EnumerateOptions o;
        o.dimension = dimension;
        o.max_order = max_order;
        o.bipartite_only = bipartite;
        o.crystallizations_only = crystallizations;
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        {
          py::gil_scoped_release release;
          for (const auto& r : enumerate(o)) out.push_back(record_to_json(r));
        }
        return out.dump();
      },
      py::arg("dimension"), py::arg("max_order"), py::arg("bipartite") = false, py::arg("crystallizations") = false);

  m.def("quadratic_bubble_json", [](int d) { return bubble_to_json(quadratic_bubble(d)).dump(); }, py::arg("d"));
  m.def("quartic_bubble_json", [](int d, int m) { return bubble_to_json(quartic_bubble(d, m)).dump(); }, py::arg("d"),
        py::arg("m") = 1);
  m.def("gaussian_mean", [](const std::string& bubble) { return laurent_dict(gaussian_mean(bubble_arg(bubble))); },
        py::arg("bubble_json"));
  m.def("gaussian_mean_text", [](const std::string& bubble) { return gaussian_mean(bubble_arg(bubble)).str(); },
        py::arg("bubble_json"));
  m.def(
      "literal_mean",
      [](const std::string& bubble, int n) {
        const Rational r = literal_mean(bubble_arg(bubble), n);
        return py::make_tuple(py::module_::import("builtins").attr("int")(numerator(r).str()),
                              py::module_::import("builtins").attr("int")(denominator(r).str()));
      },
      py::arg("bubble_json"), py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
