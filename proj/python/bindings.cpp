#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ust/domino.hpp"
#include "ust/error.hpp"
#include "ust/graph.hpp"
#include "ust/graph_io.hpp"
#include "ust/harmonic.hpp"
#include "ust/limits.hpp"
#include "ust/oracle.hpp"
#include "ust/sampler.hpp"
#include "ust/transfer.hpp"

namespace py = pybind11;
using namespace ust;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rational(q));
}

// Accepts int, str ("3/2", "0.25"), Fraction or float; floats go through
// their shortest repr so 0.1 means 1/10.
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) return parse_rational(py::str(py::repr(obj)).cast<std::string>());
  return parse_rational(py::str(obj).cast<std::string>());
}

Graph build_graph(std::size_t n, const std::vector<py::tuple>& edges) {
  std::vector<EdgeSpec> specs;
  for (const py::tuple& e : edges) {
    if (e.size() != 2 && e.size() != 3) throw Error(ErrorCode::invalid_argument, "edges are (u, v) or (u, v, w)");
    specs.push_back({e[0].cast<VertexId>(), e[1].cast<VertexId>(), e.size() == 3 ? to_rational(e[2]) : Rational(1)});
  }
  return Graph::build(n, specs);
}

py::list edge_list(const EdgeSet& s) {
  py::list out;
  for (EdgeId id : s) out.append(id);
  return out;
}

CylinderEvent event(const std::vector<EdgeId>& include, const std::vector<EdgeId>& exclude) {
  return {EdgeSet(include.begin(), include.end()), EdgeSet(exclude.begin(), exclude.end())};
}

}  // namespace

PYBIND11_MODULE(_ust, m) {
  m.doc() = "Uniform spanning trees: exact probabilities, sampling and limits.";
  m.attr("__version__") = UST_VERSION;

  static py::exception<Error> error(m, "UstError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args are (message, code name)
      const py::tuple args = py::make_tuple(e.what(), std::string(code_name(e.code())));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&build_graph), py::arg("vertex_count"), py::arg("edges"))
      .def_static(
          "family", [](const std::string& name, int n) { return make_family(parse_family(name), n); },
          py::arg("name"), py::arg("n"))
      .def_static("from_json", [](const std::string& text) { return parse_graph_text(text); })
      .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             py::list out;
             for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v, to_fraction(e.weight)));
             return out;
           })
      .def("is_connected", &Graph::is_connected)
      .def("__repr__", [](const Graph& g) {
        return "<Graph vertices=" + std::to_string(g.vertex_count()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("count_spanning_trees", [](const Graph& g) { return to_fraction(matrix_tree_count(g)); });
  m.def("enumerate_spanning_trees", [](const Graph& g) {
    py::list out;
    for (const EdgeSet& t : enumerate_spanning_trees(g).trees) out.append(edge_list(t));
    return out;
  });

  m.def(
      "prob",
      [](const Graph& g, const std::vector<EdgeId>& include, const std::vector<EdgeId>& exclude, bool exact) -> py::object {
        const CylinderEvent ev = event(include, exclude);
        if (exact) return to_fraction(prob_cylinder_weighted<Rational>(g, ev));
        return py::float_(prob_cylinder_weighted<double>(g, ev));
      },
      py::arg("graph"), py::arg("include") = std::vector<EdgeId>{}, py::arg("exclude") = std::vector<EdgeId>{},
      py::arg("exact") = true);
  m.def(
      "brute_prob",
      [](const Graph& g, const std::vector<EdgeId>& include, const std::vector<EdgeId>& exclude) {
        return to_fraction(brute_cylinder_prob(g, event(include, exclude)));
      },
      py::arg("graph"), py::arg("include") = std::vector<EdgeId>{}, py::arg("exclude") = std::vector<EdgeId>{});

  m.def(
      "effective_resistance",
      [](const Graph& g, VertexId a, VertexId b, bool exact) -> py::object {
        if (exact) return to_fraction(effective_resistance<Rational>(g, a, b));
        return py::float_(effective_resistance<double>(g, a, b));
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("exact") = true);
  m.def(
      "hitting_voltage",
      [](const Graph& g, VertexId a, VertexId b) {
        py::list out;
        for (const Rational& x : hitting_voltage<Rational>(g, a, b).values) out.append(to_fraction(x));
        return out;
      },
      py::arg("graph"), py::arg("source"), py::arg("sink"));
  m.def(
      "impedance_matrix",
      [](const Graph& g, const std::vector<std::pair<EdgeId, bool>>& edges) {
        std::vector<OrientedEdge> oriented;
        for (const auto& [id, forward] : edges) oriented.push_back({id, forward});
        const TransferMatrix<Rational> t = impedance_matrix<Rational>(g, oriented);
        py::list rows;
        for (std::size_t i = 0; i < t.entries.rows(); ++i) {
          py::list row;
          for (std::size_t j = 0; j < t.entries.cols(); ++j) row.append(to_fraction(t.entries(i, j)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("graph"), py::arg("edges"), "edges: list of (edge id, forward) pairs");
  m.def("torus_potential_table", &torus_potential_table, py::arg("n"));

  m.def(
      "sample_tree",
      [](const Graph& g, RngSeed seed, VertexId start) { return edge_list(aldous_broder(g, start, seed).edges()); },
      py::arg("graph"), py::arg("seed"), py::arg("start") = 0);
  m.def("sample_frequencies", &sample_frequencies, py::arg("graph"), py::arg("trials"), py::arg("seed"),
        py::arg("start") = 0, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("sample_census", &sample_tree_census, py::arg("graph"), py::arg("trials"), py::arg("seed"),
        py::arg("start") = 0, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("kn_degree_pmf", [](int n) {
    py::dict out;
    for (const auto& [k, p] : kn_degree_pmf(n)) out[py::int_(k)] = to_fraction(p);
    return out;
  });
  m.def("degree_pmf", [](const Graph& g, VertexId v) {
    py::dict out;
    for (const auto& [k, p] : degree_pmf<Rational>(g, v)) out[py::int_(k)] = to_fraction(p);
    return out;
  });
  m.def(
      "tree_map_count",
      [](const std::string& w, const std::string& t) {
        return py::int_(py::str(tree_map_count(RootedTree::parse(w), RootedTree::parse(t)).get_str()));
      },
      py::arg("host"), py::arg("pattern"));
  m.def(
      "gw_tree_moment",
      [](const std::string& t, std::uint64_t samples, RngSeed seed) {
        const MonteCarloEstimate e = gw_tree_moment(RootedTree::parse(t), samples, seed);
        return py::make_tuple(e.mean, e.std_error);
      },
      py::arg("tree"), py::arg("samples"), py::arg("seed"));
  m.def(
      "incipient_tree_moment",
      [](const std::string& t, int r, std::uint64_t samples, RngSeed seed) {
        const MonteCarloEstimate e = incipient_tree_moment(RootedTree::parse(t), r, samples, seed);
        return py::make_tuple(e.mean, e.std_error);
      },
      py::arg("tree"), py::arg("r"), py::arg("samples"), py::arg("seed"));
  m.def("entropy_finite", &spanning_tree_entropy_finite, py::arg("n"));
  m.def("entropy_integral", &spanning_tree_entropy_integral, py::arg("grid") = 1024);

  m.def(
      "temperley_matching",
      [](int m, const std::vector<EdgeId>& tree) {
        py::list out;
        for (const Domino& d : temperley_matching(m, EdgeSet(tree.begin(), tree.end())).dominoes) {
          out.append(py::make_tuple(py::make_tuple(d.a.x, d.a.y), py::make_tuple(d.b.x, d.b.y)));
        }
        return out;
      },
      py::arg("m"), py::arg("tree"));
}
