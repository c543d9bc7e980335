#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "grundy/closed.hpp"
#include "grundy/errors.hpp"
#include "grundy/io.hpp"
#include "grundy/moddecomp.hpp"
#include "grundy/mwis.hpp"
#include "grundy/oracle.hpp"
#include "grundy/product.hpp"
#include "grundy/split.hpp"

namespace py = pybind11;
using namespace grundy;

namespace {

py::dict xjoin_result(const XJoinSolveResult& r) {
  py::dict d;
  d["gamma"] = r.gamma;
  d["argmax_I"] = r.argmax_I.members();
  d["main_sequence"] = r.main_sequence.items();
  d["weights"] = r.diagnostics.weights;
  return d;
}

OracleOptions oracle(int max_n) {
  OracleOptions o;
  o.max_n = max_n;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grundy domination numbers of graphs and X-join products";

  auto base = py::register_exception<Error>(m, "GrundyError");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ThresholdError>(m, "ThresholdError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<IntractablePrimeError>(m, "IntractablePrimeError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("path_power", &path_power, py::arg("n"), py::arg("m") = 1);
  m.def("cycle_power", &cycle_power, py::arg("n"), py::arg("m") = 1);
  m.def("complete_graph", &complete_graph);
  m.def("edgeless_graph", &edgeless_graph);
  m.def("complement", &complement);
  m.def("lexicographic", [](const Graph& g, const Graph& h) { return lexicographic(g, h).product(); });
  m.def("xjoin", [](const Graph& g, std::vector<Graph> parts) { return xjoin(g, std::move(parts)).product(); });

  m.def("parse_graph", &parse_graph);
  m.def("format_graph", &format_graph);
  m.def("read_graph_file", &read_graph_file);

  m.def(
      "gamma_gr_exact",
      [](const Graph& g, int max_n) {
        const auto r = gamma_gr_exact(g, oracle(max_n));
        return py::make_tuple(r.gamma, r.witness.items());
      },
      py::arg("g"), py::arg("max_n") = kOracleDefaultMax,
      "Exhaustive Grundy domination number and the lexicographically smallest longest sequence.");

  m.def("verify_sequence", [](const Graph& g, const std::vector<Vertex>& seq) {
    py::dict d;
    const auto verdict = verify_sequence(g, VertexSequence(seq));
    if (const auto* c = std::get_if<FootprintCertificate>(&verdict)) {
      d["legal"] = true;
      d["private_sets"] = c->private_sets;
      d["self_set"] = c->self_set;
    } else {
      const auto& v = std::get<SequenceViolation>(verdict);
      d["legal"] = false;
      d["violation"] = v.describe();
    }
    return d;
  });

  m.def(
      "solve",
      [](const Graph& g, int prime_threshold) {
        SolveOptions o;
        o.prime_threshold = prime_threshold;
        const auto r = solve(g, o);
        py::dict d;
        d["gamma"] = r.gamma;
        d["witness"] = r.witness.items();
        d["routes"] = r.routes;
        return d;
      },
      py::arg("g"), py::arg("prime_threshold") = kOracleDefaultMax);
  m.def("decompose_json", [](const Graph& g) { return tree_to_json(decompose(g)).dump(); });

  m.def("solve_xjoin_cycle_power", [](int n, int k, const std::vector<int>& gammas) {
    return xjoin_result(solve_xjoin_cycle_power(n, k, GammaProfile(gammas)));
  });
  m.def("solve_xjoin_path_power", [](int n, int k, const std::vector<int>& gammas) {
    return xjoin_result(solve_xjoin_path_power(n, k, GammaProfile(gammas)));
  });
  m.def("solve_xjoin_split", [](const Graph& g, const std::vector<int>& gammas) {
    const auto p = split_recognize(g);
    if (!p) throw UnsupportedError("main factor is not a split graph");
    return xjoin_result(solve_xjoin_split(g, *p, GammaProfile(gammas)));
  });
  m.def(
      "lex_gamma",
      [](const std::string& kind, int n, int k, int gamma_h) {
        const auto parsed = parse_structured_kind(kind);
        if (parsed != StructuredKind::cycle_power && parsed != StructuredKind::path_power) {
          throw UnsupportedError("lex_gamma takes cycle_power or path_power");
        }
        return lex_gamma(parsed == StructuredKind::cycle_power ? PowerKind::cycle : PowerKind::path, n, k, gamma_h);
      },
      py::arg("kind"), py::arg("n"), py::arg("m"), py::arg("gamma_h"));

  m.def("split_partition", [](const Graph& g) -> py::object {
    const auto p = split_recognize(g);
    if (!p) return py::none();
    py::dict d;
    d["clique"] = p->clique;
    d["independent"] = p->independent;
    d["n_param"] = p->n_param;
    return d;
  });
  m.def("lex_gamma_split", [](const Graph& g, int gamma_h) {
    const auto p = split_recognize(g);
    if (!p) throw UnsupportedError("main factor is not a split graph");
    return lex_gamma_split(*p, gamma_h);
  });

  m.def("mwis_path_power", [](int n, int k, const WeightVector& w) {
    const auto r = mwis_path_power(n, k, w);
    return py::make_tuple(r.weight, r.set);
  });
  m.def("mwis_cycle_power", [](int n, int k, const WeightVector& w) {
    const auto r = mwis_cycle_power(n, k, w);
    return py::make_tuple(r.weight, r.set);
  });
}
