#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hamswitch/analysis.hpp"
#include "hamswitch/errors.hpp"
#include "hamswitch/families.hpp"
#include "hamswitch/io.hpp"
#include "hamswitch/js_chain.hpp"
#include "hamswitch/monotone.hpp"
#include "hamswitch/reconfigure.hpp"
#include "hamswitch/reproduce.hpp"
#include "hamswitch/switch_chain.hpp"

namespace py = pybind11;
using namespace hamswitch;

namespace {

using PyEdges = std::vector<std::pair<int, int>>;

EdgeList to_edges(const PyEdges& e) {
  EdgeList out;
  out.reserve(e.size());
  for (auto [u, v] : e) out.emplace_back(u, v);
  return canonical(std::move(out));
}

PyEdges from_edges(const EdgeList& e) {
  PyEdges out;
  out.reserve(e.size());
  for (const Edge& x : e) out.emplace_back(x.u, x.v);
  return out;
}

std::vector<PyEdges> from_lists(const std::vector<EdgeList>& v) {
  std::vector<PyEdges> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(from_edges(e));
  return out;
}

// Report structs cross as JSON text and are decoded on the Python side.
std::string dump(const Json& j) { return j.dump(); }

TargetClass target(const std::string& s) { return parse_target_class(s); }

}  // namespace

PYBIND11_MODULE(_hamswitch, m) {
  m.doc() = "Switch chains on Hamiltonian cycles and 2-factors";
  m.attr("__version__") = HAMSWITCH_VERSION;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ReconstructionError>(m, "ReconstructionError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<InvalidSwitch>(m, "InvalidSwitch", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const PyEdges& e, std::optional<int> part_a) { return Graph(n, to_edges(e), part_a); }),
           py::arg("n"), py::arg("edges"), py::arg("part_a") = py::none())
      .def_static("complete", &Graph::complete)
      .def_static("complete_bipartite", &Graph::complete_bipartite)
      .def_static("cycle", &Graph::cycle)
      .def_static("parse", [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
      })
      .def("dumps", [](const Graph& g) {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
      })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges", [](const Graph& g) { return from_edges(g.edges()); })
      .def_property_readonly("bipartite", &Graph::bipartite)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("min_degree", [](const Graph& g) { return min_degree(g); })
      .def("classify", [](const Graph& g, const PyEdges& e) { return to_string(classify(g, to_edges(e))); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("enumerate", [](const Graph& g, const std::string& cls, std::size_t cap) {
    return from_lists(enumerate(g, parse_enum_class(cls), cap));
  }, py::arg("graph"), py::arg("cls") = "ham", py::arg("cap") = kDefaultEnumCap);

  m.def("run_chain", [](const Graph& g, const PyEdges& start, std::int64_t steps, int k, const std::string& cls,
                        bool lazy, std::uint64_t seed) {
    ChainConfig cfg;
    cfg.k = k;
    cfg.target = target(cls);
    cfg.lazy = lazy;
    cfg.seed = seed;
    cfg.validate();
    const Trajectory t = run_chain(g, cfg, to_edges(start), steps);
    return py::make_tuple(from_edges(t.final_state), dump(to_json(t)));
  }, py::arg("graph"), py::arg("start"), py::arg("steps"), py::arg("k") = 2, py::arg("cls") = "ham",
     py::arg("lazy") = false, py::arg("seed") = 0);

  m.def("transition_probability", [](const Graph& g, const PyEdges& x, const PyEdges& y, int k, const std::string& cls,
                                     bool lazy) {
    ChainConfig cfg;
    cfg.k = k;
    cfg.target = target(cls);
    cfg.lazy = lazy;
    return to_string(transition_probability(to_edges(x), to_edges(y), cfg, g));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k") = 2, py::arg("cls") = "ham", py::arg("lazy") = false);

  m.def("transform", [](const Graph& g, const PyEdges& from, const PyEdges& to, const std::string& cls, bool bipartite,
                        bool relaxed) {
    ReconfigureOptions opt;
    opt.bipartite = bipartite;
    opt.enforce_degree = !relaxed;
    const TargetClass c = target(cls);
    const TransformTrace tr =
        c == TargetClass::HamCycles
            ? transform_ham(HamCycle::from_edges(g, to_edges(from)), HamCycle::from_edges(g, to_edges(to)), g, opt)
            : transform_2factor(TwoFactor::from_edges(g, to_edges(from)), TwoFactor::from_edges(g, to_edges(to)), g,
                                opt);
    verify_trace(tr, g, c, c == TargetClass::HamCycles ? 10 : 4);
    return dump(to_json(tr));
  }, py::arg("graph"), py::arg("start"), py::arg("target"), py::arg("cls") = "ham", py::arg("bipartite") = false,
     py::arg("relaxed") = false);

  m.def("random_dense_graph", &random_dense_graph, py::arg("n"), py::arg("delta"), py::arg("seed"),
        py::arg("bipartite") = false);
  m.def("random_ham_cycle", [](const Graph& g, std::uint64_t seed) { return from_edges(random_ham_cycle(g, seed).edges()); });
  m.def("random_two_factor", [](const Graph& g, std::uint64_t seed, int moves) {
    return from_edges(random_two_factor(g, seed, moves).edges());
  }, py::arg("graph"), py::arg("seed"), py::arg("moves") = 20);

  m.def("parity_example", [](int m_) {
    const ParityExample ex = build_parity_example(m_);
    return py::make_tuple(ex.cg.graph, from_edges(ex.h1.edges()), from_edges(ex.h2.edges()));
  });
  m.def("gadget", [](int ell) { return build_gadget_x(ell).graph; });
  m.def("locked_example", [](int k, std::optional<int> n) {
    return build_locked_example(k, n.value_or(locked_default_n(k))).graph;
  }, py::arg("k"), py::arg("n") = py::none());
  m.def("staircase", [](int n) { return build_staircase(n).graph(); });

  m.def("monotone_embed", [](const Graph& g, const PyEdges& f) {
    const auto mg = validate_monotone(g);
    if (!mg) throw PreconditionError("graph is not monotone");
    const PhiResult r = phi_record(TwoFactor::from_edges(g, to_edges(f)), *mg);
    return py::make_tuple(from_edges(r.join.cycle), dump(to_json(r)));
  });

  m.def("js_exact", [](const Graph& g, std::size_t cap) { return dump(to_json(js_exact(g, cap))); }, py::arg("graph"),
        py::arg("cap") = kDefaultEnumCap);

  m.def("mixing_exact", [](const Graph& g, int k, const std::string& cls, bool lazy, const std::vector<double>& eps,
                           std::size_t cap) {
    ChainConfig cfg;
    cfg.k = k;
    cfg.target = target(cls);
    cfg.lazy = lazy;
    const StateGraph sg = build_state_graph(g, cfg.target, k, cap);
    return dump(to_json(mixing_exact(sg, g, cfg, eps, cap)));
  }, py::arg("graph"), py::arg("k") = 2, py::arg("cls") = "ham", py::arg("lazy") = true,
     py::arg("eps") = std::vector<double>{0.25}, py::arg("cap") = kDefaultMatrixCap);

  m.def("reproduce_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : reproduce_registry()) ids.push_back(e.id);
    return ids;
  });
  m.def("reproduce", [](const std::string& id, std::uint64_t seed, bool quick) {
    ReproduceOptions opt;
    opt.seed = seed;
    opt.quick = quick;
    const ReproduceReport r = reproduce(id, opt);
    return py::make_tuple(r.pass, dump(r.details));
  }, py::arg("id"), py::arg("seed") = ReproduceOptions{}.seed, py::arg("quick") = true);
}
