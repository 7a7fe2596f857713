#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nearplanar/apicity.hpp"
#include "nearplanar/classify.hpp"
#include "nearplanar/constructions.hpp"
#include "nearplanar/planarity.hpp"
#include "nearplanar/rigidity.hpp"
#include "nearplanar/sparsity.hpp"

namespace py = pybind11;
using namespace nearplanar;

namespace {

RandomConfig random_config(std::uint64_t seed, int trials, const std::vector<std::uint64_t>& primes) {
  RandomConfig rc;
  rc.seed = seed;
  rc.trials = trials;
  if (!primes.empty()) rc.primes = primes;
  return rc;
}

std::vector<std::pair<int, int>> edge_pairs(const EdgeSet& es) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : es) out.emplace_back(e.u, e.v);
  return out;
}

EdgeSet to_edges(const std::vector<std::pair<int, int>>& pairs) {
  EdgeSet out;
  for (auto [u, v] : pairs) out.push_back(Edge{u, v});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rigidity and apicity of near-planar graphs (C++ core)";

  py::register_exception<Error>(m, "NearplanarError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, to_edges(edges)); }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " " + write_graph6(g) + ">";
      });

  m.def("enumerate_connected", &enumerate_connected, py::arg("n"));
  m.def("canonical_graph6", [](const Graph& g) { return canonical_code(g).bytes; });
  m.def("isomorphic", &isomorphic);
  m.def("connectivity", &connectivity);

  m.def("is_planar", [](const Graph& g) { return planar(g); });
  m.def("kuratowski_witness", [](const Graph& g) -> std::optional<std::vector<std::pair<int, int>>> {
    const auto r = is_planar(g);
    if (!r.witness) return std::nullopt;
    return edge_pairs(*r.witness);
  });
  m.def("is_triangulation", &is_triangulation);

  m.def("check_sparsity", [](const Graph& g, int k, int l) {
    const auto v = check_sparsity(g, {k, l});
    py::dict d;
    d["sparse"] = v.sparse;
    d["tight"] = v.tight;
    d["violating_set"] = v.violating_set ? py::cast(v.violating_set->to_vector()) : py::none();
    return d;
  }, py::arg("g"), py::arg("k") = 3, py::arg("l") = 6);
  m.def("is_sparse_36", &is_sparse_36);

  m.def("apicity_profile", [](const Graph& g) {
    const ApicityProfile p = apicity_profile(g);
    return py::make_tuple(p.vertex.value, p.edge.value, p.critical_vertex, p.critical_edge);
  });
  m.def("vertex_apicity", [](const Graph& g) { return vertex_apicity(g).value; });
  m.def("edge_apicity", [](const Graph& g) { return edge_apicity(g).value; });

  m.def("generic_rank", [](const Graph& g, int d, std::uint64_t seed, int trials, const std::vector<std::uint64_t>& primes) {
    const RankResult r = generic_rank(g, d, random_config(seed, trials, primes));
    py::dict out;
    out["rank"] = r.rank;
    out["stable"] = r.stable;
    out["rank_per_prime"] = r.rank_per_prime;
    out["failure_bound"] = r.failure_bound;
    return out;
  }, py::arg("g"), py::arg("d") = 3, py::arg("seed") = 0, py::arg("trials") = 3,
     py::arg("primes") = std::vector<std::uint64_t>{});
  m.def("is_independent", [](const Graph& g, int d) { return is_independent(g, d); }, py::arg("g"), py::arg("d") = 3);
  m.def("is_rigid", [](const Graph& g, int d) { return is_rigid(g, d); }, py::arg("g"), py::arg("d") = 3);
  m.def("is_circuit", [](const Graph& g, int d) { return is_circuit(g, d); }, py::arg("g"), py::arg("d") = 3);
  m.def("unique_circuit", [](const Graph& g, int d) { return edge_pairs(unique_circuit(g, d)); }, py::arg("g"),
        py::arg("d") = 3);
  m.def("globally_rigid_verdict", [](const Graph& g, int d) {
    const auto r = is_globally_rigid_randomized(g, d);
    return py::make_tuple(to_string(r.verdict), r.rule);
  }, py::arg("g"), py::arg("d") = 3);
  m.def("gcr", [](const Graph& g) { return gcr(g); });

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name, const std::vector<int>& params) { return catalog(name, params); },
        py::arg("name"), py::arg("params") = std::vector<int>{});

  m.def("classify_json", [](const Graph& g, std::uint64_t seed) {
    ClassifyConfig cfg;
    cfg.random.seed = seed;
    return classify(g, cfg).to_json();
  }, py::arg("g"), py::arg("seed") = 0);
  m.def("rule_ids", [] {
    std::vector<std::string> out;
    for (const auto& r : rule_catalog()) out.push_back(r.id);
    return out;
  });
  m.def("verify_json", [](const std::string& rule, const std::vector<Graph>& census, int jobs) {
    RunOptions opt;
    opt.jobs = jobs;
    py::gil_scoped_release release;
    return verify_theorem(rule, census, "python census", opt).to_json();
  }, py::arg("rule"), py::arg("census"), py::arg("jobs") = 1);
  m.def("tabulate", [](int table, const std::vector<Graph>& census, int n, int jobs) {
    RunOptions opt;
    opt.jobs = jobs;
    Table t;
    {
      py::gil_scoped_release release;
      t = tabulate(table, census, n, opt);
    }
    return py::make_tuple(t.columns, t.counts);
  }, py::arg("table"), py::arg("census"), py::arg("n"), py::arg("jobs") = 1);
}
