#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torfold/suites.hpp"

namespace py = pybind11;
using namespace torfold;
using io::json;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return io::parse(o.cast<std::string>());
  return io::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<std::string> rendered(const std::vector<LaurentPoly>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_torfold, m) {
  m.doc() = "Periodic quivers, orbit-mutation, cluster-level folding and annulus triangulations.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", error);
  py::register_exception<MutationAtFrozenError>(m, "MutationAtFrozenError", error);
  py::register_exception<OverflowError>(m, "OverflowError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<InexactDivisionError>(m, "InexactDivisionError", error);
  py::register_exception<FoldingError>(m, "FoldingError", error);
  py::register_exception<FoldabilityViolationError>(m, "FoldabilityViolationError", error);
  py::register_exception<UnflippableError>(m, "UnflippableError", error);

  py::class_<IceQuiver>(m, "IceQuiver")
      .def(py::init([](const py::object& o) { return io::ice_quiver_from_json(from_py(o)); }), py::arg("data"))
      .def("to_dict", [](const IceQuiver& q) { return to_py(io::to_json(q)); })
      .def("mutate", [](const IceQuiver& q, const std::string& z) { return mutate(q, z); })
      .def("__len__", &IceQuiver::size)
      .def("__eq__", [](const IceQuiver& a, const IceQuiver& b) { return a == b; });

  py::class_<PeriodicQuiver>(m, "PeriodicQuiver")
      .def(py::init([](const py::object& o) { return io::periodic_quiver_from_json(from_py(o)); }), py::arg("data"))
      .def_property_readonly("period", &PeriodicQuiver::period)
      .def("to_dict", [](const PeriodicQuiver& q) { return to_py(io::to_json(q)); })
      .def("orbit_mutate", [](const PeriodicQuiver& q, int K) { return orbit_mutate(q, K); })
      .def("fold", [](const PeriodicQuiver& q) { return fold(q); })
      .def("admissibility", [](const PeriodicQuiver& q) {
        auto r = admissibility_check(q);
        return to_py({{"admissible", r.admissible}, {"violations", io::to_json(r.violations)}});
      })
      .def("foldability_search", [](const PeriodicQuiver& q, int depth) {
        return to_py(io::to_json(foldability_search(q, depth)));
      }, py::arg("max_depth"))
      .def("__len__", &PeriodicQuiver::size)
      .def("__eq__", [](const PeriodicQuiver& a, const PeriodicQuiver& b) { return a == b; });

  m.def("build_gamma_infinity", &build_gamma_infinity, py::arg("n"));
  m.def("build_AQ", &build_AQ, py::arg("cycle"));
  m.def("cycle_quiver", &cycle_quiver, py::arg("orientation"));

  py::class_<OrbitSeed>(m, "OrbitSeed")
      .def(py::init([](const PeriodicQuiver& q) { return initial_orbit_seed(q); }), py::arg("quiver"))
      .def("mutate", [](const OrbitSeed& s, int K) { return orbit_mutate_seed(s, K); })
      .def_property_readonly("quiver", [](const OrbitSeed& s) { return s.pquiver; })
      .def_property_readonly("history", [](const OrbitSeed& s) { return s.history; })
      .def_property_readonly("cluster", [](const OrbitSeed& s) { return rendered(s.cluster); })
      .def("fold", [](const OrbitSeed& s) {
        Seed f = fold_orbit_seed(s);
        json j = io::to_json(f);
        j["cluster_rendered"] = rendered(f.cluster);
        return to_py(j);
      })
      .def("to_dict", [](const OrbitSeed& s) { return to_py(io::to_json(s)); });

  m.def("folded_seed", [](const PeriodicQuiver& q, const std::vector<int>& seq) {
    Seed s = initial_seed(fold(q));
    for (int k : seq) s = mutate_seed(s, std::to_string(k));
    return rendered(s.cluster);
  }, py::arg("quiver"), py::arg("sequence"), "Cluster of the folded quiver mutated along the sequence.");

  m.def("cluster_variable", [](int i, int j, bool negative) {
    RootInterval r = negative ? RootInterval::negative_simple(i) : RootInterval::positive(i, j);
    return to_string(find_cluster_variable(gamma_window(r.i - 2, r.j + 2), r));
  }, py::arg("i"), py::arg("j"), py::arg("negative") = false);

  m.def("verify_exchange_identities", [](int n, const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (const auto& r : verify_exchange_identities(n, pairs)) out.push_back(io::to_json(r));
    return to_py(out);
  }, py::arg("n"), py::arg("pairs"));

  py::class_<SigmaTriangulation>(m, "Triangulation")
      .def(py::init([](const py::object& o) { return io::triangulation_from_json(from_py(o)); }), py::arg("data"))
      .def_static("default", [](int k1, int k2) { return default_triangulation(k1, k2); })
      .def_static("from_cycle", [](const IceQuiver& q) { return default_triangulation(q); })
      .def("flip", [](const SigmaTriangulation& t, int k) { return flip(t, k); })
      .def("quiver", [](const SigmaTriangulation& t) { return quiver_of(t); })
      .def("check", [](const SigmaTriangulation& t) {
        auto r = check_no_virtual_2cycles(t);
        return to_py({{"quiver_admissible", r.quiver_admissible},
                      {"geometry_clear", r.geometry_clear},
                      {"agree", r.agree},
                      {"findings", r.geometric_findings}});
      })
      .def("to_dict", [](const SigmaTriangulation& t) { return to_py(io::to_json(t)); })
      .def("__len__", &SigmaTriangulation::size)
      .def("__eq__", [](const SigmaTriangulation& a, const SigmaTriangulation& b) { return a == b; });

  py::class_<YMonomial>(m, "YMonomial")
      .def_static("y", &YMonomial::y, py::arg("site"), py::arg("q"), py::arg("modulus") = 0, py::arg("e") = 1)
      .def_static("A", &a_monomial, py::arg("site"), py::arg("q"), py::arg("modulus") = 0)
      .def("__mul__", [](const YMonomial& a, const YMonomial& b) { return a * b; })
      .def("inverse", &YMonomial::inverse)
      .def("fold", &phi_fold, py::arg("n"))
      .def("d_grade", &d_grade)
      .def("__str__", [](const YMonomial& a) { return to_string(a); })
      .def("__eq__", [](const YMonomial& a, const YMonomial& b) { return a == b; });

  m.def("nakajima_leq", [](const YMonomial& a, const YMonomial& b) {
    auto r = nakajima_leq(a, b);
    for (auto& kv : r.certificate) kv.second = -kv.second;
    return py::make_tuple(r.leq, certificate_to_string(r.certificate));
  }, "(a <= b, the factor a/b written as a product of A-monomials)");

  m.def("run_suite", [](const std::string& suite, int n, int depth, int trials, std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.n = n;
    cfg.depth = depth;
    cfg.trials = trials;
    cfg.seed = seed;
    SuiteResult r = run_suite(cfg);
    return py::make_tuple(r.passed, to_py(r.report));
  }, py::arg("suite"), py::arg("n") = 3, py::arg("depth") = 3, py::arg("trials") = 100, py::arg("seed") = 42);
}
