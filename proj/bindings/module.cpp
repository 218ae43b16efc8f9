#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmatroids/constructions.hpp"
#include "qmatroids/json_io.hpp"
#include "qmatroids/rankmetric.hpp"

namespace py = pybind11;

using qm::QMatroid;
using qm::RankMetricCode;
using qm::Subspace;

namespace {

py::list reports_to_py(const std::vector<qm::AxiomReport>& reps) {
  py::list out;
  for (const auto& r : reps) {
    py::dict d;
    d["axiom"] = r.axiom;
    d["holds"] = r.holds;
    d["violation_count"] = r.violation_count;
    py::list witnesses;
    for (const auto& w : r.witnesses) {
      py::list tuple_;
      for (const auto& s : w) tuple_.append(s);
      witnesses.append(tuple_);
    }
    d["witnesses"] = witnesses;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "q-matroids over GF(q): construction, verification, and rank-metric codes";

  py::register_exception<qm::Error>(m, "Error");
  py::register_exception<qm::AxiomViolationError>(m, "AxiomViolationError");

  py::class_<Subspace>(m, "Subspace")
      .def_static("span", &Subspace::span, py::arg("q"), py::arg("n"), py::arg("rows"))
      .def_static("zero", &Subspace::zero, py::arg("q"), py::arg("n"))
      .def_static("full", &Subspace::full, py::arg("q"), py::arg("n"))
      .def_property_readonly("q", &Subspace::q)
      .def_property_readonly("ambient", &Subspace::ambient)
      .def_property_readonly("dim", &Subspace::dim)
      .def("rows", &Subspace::rows)
      .def("contains", &Subspace::contains)
      .def("perp", &Subspace::perp)
      .def("lines", &Subspace::lines)
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
      .def("__lt__", [](const Subspace& a, const Subspace& b) { return a < b; })
      .def("__hash__", [](const Subspace& s) { return py::hash(py::str(s.to_string())); })
      .def("__str__", &Subspace::to_string)
      .def("__repr__",
           [](const Subspace& s) { return "Subspace(" + s.to_string() + ")"; });

  m.def("sum", &qm::sum, py::arg("a"), py::arg("b"));
  m.def("intersect", &qm::intersect, py::arg("a"), py::arg("b"));
  m.def("enumerate_subspaces", &qm::enumerate_subspaces, py::arg("q"), py::arg("n"),
        py::arg("dim") = -1, py::arg("cap_bits") = qm::kDefaultPointCapBits);

  py::class_<QMatroid>(m, "QMatroid")
      .def_property_readonly("q", &QMatroid::q)
      .def_property_readonly("n", &QMatroid::n)
      .def_property_readonly("rank", &QMatroid::rank)
      .def("rank_of", &QMatroid::rank_of, py::arg("subspace"))
      .def("independents", &QMatroid::independents)
      .def("bases", &QMatroid::bases)
      .def("circuits", &QMatroid::circuits)
      .def("loops", &QMatroid::loops)
      .def("isthmuses", &QMatroid::isthmuses)
      .def("flats", &QMatroid::flats)
      .def("closure", &QMatroid::closure, py::arg("subspace"))
      .def("rank_polynomial", [](const QMatroid& M) { return M.rank_polynomial().to_string(); })
      .def("rank_polynomial_terms",
           [](const QMatroid& M) { return M.rank_polynomial().terms(); })
      .def("to_json", [](const QMatroid& M) { return qm::io::render(qm::io::qmatroid_to_json(M)); })
      .def("__eq__", [](const QMatroid& a, const QMatroid& b) { return a == b; })
      .def("__repr__", [](const QMatroid& M) {
        return "QMatroid(q=" + std::to_string(M.q()) + ", n=" + std::to_string(M.n()) +
               ", rank=" + std::to_string(M.rank()) + ")";
      });

  m.def("matroid_from_json",
        [](const std::string& text) { return qm::io::qmatroid_from_json(qm::io::json::parse(text)); },
        py::arg("text"));

  m.def("uniform", &qm::uniform, py::arg("k"), py::arg("n"), py::arg("q"),
        py::arg("cap_bits") = qm::kDefaultPointCapBits);
  m.def("from_independents", &qm::from_independents, py::arg("family"), py::arg("q"),
        py::arg("n"));
  m.def("from_bases", &qm::from_bases, py::arg("family"), py::arg("q"), py::arg("n"));
  m.def("dual", &qm::dual, py::arg("matroid"));
  m.def("restrict_to", &qm::restrict_to, py::arg("matroid"), py::arg("hyperplane"));
  m.def("contract", &qm::contract, py::arg("matroid"), py::arg("line"));
  m.def("truncate", &qm::truncate, py::arg("matroid"));
  m.def("isomorphism", &qm::isomorphism, py::arg("a"), py::arg("b"),
        py::arg("gl_cap") = qm::kDefaultGlCap);

  m.def("check_rank_axioms",
        [](const QMatroid& M) { return reports_to_py(qm::check_rank_axioms(M)); });
  m.def("check_independence_axioms",
        [](const std::vector<Subspace>& fam, std::uint64_t q, int n) {
          return reports_to_py(qm::check_independence_axioms(fam, q, n));
        },
        py::arg("family"), py::arg("q"), py::arg("n"));
  m.def("check_basis_axioms",
        [](const std::vector<Subspace>& fam, std::uint64_t q, int n) {
          return reports_to_py(qm::check_basis_axioms(fam, q, n));
        },
        py::arg("family"), py::arg("q"), py::arg("n"));
  m.def("check_circuit_axioms",
        [](const std::vector<Subspace>& fam, std::uint64_t q, int n) {
          return reports_to_py(qm::check_circuit_axioms(fam, q, n));
        },
        py::arg("family"), py::arg("q"), py::arg("n"));
  m.def("check_closure_axioms",
        [](const QMatroid& M) { return reports_to_py(qm::check_closure_axioms(M)); });
  m.def("lemma_suite", [](const QMatroid& M) { return reports_to_py(qm::lemma_suite(M)); });
  m.def("duality_suite",
        [](const QMatroid& M, std::uint64_t gl_cap) {
          return reports_to_py(qm::duality_suite(M, gl_cap));
        },
        py::arg("matroid"), py::arg("gl_cap") = qm::kDefaultGlCap);

  py::class_<RankMetricCode>(m, "RankMetricCode")
      .def_property_readonly("n", &RankMetricCode::n)
      .def_property_readonly("k", &RankMetricCode::k)
      .def_property_readonly("m", &RankMetricCode::m)
      .def("generator", &RankMetricCode::generator)
      .def("expansion_basis", &RankMetricCode::expansion_basis)
      .def("with_expansion_basis", &RankMetricCode::with_expansion_basis, py::arg("basis"))
      .def("is_codeword", &RankMetricCode::is_codeword, py::arg("c"))
      .def("expand", &RankMetricCode::expand, py::arg("c"))
      .def("rank_support", &RankMetricCode::rank_support, py::arg("c"))
      .def("rank_weight", &RankMetricCode::rank_weight, py::arg("c"))
      .def("min_rank_distance", &RankMetricCode::min_rank_distance,
           py::arg("cap") = qm::kDefaultCodewordCap)
      .def("dual", &RankMetricCode::dual)
      .def("l_of", &RankMetricCode::l_of, py::arg("support"))
      .def("r_of", &RankMetricCode::r_of, py::arg("support"))
      .def("to_json", [](const RankMetricCode& C) { return qm::io::render(qm::io::code_to_json(C)); })
      .def("__repr__", [](const RankMetricCode& C) {
        return "RankMetricCode(n=" + std::to_string(C.n()) + ", k=" + std::to_string(C.k()) +
               ", m=" + std::to_string(C.m()) + ")";
      });

  m.def("code_from_json",
        [](const std::string& text) { return qm::io::code_from_json(qm::io::json::parse(text)); },
        py::arg("text"));
  m.def("gabidulin", &qm::gabidulin, py::arg("q"), py::arg("m"), py::arg("n"), py::arg("k"),
        py::arg("points") = std::vector<qm::FVal>{});
  m.def("matroid_of_code", &qm::matroid_of_code, py::arg("code"),
        py::arg("cap_bits") = qm::kDefaultPointCapBits);
  m.def("check_code_support_lemmas",
        [](const RankMetricCode& C, std::uint64_t cap) {
          return reports_to_py(qm::check_code_support_lemmas(C, cap));
        },
        py::arg("code"), py::arg("cap") = qm::kDefaultCodewordCap);
}
