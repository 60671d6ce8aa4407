#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critmin/certificate_io.hpp"
#include "critmin/monodromy.hpp"
#include "critmin/patterson.hpp"
#include "critmin/phi.hpp"
#include "critmin/sphere_phi.hpp"
#include "critmin/volume.hpp"

namespace py = pybind11;
using namespace critmin;

PYBIND11_MODULE(_critmin, m) {
  m.doc() =
      "Minimal critical points of smooth maps between closed orientable "
      "surfaces: exact branched-covering arithmetic, permutation monodromy "
      "certificates, sphere-pair classification and the simplicial volume "
      "ratio.";

  py::register_exception<Error>(m, "DomainError", PyExc_ValueError);

  py::class_<Surface>(m, "Surface")
      .def(py::init<long long>(), py::arg("genus"))
      .def_property_readonly("genus", &Surface::genus)
      .def_property_readonly("euler_char", &Surface::euler_char)
      .def(py::self == py::self)
      .def("__repr__", [](const Surface& s) {
        return "Surface(genus=" + std::to_string(s.genus()) + ")";
      });

  py::class_<RamificationProfile>(m, "RamificationProfile")
      .def(py::init<>())
      .def(py::init<std::vector<long long>>(), py::arg("multiplicities"))
      .def_property_readonly("multiplicities",
                             &RamificationProfile::multiplicities)
      .def_property_readonly("size", &RamificationProfile::size)
      .def_property_readonly("max_multiplicity",
                             &RamificationProfile::max_multiplicity)
      .def_property_readonly("branching_total",
                             &RamificationProfile::branching_total)
      .def(py::self == py::self)
      .def("__len__", &RamificationProfile::size);

  py::class_<CoveringData>(m, "CoveringData")
      .def(py::init<long long, RamificationProfile, Surface, long long>(),
           py::arg("degree"), py::arg("profile"), py::arg("target"),
           py::arg("source_euler"))
      .def_property_readonly("degree", &CoveringData::degree)
      .def_property_readonly("profile", &CoveringData::profile)
      .def_property_readonly("target", &CoveringData::target)
      .def_property_readonly("source_euler", &CoveringData::source_euler)
      .def_property_readonly("lambda_total", &CoveringData::lambda_total);

  py::class_<PhiResult>(m, "PhiResult")
      .def_property_readonly("is_finite", &PhiResult::is_finite)
      .def_property_readonly("k", [](const PhiResult& r) { return r.k(); })
      .def_property_readonly(
          "witness",
          [](const PhiResult& r) -> std::optional<CoveringData> {
            return r.witness();
          })
      .def_property_readonly("infinite_case", &PhiResult::infinite_case)
      .def("__repr__", [](const PhiResult& r) {
        if (r.is_finite())
          return "PhiResult(finite, k=" + std::to_string(r.k()) + ")";
        return "PhiResult(infinite, case=" +
               std::to_string(r.infinite_case()) + ")";
      });

  m.def("euler_char", &euler_char, py::arg("genus"));
  m.def("genus_from_euler", &genus_from_euler, py::arg("chi"));
  m.def("hurwitz_euler", &hurwitz_euler, py::arg("target_chi"),
        py::arg("degree"), py::arg("profile"));
  m.def("admits_degree", &admits_degree, py::arg("chi_src"),
        py::arg("chi_tgt"), py::arg("k"));
  m.def("minimal_k", &minimal_k, py::arg("chi_src"), py::arg("chi_tgt"));
  m.def("closed_form_phi", &closed_form_phi, py::arg("chi_src"),
        py::arg("chi_tgt"));
  m.def("phi", &phi, py::arg("source"), py::arg("target"));
  m.def(
      "phi_table",
      [](long long target_genus, long long max_source_genus) {
        std::vector<std::pair<long long, PhiResult>> rows;
        for (auto& row : phi_table(target_genus, max_source_genus))
          rows.emplace_back(row.source_genus, std::move(row.result));
        return rows;
      },
      py::arg("target_genus"), py::arg("max_source_genus"));

  m.def("patterson_feasible", &patterson_feasible, py::arg("target"),
        py::arg("degree"), py::arg("profile"));

  py::enum_<Realizability>(m, "Realizability")
      .value("patterson_guaranteed", Realizability::patterson_guaranteed)
      .value("requires_monodromy_check",
             Realizability::requires_monodromy_check);

  py::class_<EnumeratedCovering>(m, "EnumeratedCovering")
      .def_readonly("data", &EnumeratedCovering::data)
      .def_readonly("realizability", &EnumeratedCovering::realizability);

  m.def("enumerate_covering_data", &enumerate_covering_data,
        py::arg("chi_src"), py::arg("target"), py::arg("k"), py::arg("d_max"));

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("degree"))
      .def_property_readonly("images", &Permutation::images)
      .def_property_readonly("degree", &Permutation::degree)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("cycle_lengths", &Permutation::cycle_lengths)
      .def("cycle_count", &Permutation::cycle_count)
      .def("single_cycle_order", &Permutation::single_cycle_order)
      // left-to-right: (p * q)(i) = q(p(i))
      .def(py::self * py::self)
      .def(py::self == py::self);

  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
  m.def("conjugate", &conjugate, py::arg("p"), py::arg("c"));

  py::class_<MonodromyCertificate>(m, "MonodromyCertificate")
      .def(py::init<>())
      .def_readwrite("degree", &MonodromyCertificate::degree)
      .def_readwrite("target_genus", &MonodromyCertificate::target_genus)
      .def_readwrite("handles", &MonodromyCertificate::handles)
      .def_readwrite("branch", &MonodromyCertificate::branch)
      .def_readwrite("declared_profile",
                     &MonodromyCertificate::declared_profile);

  py::enum_<Violation>(m, "Violation")
      .value("handle_count_mismatch", Violation::handle_count_mismatch)
      .value("product_not_identity", Violation::product_not_identity)
      .value("not_transitive", Violation::not_transitive)
      .value("profile_mismatch", Violation::profile_mismatch);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("valid", &VerificationReport::valid)
      .def_readonly("violations", &VerificationReport::violations)
      .def_readonly("computed_source_euler",
                    &VerificationReport::computed_source_euler);

  m.def("verify_certificate", &verify_certificate, py::arg("certificate"));

  py::class_<SearchBudget>(m, "SearchBudget")
      .def(py::init<>())
      .def(py::init([](std::uint64_t max_evaluations, std::uint64_t seed) {
             return SearchBudget{max_evaluations, seed};
           }),
           py::arg("max_evaluations") = 1'000'000, py::arg("seed") = 1)
      .def_readwrite("max_evaluations", &SearchBudget::max_evaluations)
      .def_readwrite("seed", &SearchBudget::seed);

  py::enum_<InfeasibleReason>(m, "InfeasibleReason")
      .value("degree_too_small", InfeasibleReason::degree_too_small)
      .value("parity_violation", InfeasibleReason::parity_violation)
      .value("sphere_euler_bound", InfeasibleReason::sphere_euler_bound);

  py::class_<RealizeResult> realize_result(m, "RealizeResult");
  py::enum_<RealizeResult::Kind>(realize_result, "Kind")
      .value("certificate", RealizeResult::Kind::certificate)
      .value("infeasible", RealizeResult::Kind::infeasible)
      .value("not_found", RealizeResult::Kind::not_found);
  realize_result
      .def_property_readonly("kind", &RealizeResult::kind)
      .def_property_readonly("certificate", &RealizeResult::certificate)
      .def_property_readonly("reason", &RealizeResult::reason);

  m.def("realize", &realize, py::arg("target"), py::arg("degree"),
        py::arg("profile"), py::arg("budget") = SearchBudget{});
  m.def("oracle_phi", &oracle_phi, py::arg("source"), py::arg("target"),
        py::arg("k_max"), py::arg("d_max"),
        py::arg("budget") = SearchBudget{});

  py::class_<SpherePhi> sphere_phi(m, "SpherePhi");
  py::enum_<SpherePhi::Status>(sphere_phi, "Status")
      .value("exact", SpherePhi::Status::exact)
      .value("exactly_infinite", SpherePhi::Status::exactly_infinite)
      .value("at_least", SpherePhi::Status::at_least)
      .value("unknown", SpherePhi::Status::unknown);
  sphere_phi.def_readonly("status", &SpherePhi::status)
      .def_readonly("value", &SpherePhi::value)
      .def_property_readonly("provenance", [](const SpherePhi& s) {
        return std::string(s.provenance);
      });

  m.def("classify_sphere_pair", &classify_sphere_pair, py::arg("m"),
        py::arg("n"));

  py::class_<RatioMod1>(m, "RatioMod1")
      .def_readonly("numerator", &RatioMod1::numerator)
      .def_readonly("denominator", &RatioMod1::denominator)
      .def(py::self == py::self)
      .def("__repr__", [](const RatioMod1& r) {
        return std::to_string(r.numerator) + "/" +
               std::to_string(r.denominator);
      });

  m.def("simplicial_volume", &simplicial_volume, py::arg("surface"));
  m.def("volume_ratio", &volume_ratio, py::arg("source"), py::arg("target"));

  m.def("certificate_to_json", [](const MonodromyCertificate& cert) {
    return certificate_to_string(cert);
  });
  m.def("certificate_from_json", [](const std::string& text) {
    return certificate_from_string(text);
  });
  m.def("write_certificate",
        [](const std::string& path, const MonodromyCertificate& cert) {
          write_certificate(path, cert);
        });
  m.def("read_certificate",
        [](const std::string& path) { return read_certificate(path); });
}
