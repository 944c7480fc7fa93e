#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsslab/access.hpp"
#include "qsslab/entropy.hpp"
#include "qsslab/scheme_io.hpp"
#include "qsslab/schemes.hpp"
#include "qsslab/systems.hpp"
#include "qsslab/tensorlin.hpp"
#include "qsslab/verifier.hpp"

namespace py = pybind11;
using namespace qss;

namespace {

using NpMatrix = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const NpMatrix& arr) {
  const auto buf = arr.request();
  if (buf.ndim != 2) throw input_error("expected a 2-D complex array");
  const auto* data = static_cast<const std::complex<double>*>(buf.ptr);
  return ComplexMatrix(static_cast<std::size_t>(buf.shape[0]),
                       static_cast<std::size_t>(buf.shape[1]),
                       std::vector<complexd>(data, data + buf.shape[0] * buf.shape[1]));
}

py::array from_matrix(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto buf = out.request();
  std::copy(m.entries().begin(), m.entries().end(), static_cast<std::complex<double>*>(buf.ptr));
  return out;
}

StateVector to_state(const NpMatrix& arr) {
  const auto buf = arr.request();
  if (buf.ndim != 1) throw input_error("expected a 1-D complex array");
  const auto* data = static_cast<const std::complex<double>*>(buf.ptr);
  return StateVector(std::vector<complexd>(data, data + buf.shape[0]));
}

py::array from_state(const StateVector& v) {
  py::array_t<std::complex<double>> out(v.dim());
  auto buf = out.request();
  std::copy(v.amplitudes().begin(), v.amplitudes().end(),
            static_cast<std::complex<double>*>(buf.ptr));
  return out;
}

SubsystemLayout to_layout(const std::vector<std::pair<std::string, std::size_t>>& parts) {
  std::vector<Subsystem> subs;
  for (const auto& [label, dim] : parts) subs.push_back({label, dim});
  return SubsystemLayout(std::move(subs));
}

std::vector<std::pair<std::string, std::size_t>> from_layout(const SubsystemLayout& layout) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& p : layout.parts()) out.push_back({p.label, p.dim});
  return out;
}

DensityMatrix to_density(const NpMatrix& rho,
                         const std::vector<std::pair<std::string, std::size_t>>& parts) {
  return DensityMatrix(to_matrix(rho), to_layout(parts));
}

SecretEnsemble to_ensemble(const SchemeSpec& scheme,
                           const std::optional<std::vector<std::pair<double, NpMatrix>>>& items) {
  if (!items) return scheme.ensemble_default;
  std::vector<SecretEnsemble::Item> out;
  for (const auto& [p, amps] : *items) out.push_back({p, to_state(amps)});
  return SecretEnsemble(scheme.encoding.secret_dim(), std::move(out));
}

py::dict rates_dict(const RatesReport& r) {
  py::dict out;
  out["defined"] = r.defined;
  out["r"] = r.r;
  out["r_bar"] = r.r_bar;
  out["inverse_r"] = r.inverse_r;
  out["secret_entropy_bits"] = r.secret_entropy_bits;
  out["max_share_entropy_bits"] = r.max_share_entropy_bits;
  out["max_minus_secret_bits"] = r.max_minus_secret_bits;
  py::dict shares;
  for (const auto& [label, s] : r.share_entropies) shares[py::str(label)] = s;
  out["share_entropies"] = shares;
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict out;
  out["scheme"] = r.scheme_name;
  out["tolerance"] = r.tolerance;
  out["fast"] = r.fast;
  out["i_rs_bits"] = r.i_rs_bits;
  out["secret_entropy_bits"] = r.secret_entropy_bits;
  py::list subsets;
  for (const auto& rec : r.definition1) {
    py::dict d;
    d["subset"] = rec.subset;
    d["authorized"] = rec.authorized;
    d["mutual_information_bits"] = rec.mutual_information_bits;
    d["target_bits"] = rec.target_bits;
    d["coherent_information_bits"] = rec.coherent_information_bits;
    d["verdict"] = rec.verdict;
    d["coherent_verdict"] = rec.coherent_verdict;
    subsets.append(d);
  }
  out["definition1"] = subsets;
  out["definition1_verdict"] = r.definition1_verdict;
  py::list violations;
  for (const auto& v : r.coexistence_violations) {
    py::dict d;
    d["authorized_set"] = v.authorized_set;
    d["complement"] = v.complement;
    d["mutual_information_bits"] = v.mutual_information_bits;
    violations.append(d);
  }
  out["coexistence_violations"] = violations;
  py::list pairs;
  for (const auto& rec : r.theorem6) {
    py::dict d;
    d["a"] = rec.a;
    d["b"] = rec.b;
    d["s_a_bits"] = rec.s_a_bits;
    d["s_b_bits"] = rec.s_b_bits;
    d["s_secret_bits"] = rec.s_secret_bits;
    d["identity_residual_bits"] = rec.identity_residual_bits;
    d["verdict"] = rec.verdict;
    pairs.append(d);
  }
  out["theorem6"] = pairs;
  out["theorem6_verdict"] = r.theorem6_verdict;
  out["rates"] = rates_dict(r.rates);
  out["overall"] = r.overall;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropic verification toolkit for quantum secret sharing schemes";

  py::register_exception<recovery_error>(m, "RecoveryImpossible", PyExc_RuntimeError);
  py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

  py::class_<AccessStructure>(m, "AccessStructure")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<std::string>>>(),
           py::arg("players"), py::arg("minimal_authorized"))
      .def_property_readonly("players", &AccessStructure::players)
      .def_property_readonly("minimal_authorized", &AccessStructure::minimal_authorized)
      .def("__repr__", [](const AccessStructure& g) {
        return "AccessStructure(players=" + std::to_string(g.players().size()) + ", minimal=" +
               std::to_string(g.minimal_authorized().size()) + ")";
      });

  py::class_<SchemeSpec>(m, "SchemeSpec")
      .def_readonly("name", &SchemeSpec::name)
      .def_property_readonly(
          "players", [](const SchemeSpec& s) { return from_layout(s.encoding.output_layout()); })
      .def_property_readonly("secret_dim",
                             [](const SchemeSpec& s) { return s.encoding.secret_dim(); })
      .def_property_readonly("encoding_matrix",
                             [](const SchemeSpec& s) { return from_matrix(s.encoding.matrix()); })
      .def_property_readonly("gamma", [](const SchemeSpec& s) { return s.gamma; })
      .def("__repr__", [](const SchemeSpec& s) { return "SchemeSpec('" + s.name + "')"; });

  // Linear algebra.
  m.def(
      "tensor_product",
      [](const NpMatrix& a, const NpMatrix& b) {
        return from_matrix(tensor_product(to_matrix(a), to_matrix(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout,
         const std::vector<std::string>& keep) {
        return from_matrix(partial_trace(to_matrix(rho), to_layout(layout), keep));
      },
      py::arg("rho"), py::arg("layout"), py::arg("keep"));
  m.def(
      "hermitian_eig",
      [](const NpMatrix& mat) {
        const auto eig = hermitian_eig(to_matrix(mat));
        py::array_t<double> values(eig.eigenvalues.size());
        std::copy(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                  static_cast<double*>(values.request().ptr));
        return py::make_tuple(values, from_matrix(eig.eigenvectors));
      },
      py::arg("m"));
  m.def(
      "check_isometry",
      [](const NpMatrix& v, double tol) { return check_isometry(to_matrix(v), tol); },
      py::arg("v"), py::arg("tol") = 1e-10);

  // Entropy.
  m.def(
      "von_neumann_entropy",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout) {
        return von_neumann_entropy(to_density(rho, layout));
      },
      py::arg("rho"), py::arg("layout"));
  m.def(
      "conditional_entropy",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout,
         const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return conditional_entropy(to_density(rho, layout), x, y);
      },
      py::arg("rho"), py::arg("layout"), py::arg("x"), py::arg("y"));
  m.def(
      "mutual_information",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout,
         const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return mutual_information(to_density(rho, layout), x, y);
      },
      py::arg("rho"), py::arg("layout"), py::arg("x"), py::arg("y"));
  m.def(
      "coherent_information",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout,
         const std::vector<std::string>& a, const std::vector<std::string>& r) {
        return coherent_information(to_density(rho, layout), a, r);
      },
      py::arg("rho"), py::arg("layout"), py::arg("a"), py::arg("r"));
  m.def(
      "check_entropy_inequalities",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout,
         const std::vector<std::string>& x, const std::vector<std::string>& y,
         const std::vector<std::string>& z, double tolerance) {
        const auto report = check_entropy_inequalities(to_density(rho, layout), x, y, z, tolerance);
        py::dict out;
        py::list verdicts;
        for (const auto& v : report.verdicts) {
          py::dict d;
          d["name"] = v.name;
          d["slack"] = v.slack;
          d["holds"] = v.holds;
          verdicts.append(d);
        }
        out["verdicts"] = verdicts;
        out["all_hold"] = report.all_hold();
        return out;
      },
      py::arg("rho"), py::arg("layout"), py::arg("x"), py::arg("y"),
      py::arg("z") = std::vector<std::string>{}, py::arg("tolerance") = kInequalityTol);
  m.def(
      "random_density_matrix",
      [](const std::vector<std::pair<std::string, std::size_t>>& layout, std::size_t purifying_dim,
         std::uint64_t seed) {
        return from_matrix(random_density_matrix(to_layout(layout), purifying_dim, seed).matrix());
      },
      py::arg("layout"), py::arg("purifying_dim"), py::arg("seed"));

  // Systems.
  m.def(
      "purify",
      [](const NpMatrix& rho, const std::vector<std::pair<std::string, std::size_t>>& layout) {
        const auto sr = purify(to_density(rho, layout));
        return py::make_tuple(from_state(sr.vector()), from_layout(sr.layout()));
      },
      py::arg("rho"), py::arg("layout"));
  m.def(
      "assemble_global",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble) {
        const auto global = assemble_global(scheme, to_ensemble(scheme, ensemble));
        return py::make_tuple(from_state(global.vector()), from_layout(global.layout()));
      },
      py::arg("scheme"), py::arg("ensemble") = std::nullopt);
  m.def(
      "reduce",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble,
         const std::vector<std::string>& keep) {
        const auto global = assemble_global(scheme, to_ensemble(scheme, ensemble));
        return from_matrix(reduce(global, keep).matrix());
      },
      py::arg("scheme"), py::arg("ensemble"), py::arg("keep"));

  // Access structures.
  m.def("threshold_structure", &threshold_structure, py::arg("t"), py::arg("n"));
  m.def("vernam_structure", &vernam_structure);
  m.def("is_authorized", &is_authorized, py::arg("gamma"), py::arg("subset"));
  m.def(
      "classify",
      [](const AccessStructure& gamma) {
        const auto flags = classify(gamma);
        py::dict out;
        out["monotone_antichain"] = flags.monotone_antichain;
        out["quantum_admissible"] = flags.quantum_admissible;
        out["complement_closed"] = flags.complement_closed;
        if (!flags.quantum_admissible)
          out["disjoint_witness"] =
              py::make_tuple(flags.disjoint_witness_a, flags.disjoint_witness_b);
        return out;
      },
      py::arg("gamma"));
  m.def(
      "theorem6_pairs",
      [](const AccessStructure& gamma) {
        py::list out;
        for (const auto& p : theorem6_pairs(gamma)) out.append(py::make_tuple(p.a, p.b));
        return out;
      },
      py::arg("gamma"));

  // Schemes.
  m.def("cgl23", &cgl23_scheme);
  m.def("threshold", &threshold_scheme, py::arg("t"), py::arg("n"), py::arg("q"));
  m.def("load_scheme", &load_scheme, py::arg("document"));
  m.def(
      "dilate",
      [](const std::vector<NpMatrix>& kraus,
         const std::vector<std::pair<std::string, std::size_t>>& layout) {
        std::vector<ComplexMatrix> components;
        for (const auto& k : kraus) components.push_back(to_matrix(k));
        const auto iso = dilate(components, to_layout(layout));
        return py::make_tuple(from_matrix(iso.matrix()), from_layout(iso.output_layout()));
      },
      py::arg("kraus_components"), py::arg("output_layout"));

  // Verifier.
  m.def(
      "verify_definition1",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble, double tol,
         bool fast) {
        return report_dict(verify_definition1(scheme, to_ensemble(scheme, ensemble), tol, fast));
      },
      py::arg("scheme"), py::arg("ensemble") = std::nullopt, py::arg("tol") = kVerifierTol,
      py::arg("fast") = false);
  m.def(
      "full_verification",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble, double tol,
         bool fast) {
        return report_dict(full_verification(scheme, to_ensemble(scheme, ensemble), tol, fast));
      },
      py::arg("scheme"), py::arg("ensemble") = std::nullopt, py::arg("tol") = kVerifierTol,
      py::arg("fast") = false);
  m.def(
      "check_coexistence",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble, double tol) {
        py::list out;
        for (const auto& v : check_coexistence(scheme, to_ensemble(scheme, ensemble), tol)) {
          py::dict d;
          d["authorized_set"] = v.authorized_set;
          d["complement"] = v.complement;
          d["mutual_information_bits"] = v.mutual_information_bits;
          out.append(d);
        }
        return out;
      },
      py::arg("scheme"), py::arg("ensemble") = std::nullopt, py::arg("tol") = kVerifierTol);
  m.def(
      "check_theorem6",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble, double tol) {
        py::list out;
        for (const auto& rec : check_theorem6(scheme, to_ensemble(scheme, ensemble), tol)) {
          py::dict d;
          d["a"] = rec.a;
          d["b"] = rec.b;
          d["s_a_bits"] = rec.s_a_bits;
          d["s_b_bits"] = rec.s_b_bits;
          d["s_secret_bits"] = rec.s_secret_bits;
          d["identity_residual_bits"] = rec.identity_residual_bits;
          d["verdict"] = rec.verdict;
          out.append(d);
        }
        return out;
      },
      py::arg("scheme"), py::arg("ensemble") = std::nullopt, py::arg("tol") = kVerifierTol);
  m.def(
      "rates",
      [](const SchemeSpec& scheme,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble) {
        return rates_dict(rates(scheme, to_ensemble(scheme, ensemble)));
      },
      py::arg("scheme"), py::arg("ensemble") = std::nullopt);
  m.def(
      "synthesize_recovery",
      [](const SchemeSpec& scheme, const std::vector<std::string>& subset,
         const std::optional<std::vector<std::pair<double, NpMatrix>>>& ensemble, double tol) {
        const auto map = synthesize_recovery(scheme, to_ensemble(scheme, ensemble), subset, tol);
        py::dict out;
        out["isometry"] = from_matrix(map.isometry);
        out["domain"] = from_layout(map.domain_layout);
        out["output"] = from_layout(map.output_layout);
        out["discard_labels"] = map.discard_labels;
        out["fidelity"] = map.fidelity;
        out["relative_state_defect"] = map.relative_state_defect;
        out["excluded_weight"] = map.excluded_weight;
        return out;
      },
      py::arg("scheme"), py::arg("subset"), py::arg("ensemble") = std::nullopt,
      py::arg("tol") = kVerifierTol);

  m.attr("LOG2_3") = 1.584962500721156;
  m.attr("__version__") = "0.1.0";
}
