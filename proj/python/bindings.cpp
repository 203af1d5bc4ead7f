#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsslab/access_analysis.hpp"
#include "qsslab/classical_bound.hpp"
#include "qsslab/code5.hpp"
#include "qsslab/errors.hpp"
#include "qsslab/quantum_core.hpp"
#include "qsslab/serialization.hpp"

namespace py = pybind11;
using namespace qsslab;

namespace {

py::array_t<Complex> to_numpy(const Matrix& m) {
  py::array_t<Complex> out({m.dim(), m.dim()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
  return out;
}

Matrix from_numpy(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DomainError("expected a square matrix");
  const auto n = static_cast<std::size_t>(a.shape(0));
  return Matrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

ShareSubset subset_from(const std::vector<int>& members) {
  return ShareSubset(std::span<const int>(members));
}

PureState state_from(const std::vector<Complex>& amps) {
  int n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  return PureState(n, amps);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of the (3,5) qubit secret sharing scheme built on the 5-qubit code";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnqualifiedError>(m, "UnqualifiedError", PyExc_ValueError);
  py::register_exception<IndeterminateError>(m, "IndeterminateError", PyExc_RuntimeError);

  // quantum core
  m.def("eigenvalues_hermitian",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
          return eigenvalues_hermitian(from_numpy(a));
        },
        "Eigenvalues of a Hermitian matrix, descending.");
  m.def("reduced_state",
        [](const std::vector<Complex>& amps, const std::vector<int>& keep) {
          return to_numpy(reduced_state(state_from(amps), subset_from(keep)).matrix());
        },
        py::arg("amplitudes"), py::arg("keep"),
        "Partial trace of a pure state onto the 1-based qubits in `keep`.");
  m.def("von_neumann_entropy",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho) {
          return von_neumann_entropy(DensityMatrix(from_numpy(rho)));
        },
        "Entropy in bits.");
  m.def("trace_distance",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho,
           const py::array_t<Complex, py::array::c_style | py::array::forcecast>& sigma) {
          return trace_distance(DensityMatrix(from_numpy(rho)), DensityMatrix(from_numpy(sigma)));
        });

  // code
  m.def("encode_classical",
        [](int bit) {
          const PureState psi = code5::encode_classical(bit);
          return std::vector<Complex>(psi.amplitudes().begin(), psi.amplitudes().end());
        },
        py::arg("secret"), "Amplitudes of |psi(secret)>, big-endian basis order.");
  m.def("encode_quantum",
        [](Complex alpha0, Complex alpha1) {
          const PureState psi = code5::encode_quantum(code5::QubitSecret(alpha0, alpha1));
          return std::vector<Complex>(psi.amplitudes().begin(), psi.amplitudes().end());
        },
        py::arg("alpha0"), py::arg("alpha1"));
  m.def("apply_pauli",
        [](const std::string& letters, const std::vector<Complex>& amps) {
          const PureState out = code5::apply_pauli(code5::PauliOperator(letters), state_from(amps));
          return std::vector<Complex>(out.amplitudes().begin(), out.amplitudes().end());
        },
        py::arg("pauli"), py::arg("amplitudes"));

  py::class_<code5::WeightSummary>(m, "WeightSummary")
      .def_readonly("weight", &code5::WeightSummary::weight)
      .def_readonly("operators_checked", &code5::WeightSummary::operators_checked)
      .def_readonly("max_off_diagonal", &code5::WeightSummary::max_off_diagonal)
      .def_readonly("max_diagonal_difference", &code5::WeightSummary::max_diagonal_difference)
      .def_readonly("violations", &code5::WeightSummary::violations)
      .def_readonly("first_violation", &code5::WeightSummary::first_violation);
  py::class_<code5::DistanceReport>(m, "DistanceReport")
      .def_readonly("max_weight", &code5::DistanceReport::max_weight)
      .def_readonly("weights", &code5::DistanceReport::weights)
      .def_readonly("distance", &code5::DistanceReport::distance)
      .def("to_json", [](const code5::DistanceReport& r) {
        return io::render(r, io::OutputFormat::Json);
      });
  m.def("verify_distance", &code5::verify_distance, py::arg("max_weight") = 3);

  // access structure
  m.def("holevo_information",
        [](const std::vector<int>& j, double q0) {
          return holevo_information(subset_from(j), SecretPrior::from_q0(q0));
        },
        py::arg("subset"), py::arg("q0") = 0.5, "Holevo information in bits.");

  py::enum_<Classification>(m, "Classification")
      .value("Qualified", Classification::Qualified)
      .value("Forbidden", Classification::Forbidden);
  py::class_<SubsetVerdict>(m, "SubsetVerdict")
      .def_property_readonly("members", [](const SubsetVerdict& v) { return v.subset.members(); })
      .def_readonly("holevo_bits", &SubsetVerdict::holevo_bits)
      .def_readonly("trace_dist", &SubsetVerdict::trace_dist)
      .def_readonly("classification", &SubsetVerdict::classification);
  py::class_<AccessReport>(m, "AccessReport")
      .def_readonly("verdicts", &AccessReport::verdicts)
      .def_readonly("threshold", &AccessReport::threshold)
      .def("is_threshold", &AccessReport::is_threshold)
      .def("to_json",
           [](const AccessReport& r) { return io::render(r, io::OutputFormat::Json); });
  m.def("classify_subset",
        [](const std::vector<int>& j, double q0) {
          return classify_subset(subset_from(j), SecretPrior::from_q0(q0));
        },
        py::arg("subset"), py::arg("q0") = 0.5);
  m.def("access_structure_report",
        [](double q0) { return access_structure_report(SecretPrior::from_q0(q0)); },
        py::arg("q0") = 0.5);

  m.def("reconstruct_classical",
        [](const std::vector<int>& j, int secret, double q0) {
          const ShareSubset subset = subset_from(j);
          const auto r = reconstruct_classical(subset, share_state(secret, subset),
                                               SecretPrior::from_q0(q0));
          return py::make_tuple(r.guess, r.success_probability);
        },
        py::arg("subset"), py::arg("secret"), py::arg("q0") = 0.5,
        "Encode `secret`, hand the shares in `subset` to the reconstructor, and "
        "return (guess, success_probability).");
  m.def("reconstruct_quantum",
        [](const std::vector<int>& j, Complex alpha0, Complex alpha1) {
          const ShareSubset subset = subset_from(j);
          const code5::QubitSecret secret(alpha0, alpha1);
          const auto r = reconstruct_quantum(
              subset, reduced_state(code5::encode_quantum(secret), subset), secret);
          return py::make_tuple(to_numpy(r.recovered.matrix()), *r.fidelity);
        },
        py::arg("subset"), py::arg("alpha0"), py::arg("alpha1"),
        "Encode the qubit secret, recover it from `subset`, return (density matrix, fidelity).");

  // classical contrast
  py::class_<classical::BoundReport>(m, "BoundReport")
      .def_readonly("mean_share_size", &classical::BoundReport::mean_share_size)
      .def_readonly("bound", &classical::BoundReport::bound)
      .def_readonly("satisfied", &classical::BoundReport::satisfied);
  m.def("check_bound",
        [](int n, int k, std::vector<int> sizes) {
          return classical::check_bound({n, k, std::move(sizes)});
        },
        py::arg("n"), py::arg("k"), py::arg("share_sizes"));
  m.def("scheme_subset_status",
        [](int m_bits, std::vector<std::uint32_t> vectors, const std::vector<int>& subset) {
          const classical::LinearScheme scheme(m_bits, std::move(vectors));
          return classical::scheme_subset_status(scheme, subset_from(subset)) ==
                 classical::SubsetStatus::Qualified;
        },
        py::arg("randomness_bits"), py::arg("vectors"), py::arg("subset"),
        "True when the subset recovers the secret.");

  py::class_<classical::SearchReport>(m, "SearchReport")
      .def_readonly("found", &classical::SearchReport::found)
      .def_readonly("nodes_visited", &classical::SearchReport::nodes_visited)
      .def_readonly("schemes_enumerated", &classical::SearchReport::schemes_enumerated)
      .def_readonly("pruned", &classical::SearchReport::pruned)
      .def_readonly("witnesses", &classical::SearchReport::witnesses)
      .def_property_readonly("witness", [](const classical::SearchReport& r) -> py::object {
        if (!r.witness) return py::none();
        return py::make_tuple(r.witness->randomness_bits(), r.witness->vectors());
      });
  m.def("search_linear_schemes",
        [](int n, int k, int max_randomness, bool prune) {
          classical::SearchOptions opts;
          opts.prune = prune;
          py::gil_scoped_release release;
          return classical::search_linear_schemes(n, k, max_randomness, opts);
        },
        py::arg("n"), py::arg("k"), py::arg("max_randomness"), py::arg("prune") = true);

#ifdef QSSLAB_VERSION
  m.attr("__version__") = QSSLAB_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
