#include "qsslab/access_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "qsslab/errors.hpp"

namespace qsslab {

SecretPrior::SecretPrior(double q0, double q1) : q0_(q0), q1_(q1) {
  if (!(q0 >= 0.0 && q1 >= 0.0 && std::abs(q0 + q1 - 1.0) <= kNormTolerance)) {
    throw DomainError("SecretPrior: (" + std::to_string(q0) + ", " + std::to_string(q1) +
                      ") is not a probability distribution");
  }
}

SecretPrior SecretPrior::from_q0(double q0) { return SecretPrior(q0, 1.0 - q0); }

double SecretPrior::entropy() const { return binary_entropy(q0_); }

std::vector<SecretPrior> standard_priors() {
  return {SecretPrior(0.5, 0.5), SecretPrior(0.3, 0.7), SecretPrior(0.01, 0.99)};
}

std::string_view to_string(Classification c) {
  return c == Classification::Qualified ? "Qualified" : "Forbidden";
}

DensityMatrix share_state(int secret_bit, const ShareSubset& j) {
  return reduced_state(code5::encode_classical(secret_bit), j);
}

double holevo_information(const ShareSubset& j, const SecretPrior& prior) {
  if (j.empty()) throw DomainError("holevo_information: empty subset");
  const DensityMatrix rho0 = share_state(0, j);
  const DensityMatrix rho1 = share_state(1, j);
  const DensityMatrix mixture(prior.q0() * rho0.matrix() + prior.q1() * rho1.matrix());
  return von_neumann_entropy(mixture) -
         (prior.q0() * von_neumann_entropy(rho0) + prior.q1() * von_neumann_entropy(rho1));
}

double share_trace_distance(const ShareSubset& j) {
  if (j.empty()) throw DomainError("share_trace_distance: empty subset");
  return trace_distance(share_state(0, j), share_state(1, j));
}

SubsetVerdict classify_subset(const ShareSubset& j, const SecretPrior& prior) {
  SubsetVerdict v;
  v.subset = j;
  v.holevo_bits = holevo_information(j, prior);
  v.trace_dist = share_trace_distance(j);
  if (v.trace_dist >= 1.0 - kDecisionTolerance) {
    v.classification = Classification::Qualified;
  } else if (v.holevo_bits <= kDecisionTolerance && v.trace_dist <= kDecisionTolerance) {
    v.classification = Classification::Forbidden;
  } else {
    throw IndeterminateError("subset " + j.to_string() + " is neither qualified nor forbidden" +
                             " (holevo " + std::to_string(v.holevo_bits) + ", trace distance " +
                             std::to_string(v.trace_dist) + ")");
  }
  return v;
}

AccessReport access_structure_report(const SecretPrior& prior) {
  const auto subsets = ShareSubset::all_nonempty(code5::kNumQubits);
  std::vector<std::future<SubsetVerdict>> pending;
  pending.reserve(subsets.size());
  for (const ShareSubset& j : subsets)
    pending.push_back(std::async(std::launch::async, [j, prior] { return classify_subset(j, prior); }));

  AccessReport report;
  report.prior = prior;
  for (auto& f : pending) report.verdicts.push_back(f.get());

  int smallest_qualified = code5::kNumQubits + 1;
  for (const auto& v : report.verdicts)
    if (v.classification == Classification::Qualified)
      smallest_qualified = std::min(smallest_qualified, static_cast<int>(v.subset.size()));
  const bool threshold =
      smallest_qualified <= code5::kNumQubits &&
      std::all_of(report.verdicts.begin(), report.verdicts.end(), [&](const SubsetVerdict& v) {
        const bool big = static_cast<int>(v.subset.size()) >= smallest_qualified;
        return big == (v.classification == Classification::Qualified);
      });
  if (threshold) report.threshold = smallest_qualified;
  return report;
}

namespace {

void require_share_dimension(const ShareSubset& j, const DensityMatrix& state, const char* op) {
  if (j.empty()) throw DomainError(std::string(op) + ": empty subset");
  const std::size_t expected = std::size_t{1} << j.size();
  if (state.dim() != expected) {
    throw DomainError(std::string(op) + ": state has dimension " + std::to_string(state.dim()) +
                      ", subset " + j.to_string() + " needs " + std::to_string(expected));
  }
}

double expectation(const Matrix& op, const DensityMatrix& state) {
  return (op * state.matrix()).trace().real();
}

}  // namespace

ClassicalReconstruction reconstruct_classical(const ShareSubset& j, const DensityMatrix& state,
                                              const SecretPrior& prior) {
  require_share_dimension(j, state, "reconstruct_classical");
  const DensityMatrix rho0 = share_state(0, j);
  const DensityMatrix rho1 = share_state(1, j);
  const Matrix p0 = support_projector(eigen_hermitian(rho0.matrix()), kSupportThreshold);
  const Matrix p1 = Matrix::identity(p0.dim()) - p0;

  ClassicalReconstruction out;
  out.support_weight = std::clamp(expectation(p0, state), 0.0, 1.0);
  const Matrix& outcome = out.support_weight >= 0.5 ? p0 : p1;
  // Posterior weight of each secret given the likelier outcome.
  const double w0 = prior.q0() * expectation(outcome, rho0);
  const double w1 = prior.q1() * expectation(outcome, rho1);
  out.guess = w1 > w0 ? 1 : 0;
  const Matrix weighted = prior.q0() * rho0.matrix() - prior.q1() * rho1.matrix();
  out.success_probability = std::clamp(0.5 * (1.0 + 2.0 * half_trace_norm(weighted)), 0.0, 1.0);
  return out;
}

QuantumReconstruction reconstruct_quantum(const ShareSubset& j, const DensityMatrix& state,
                                          const std::optional<code5::QubitSecret>& secret) {
  require_share_dimension(j, state, "reconstruct_quantum");
  const ShareSubset missing = j.complement(code5::kNumQubits);
  if (!code5::erasure_correctable(missing)) {
    throw UnqualifiedError("subset " + j.to_string() +
                           " cannot reconstruct the secret: erasure of " + missing.to_string() +
                           " is not correctable");
  }

  const PureState zero = code5::encode_classical(0);
  const PureState one = code5::encode_classical(1);
  const PureState* codewords[2] = {&zero, &one};

  // omega = N(I/2), the code's maximally mixed state seen by J.
  const Matrix omega =
      0.5 * (reduced_operator(zero, zero, j) + reduced_operator(one, one, j));
  const HermitianEigen omega_eig = eigen_hermitian(omega);
  const Matrix inv_sqrt =
      spectral_apply(omega_eig, kSupportThreshold, [](double v) { return 1.0 / std::sqrt(v); });
  const Matrix support = support_projector(omega_eig, kSupportThreshold);
  const Matrix y = inv_sqrt * state.matrix() * inv_sqrt;

  // R(X)_{ab} = (1/2) <psi_a| (Y (x) 1) |psi_b> = (1/2) Tr(Y Tr_{missing}|psi_b><psi_a|).
  Matrix out(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out(a, b) = 0.5 * (y * reduced_operator(*codewords[b], *codewords[a], j)).trace();
  // Weight outside the code's support is sent to the maximally mixed state so
  // the map stays trace preserving on every input.
  const double leaked = std::max(0.0, 1.0 - expectation(support, state));
  out += Matrix::identity(2) * (0.5 * leaked);

  QuantumReconstruction result{DensityMatrix(out), std::nullopt};
  if (secret) result.fidelity = fidelity_with_pure(result.recovered, secret->state());
  return result;
}

}  // namespace qsslab
