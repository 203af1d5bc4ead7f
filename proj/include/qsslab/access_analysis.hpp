#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qsslab/code5.hpp"
#include "qsslab/quantum_core.hpp"

namespace qsslab {

/// Distribution (q0, q1) of the classical secret bit.
class SecretPrior {
 public:
  SecretPrior(double q0, double q1);
  static SecretPrior uniform() { return {0.5, 0.5}; }
  /// q1 inferred as 1 - q0.
  static SecretPrior from_q0(double q0);

  double q0() const { return q0_; }
  double q1() const { return q1_; }
  double operator[](int bit) const { return bit == 0 ? q0_ : q1_; }
  /// H(q0, q1) in bits.
  double entropy() const;

 private:
  double q0_;
  double q1_;
};

/// The three priors every security check runs over.
std::vector<SecretPrior> standard_priors();

inline constexpr double kDecisionTolerance = 1e-9;
/// Eigenvalues above this count as support when building projectors.
inline constexpr double kSupportThreshold = 1e-10;

enum class Classification { Qualified, Forbidden };

std::string_view to_string(Classification c);

struct SubsetVerdict {
  ShareSubset subset;
  double holevo_bits = 0.0;
  double trace_dist = 0.0;
  Classification classification = Classification::Forbidden;
};

struct AccessReport {
  SecretPrior prior = SecretPrior::uniform();
  /// All 31 nonempty subsets, ordered by size then members.
  std::vector<SubsetVerdict> verdicts;
  /// k such that a subset is Qualified exactly when it has at least k
  /// members; empty when the structure is not a threshold structure.
  std::optional<int> threshold;

  bool is_threshold(int k) const { return threshold == k; }
};

/// rho_s^J: marginal of |psi(s)> on J.
DensityMatrix share_state(int secret_bit, const ShareSubset& j);

/// S(q0 rho0 + q1 rho1) - q0 S(rho0) - q1 S(rho1), in bits.
double holevo_information(const ShareSubset& j, const SecretPrior& prior);

/// Trace distance between the two marginals; prior independent.
double share_trace_distance(const ShareSubset& j);

/// Qualified iff trace distance >= 1 - 1e-9; Forbidden iff Holevo (at the
/// given prior) and trace distance are both <= 1e-9. Anything else throws
/// IndeterminateError.
SubsetVerdict classify_subset(const ShareSubset& j,
                              const SecretPrior& prior = SecretPrior::uniform());

/// Classifies every nonempty subset. Subsets are evaluated concurrently; the
/// result order is deterministic.
AccessReport access_structure_report(const SecretPrior& prior = SecretPrior::uniform());

struct ClassicalReconstruction {
  int guess = 0;
  /// Optimal (Helstrom/Bayes) success probability for this subset and prior.
  double success_probability = 0.0;
  /// Probability that the support measurement on the given state reports
  /// "secret 0".
  double support_weight = 0.0;
};

/// Measures {P0, 1 - P0}, with P0 the support projector of rho_0^J, on
/// `state` and returns the MAP guess for the likelier outcome.
ClassicalReconstruction reconstruct_classical(const ShareSubset& j, const DensityMatrix& state,
                                              const SecretPrior& prior = SecretPrior::uniform());

struct QuantumReconstruction {
  DensityMatrix recovered;
  /// <alpha| recovered |alpha>, present when the secret was supplied.
  std::optional<double> fidelity;
};

/// Petz recovery for the erasure of the complement of J, with respect to the
/// maximally mixed code state. Throws UnqualifiedError when that erasure is
/// not correctable (every |J| <= 2 here).
QuantumReconstruction reconstruct_quantum(const ShareSubset& j, const DensityMatrix& state,
                                          const std::optional<code5::QubitSecret>& secret = {});

}  // namespace qsslab
