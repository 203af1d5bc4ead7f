#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsslab/quantum_core.hpp"

namespace qsslab::code5 {

inline constexpr int kNumQubits = 5;
inline constexpr int kTermsPerCodeword = 16;
inline constexpr double kNormalization = 0.25;

struct SignedTerm {
  std::string_view bits;  ///< ket label |b1 b2 b3 b4 b5>
  int sign;               ///< +1 or -1
};

using CodewordTable = std::array<SignedTerm, kTermsPerCodeword>;

/// Unnormalized 16-term expansions of the two codewords.
const CodewordTable& codeword_table(int bit);

/// |psi(s)>, normalized. Throws DomainError for s outside {0, 1}.
PureState encode_classical(int secret_bit);

/// alpha0 |0> + alpha1 |1>, normalized to 1e-12.
class QubitSecret {
 public:
  QubitSecret(Complex alpha0, Complex alpha1);

  Complex alpha0() const { return alpha0_; }
  Complex alpha1() const { return alpha1_; }
  /// The secret as a one-qubit state.
  PureState state() const { return PureState(1, {alpha0_, alpha1_}); }

 private:
  Complex alpha0_;
  Complex alpha1_;
};

/// alpha0 |psi(0)> + alpha1 |psi(1)>.
PureState encode_quantum(const QubitSecret& secret);

/// Five-letter Pauli string over {I, X, Y, Z}; letter i acts on qubit i.
class PauliOperator {
 public:
  explicit PauliOperator(std::string_view letters);

  const std::string& letters() const { return letters_; }
  int weight() const { return weight_; }

 private:
  std::string letters_;
  int weight_ = 0;
};

/// X flips, Z applies (-1)^bit, Y = iXZ. Throws DomainError when the operator
/// length differs from the state's qubit count.
PureState apply_pauli(const PauliOperator& p, const PureState& psi);

/// All 3^w * C(5, w) Pauli strings of exactly weight w, in lexicographic
/// order of the letter string (I < X < Y < Z).
std::vector<PauliOperator> paulis_of_weight(int weight);

inline constexpr double kKnillLaflammeTolerance = 1e-9;

struct WeightSummary {
  int weight = 0;
  int operators_checked = 0;
  /// max |<psi0|E|psi1>|
  double max_off_diagonal = 0.0;
  /// max |<psi0|E|psi0> - <psi1|E|psi1>|
  double max_diagonal_difference = 0.0;
  int violations = 0;
  /// First violating operator in enumeration order, if any.
  std::optional<std::string> first_violation;
};

struct DistanceReport {
  int max_weight = 0;
  std::vector<WeightSummary> weights;  ///< one entry per weight 1..max_weight
  /// Smallest weight with a violation; empty if none up to max_weight.
  std::optional<int> distance;
  /// <psi0|psi0>, <psi1|psi1>, <psi0|psi1>
  double norm0 = 0.0;
  double norm1 = 0.0;
  Complex overlap;
};

/// Exhaustive Knill-Laflamme check over every Pauli of weight 1..max_weight.
DistanceReport verify_distance(int max_weight);

/// True when the erasure of `missing` qubits is correctable on the code
/// space: Tr_{kept}|psi_a><psi_b| = delta_ab * omega on the missing qubits.
/// The empty set is always correctable.
bool erasure_correctable(const ShareSubset& missing, double tolerance = kKnillLaflammeTolerance);

}  // namespace qsslab::code5
