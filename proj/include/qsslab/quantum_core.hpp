#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsslab/linalg.hpp"

namespace qsslab {

inline constexpr int kMaxQubits = 5;

/// Tolerances shared by the state types.
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
/// Eigenvalues below this contribute nothing to an entropy (0 log 0 = 0).
inline constexpr double kEntropyZeroThreshold = 1e-12;

/// Unit-norm amplitude vector over 1..5 qubits. Basis index is big-endian:
/// qubit 1 is the most significant bit, matching |b1 b2 ... bn>.
class PureState {
 public:
  /// Requires 2^num_qubits amplitudes with squared norm 1 within 1e-12.
  PureState(int num_qubits, std::vector<Complex> amplitudes);

  /// Rescales any nonzero vector to unit norm.
  static PureState normalized(int num_qubits, std::vector<Complex> amplitudes);
  static PureState basis(int num_qubits, std::size_t index);
  /// Basis state from a ket label such as "10010".
  static PureState basis(std::string_view bits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }

  Matrix projector() const { return Matrix::outer(amplitudes_, amplitudes_); }

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// <a|b>
Complex inner_product(const PureState& a, const PureState& b);

/// Hermitian, PSD, unit-trace matrix of power-of-two dimension.
class DensityMatrix {
 public:
  /// Validates every invariant (Hermitian to 1e-12, trace 1 to 1e-12,
  /// eigenvalues >= -1e-10); throws DomainError otherwise.
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix from_pure(const PureState& psi);

  std::size_t dim() const { return entries_.dim(); }
  int num_qubits() const;
  const Matrix& matrix() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

 private:
  Matrix entries_;
};

/// Set of participants drawn from {1, ..., 5}; stored as a bitmask where
/// participant i is bit (i - 1).
class ShareSubset {
 public:
  ShareSubset() = default;
  ShareSubset(std::initializer_list<int> members);
  explicit ShareSubset(std::span<const int> members);

  static ShareSubset from_mask(std::uint32_t mask);
  static ShareSubset full(int n);
  /// Parses "1,2,3" (also accepts "{1,2,3}" and whitespace).
  static ShareSubset parse(std::string_view text);
  /// All 2^n - 1 nonempty subsets of {1..n}, ordered by size then
  /// lexicographically by sorted members.
  static std::vector<ShareSubset> all_nonempty(int n);

  std::uint32_t mask() const { return mask_; }
  std::vector<int> members() const;
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int member) const;
  bool is_subset_of(const ShareSubset& other) const { return (mask_ & ~other.mask_) == 0; }
  /// Largest member, or 0 for the empty set.
  int max_member() const;
  ShareSubset complement(int n) const;
  /// "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const ShareSubset&, const ShareSubset&) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Tr_{not keep} |ket><bra|, with the kept qubits in increasing order.
Matrix reduced_operator(const PureState& ket, const PureState& bra, const ShareSubset& keep);

/// Marginal of psi on the qubits in `keep`.
DensityMatrix reduced_state(const PureState& psi, const ShareSubset& keep);

/// Entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy of the distribution (p, 1-p), in bits.
double binary_entropy(double p);

/// (1/2) * sum |eigenvalues(rho - sigma)|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1/2) * ||h||_1 for any Hermitian operator (no trace or positivity
/// requirement).
double half_trace_norm(const Matrix& hermitian);

/// <psi| rho |psi>
double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi);

}  // namespace qsslab
