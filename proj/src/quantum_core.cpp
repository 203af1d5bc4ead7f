#include "qsslab/quantum_core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <string>

#include "qsslab/errors.hpp"

namespace qsslab {

namespace {

void require_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DomainError("num_qubits must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                      std::to_string(n));
  }
}

void require_length(int n, std::size_t len) {
  if (len != (std::size_t{1} << n)) {
    throw DomainError("expected " + std::to_string(std::size_t{1} << n) +
                      " amplitudes for " + std::to_string(n) + " qubits, got " +
                      std::to_string(len));
  }
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

int member_check(int m) {
  if (m < 1 || m > kMaxQubits) {
    throw DomainError("participant index " + std::to_string(m) + " outside 1.." +
                      std::to_string(kMaxQubits));
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------- PureState

PureState::PureState(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  require_qubit_count(num_qubits_);
  require_length(num_qubits_, amplitudes_.size());
  const double n2 = norm2(amplitudes_);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw DomainError("PureState: squared norm " + std::to_string(n2) + " is not 1");
  }
}

PureState PureState::normalized(int num_qubits, std::vector<Complex> amplitudes) {
  require_qubit_count(num_qubits);
  require_length(num_qubits, amplitudes.size());
  const double n = std::sqrt(norm2(amplitudes));
  if (n == 0.0 || !std::isfinite(n)) throw DomainError("PureState: cannot normalize zero vector");
  for (Complex& z : amplitudes) z /= n;
  return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, std::size_t index) {
  require_qubit_count(num_qubits);
  if (index >= (std::size_t{1} << num_qubits)) throw DomainError("basis index out of range");
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps[index] = 1.0;
  return PureState(num_qubits, std::move(amps));
}

PureState PureState::basis(std::string_view bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("ket label must be over {0,1}");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return basis(static_cast<int>(bits.size()), index);
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DomainError("inner_product: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  const std::size_t d = entries_.dim();
  if (d < 1 || !std::has_single_bit(d)) {
    throw DomainError("DensityMatrix: dimension " + std::to_string(d) + " is not a power of 2");
  }
  const double herr = hermiticity_error(entries_);
  for (const Complex& z : entries_.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("DensityMatrix: non-finite entry");
  if (herr > kNormTolerance) {
    throw DomainError("DensityMatrix: not Hermitian (deviation " + std::to_string(herr) + ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    throw DomainError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const auto values = eigenvalues_hermitian(entries_);
  if (values.back() < -kPsdTolerance) {
    throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(values.back()));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

int DensityMatrix::num_qubits() const { return std::countr_zero(entries_.dim()); }

// -------------------------------------------------------------- ShareSubset

ShareSubset::ShareSubset(std::initializer_list<int> members)
    : ShareSubset(std::span<const int>(members.begin(), members.size())) {}

ShareSubset::ShareSubset(std::span<const int> members) {
  for (int m : members) {
    const std::uint32_t bit = std::uint32_t{1} << (member_check(m) - 1);
    if (mask_ & bit) throw DomainError("duplicate participant " + std::to_string(m));
    mask_ |= bit;
  }
}

ShareSubset ShareSubset::from_mask(std::uint32_t mask) {
  if (mask >> kMaxQubits) throw DomainError("subset mask has members beyond 5");
  ShareSubset s;
  s.mask_ = mask;
  return s;
}

ShareSubset ShareSubset::full(int n) {
  require_qubit_count(n);
  return from_mask((std::uint32_t{1} << n) - 1);
}

ShareSubset ShareSubset::parse(std::string_view text) {
  std::vector<int> members;
  int current = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}') {
      if (current >= 0) members.push_back(current);
      current = -1;
    } else {
      throw DomainError("cannot parse subset '" + std::string(text) + "'");
    }
  }
  if (current >= 0) members.push_back(current);
  return ShareSubset(std::span<const int>(members));
}

std::vector<ShareSubset> ShareSubset::all_nonempty(int n) {
  require_qubit_count(n);
  std::vector<ShareSubset> out;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end(), [](const ShareSubset& a, const ShareSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::vector<int> ShareSubset::members() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxQubits; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::size_t ShareSubset::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool ShareSubset::contains(int member) const {
  return member >= 1 && member <= kMaxQubits && ((mask_ >> (member - 1)) & 1U);
}

int ShareSubset::max_member() const { return std::bit_width(mask_); }

ShareSubset ShareSubset::complement(int n) const {
  return from_mask(full(n).mask_ & ~mask_);
}

std::string ShareSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------- partial traces

Matrix reduced_operator(const PureState& ket, const PureState& bra, const ShareSubset& keep) {
  if (ket.num_qubits() != bra.num_qubits()) {
    throw DomainError("reduced_operator: ket and bra have different qubit counts");
  }
  if (keep.empty()) throw DomainError("reduced_operator: keep set is empty");
  const int n = ket.num_qubits();
  if (keep.max_member() > n) {
    throw DomainError("reduced_operator: subset " + keep.to_string() + " exceeds " +
                      std::to_string(n) + " qubits");
  }

  // Bit position (from the least significant end) of each participant.
  std::vector<int> kept_bits;
  std::vector<int> traced_bits;
  for (int q = 1; q <= n; ++q) (keep.contains(q) ? kept_bits : traced_bits).push_back(n - q);

  const std::size_t kdim = std::size_t{1} << kept_bits.size();
  const std::size_t edim = std::size_t{1} << traced_bits.size();
  auto scatter = [](std::size_t value, const std::vector<int>& bits) {
    // bits[0] receives the most significant bit of value.
    std::size_t out = 0;
    const std::size_t width = bits.size();
    for (std::size_t i = 0; i < width; ++i)
      if ((value >> (width - 1 - i)) & 1U) out |= std::size_t{1} << bits[i];
    return out;
  };

  std::vector<std::size_t> kept_index(kdim);
  std::vector<std::size_t> env_index(edim);
  for (std::size_t a = 0; a < kdim; ++a) kept_index[a] = scatter(a, kept_bits);
  for (std::size_t e = 0; e < edim; ++e) env_index[e] = scatter(e, traced_bits);

  Matrix out(kdim);
  for (std::size_t a = 0; a < kdim; ++a)
    for (std::size_t b = 0; b < kdim; ++b) {
      Complex s = 0.0;
      for (std::size_t e = 0; e < edim; ++e)
        s += ket.amplitude(kept_index[a] | env_index[e]) *
             std::conj(bra.amplitude(kept_index[b] | env_index[e]));
      out(a, b) = s;
    }
  return out;
}

DensityMatrix reduced_state(const PureState& psi, const ShareSubset& keep) {
  return DensityMatrix(reduced_operator(psi, psi, keep));
}

// ------------------------------------------------------ entropy, distances

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : eigenvalues_hermitian(rho.matrix()))
    if (lambda >= kEntropyZeroThreshold) s -= lambda * std::log2(lambda);
  return std::max(s, 0.0);
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("binary_entropy: probability outside [0,1]");
  double h = 0.0;
  for (double x : {p, 1.0 - p})
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double half_trace_norm(const Matrix& hermitian) {
  double s = 0.0;
  for (double mu : eigenvalues_hermitian(hermitian)) s += std::abs(mu);
  return 0.5 * s;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DomainError("trace_distance: dimension mismatch (" + std::to_string(rho.dim()) +
                      " vs " + std::to_string(sigma.dim()) + ")");
  }
  return std::clamp(half_trace_norm(rho.matrix() - sigma.matrix()), 0.0, 1.0);
}

double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) throw DomainError("fidelity_with_pure: dimension mismatch");
  Complex f = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      f += std::conj(psi.amplitude(i)) * rho(i, j) * psi.amplitude(j);
  return f.real();
}

}  // namespace qsslab
