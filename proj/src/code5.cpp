#include "qsslab/code5.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsslab/errors.hpp"

namespace qsslab::code5 {

namespace {

// Codeword expansions, term order as written in the display of the two states.
constexpr CodewordTable kZero = {{
    {"00000", +1}, {"10010", +1}, {"01001", +1}, {"10100", +1},
    {"01010", +1}, {"11011", -1}, {"00110", -1}, {"11000", -1},
    {"11101", -1}, {"00011", -1}, {"11110", -1}, {"01111", -1},
    {"10001", -1}, {"01100", -1}, {"10111", -1}, {"00101", +1},
}};

constexpr CodewordTable kOne = {{
    {"11111", +1}, {"01101", +1}, {"10110", +1}, {"01011", +1},
    {"10101", +1}, {"00100", -1}, {"11001", -1}, {"00111", -1},
    {"00010", -1}, {"11100", -1}, {"00001", -1}, {"10000", -1},
    {"01110", -1}, {"10011", -1}, {"01000", -1}, {"11010", +1},
}};

std::size_t ket_index(std::string_view bits) {
  std::size_t index = 0;
  for (char c : bits) index = (index << 1) | static_cast<std::size_t>(c == '1');
  return index;
}

const PureState& codeword(int bit) {
  static const PureState zero = encode_classical(0);
  static const PureState one = encode_classical(1);
  return bit == 0 ? zero : one;
}

Complex expectation(const PureState& bra, const PauliOperator& p, const PureState& ket) {
  return inner_product(bra, apply_pauli(p, ket));
}

}  // namespace

const CodewordTable& codeword_table(int bit) {
  if (bit != 0 && bit != 1) throw DomainError("secret bit must be 0 or 1");
  return bit == 0 ? kZero : kOne;
}

PureState encode_classical(int secret_bit) {
  std::vector<Complex> amps(std::size_t{1} << kNumQubits);
  for (const SignedTerm& term : codeword_table(secret_bit))
    amps[ket_index(term.bits)] = kNormalization * term.sign;
  return PureState(kNumQubits, std::move(amps));
}

QubitSecret::QubitSecret(Complex alpha0, Complex alpha1) : alpha0_(alpha0), alpha1_(alpha1) {
  const double n2 = std::norm(alpha0) + std::norm(alpha1);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw DomainError("QubitSecret: |alpha0|^2 + |alpha1|^2 = " + std::to_string(n2) +
                      ", expected 1");
  }
}

PureState encode_quantum(const QubitSecret& secret) {
  const PureState& zero = codeword(0);
  const PureState& one = codeword(1);
  std::vector<Complex> amps(zero.dim());
  for (std::size_t i = 0; i < amps.size(); ++i)
    amps[i] = secret.alpha0() * zero.amplitude(i) + secret.alpha1() * one.amplitude(i);
  return PureState(kNumQubits, std::move(amps));
}

PauliOperator::PauliOperator(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw DomainError("Pauli letters must be I, X, Y or Z: '" + letters_ + "'");
    }
    weight_ += (c != 'I');
  }
}

PureState apply_pauli(const PauliOperator& p, const PureState& psi) {
  const int n = psi.num_qubits();
  if (static_cast<int>(p.letters().size()) != n) {
    throw DomainError("apply_pauli: operator " + p.letters() + " has " +
                      std::to_string(p.letters().size()) + " letters, state has " +
                      std::to_string(n) + " qubits");
  }
  std::size_t flip = 0;
  std::size_t phase_mask = 0;
  int y_count = 0;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    switch (p.letters()[static_cast<std::size_t>(q)]) {
      case 'X': flip |= bit; break;
      case 'Z': phase_mask |= bit; break;
      case 'Y':
        flip |= bit;
        phase_mask |= bit;
        ++y_count;
        break;
      default: break;
    }
  }
  // Y = iXZ: Z acts first on the input basis state, then X, then a global i.
  Complex global = 1.0;
  for (int k = 0; k < y_count; ++k) global *= Complex(0.0, 1.0);

  std::vector<Complex> out(psi.dim());
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    const double sign = (std::popcount(x & phase_mask) & 1) ? -1.0 : 1.0;
    out[x ^ flip] = global * sign * psi.amplitude(x);
  }
  return PureState(n, std::move(out));
}

std::vector<PauliOperator> paulis_of_weight(int weight) {
  if (weight < 0 || weight > kNumQubits) throw DomainError("Pauli weight out of range");
  std::vector<PauliOperator> out;
  constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  std::string s(kNumQubits, 'I');
  // Base-4 counter over all 4^5 strings keeps the order lexicographic.
  for (int code = 0; code < (1 << (2 * kNumQubits)); ++code) {
    int w = 0;
    for (int q = 0; q < kNumQubits; ++q) {
      const int letter = (code >> (2 * (kNumQubits - 1 - q))) & 3;
      s[static_cast<std::size_t>(q)] = kLetters[letter];
      w += (letter != 0);
    }
    if (w == weight) out.emplace_back(s);
  }
  return out;
}

DistanceReport verify_distance(int max_weight) {
  if (max_weight < 1 || max_weight > kNumQubits) {
    throw DomainError("verify_distance: max_weight must be in 1..5");
  }
  const PureState& zero = codeword(0);
  const PureState& one = codeword(1);

  DistanceReport report;
  report.max_weight = max_weight;
  report.norm0 = inner_product(zero, zero).real();
  report.norm1 = inner_product(one, one).real();
  report.overlap = inner_product(zero, one);

  for (int w = 1; w <= max_weight; ++w) {
    WeightSummary summary;
    summary.weight = w;
    for (const PauliOperator& e : paulis_of_weight(w)) {
      const double off = std::abs(expectation(zero, e, one));
      const double diag = std::abs(expectation(zero, e, zero) - expectation(one, e, one));
      summary.max_off_diagonal = std::max(summary.max_off_diagonal, off);
      summary.max_diagonal_difference = std::max(summary.max_diagonal_difference, diag);
      ++summary.operators_checked;
      if (off > kKnillLaflammeTolerance || diag > kKnillLaflammeTolerance) {
        ++summary.violations;
        if (!summary.first_violation) summary.first_violation = e.letters();
      }
    }
    if (summary.violations > 0 && !report.distance) report.distance = w;
    report.weights.push_back(std::move(summary));
  }
  return report;
}

bool erasure_correctable(const ShareSubset& missing, double tolerance) {
  if (missing.empty()) return true;
  if (missing.max_member() > kNumQubits) throw DomainError("erasure set exceeds 5 qubits");
  const PureState& zero = codeword(0);
  const PureState& one = codeword(1);
  const Matrix m00 = reduced_operator(zero, zero, missing);
  const Matrix m11 = reduced_operator(one, one, missing);
  const Matrix m01 = reduced_operator(zero, one, missing);
  return max_abs_diff(m00, m11) <= tolerance && max_abs_diff(m01, Matrix(m01.dim())) <= tolerance;
}

}  // namespace qsslab::code5
