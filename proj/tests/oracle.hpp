#pragma once

// Reference computations used only by tests. Nothing here calls into the
// library's partial trace, eigensolver, or GF(2) rank code.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qsslab/linalg.hpp"

namespace oracle {

using cd = std::complex<double>;

// Codewords in the LaTeX form they were published in, copied character for
// character. parse_ket_sum turns them into amplitude maps.
inline const char* kCodeword0Display =
    R"(\ket{00000} + \ket{10010} + \ket{01001} + \ket{10100}  \\
& & \mbox{} + \ket{01010} - \ket{11011} - \ket{00110} - \ket{11000} \\
& & \mbox{} - \ket{11101} - \ket{00011} - \ket{11110} - \ket{01111} \\
& & \mbox{} - \ket{10001} - \ket{01100} - \ket{10111} + \ket{00101},)";

inline const char* kCodeword1Display =
    R"(\ket{11111} + \ket{01101} + \ket{10110} + \ket{01011}  \\
& & \mbox{} + \ket{10101} - \ket{00100} - \ket{11001} - \ket{00111}  \\
& & \mbox{} - \ket{00010} - \ket{11100} - \ket{00001} - \ket{10000} \\
& & \mbox{} - \ket{01110} - \ket{10011} - \ket{01000} + \ket{11010}.)";

/// ket label -> signed coefficient (unnormalized).
inline std::map<std::string, int> parse_ket_sum(const std::string& text) {
  std::map<std::string, int> terms;
  int sign = +1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') sign = +1;
    if (text[i] == '-') sign = -1;
    if (text.compare(i, 5, "\\ket{") == 0) {
      const std::size_t close = text.find('}', i);
      terms[text.substr(i + 5, close - i - 5)] += sign;
      i = close;
    }
  }
  return terms;
}

/// Dense amplitude vector indexed by ket label read as a binary number,
/// normalized by the explicit sum of squares.
inline std::vector<cd> amplitudes_from_display(const char* display) {
  const auto terms = parse_ket_sum(display);
  std::vector<cd> amps(32);
  double norm2 = 0.0;
  for (const auto& [label, coeff] : terms) norm2 += coeff * coeff;
  for (const auto& [label, coeff] : terms)
    amps[std::stoul(label, nullptr, 2)] = coeff / std::sqrt(norm2);
  return amps;
}

inline std::string ket_label(std::size_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q)
    if ((index >> (n - 1 - q)) & 1U) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

/// Partial trace by comparing ket labels: keep holds 1-based qubit positions.
inline Eigen::MatrixXcd partial_trace(const std::vector<cd>& ket, const std::vector<cd>& bra,
                                      const std::vector<int>& keep, int n) {
  const std::size_t d = std::size_t{1} << keep.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
  auto split = [&](const std::string& label, std::string& kept, std::string& rest) {
    kept.clear();
    rest.clear();
    for (int q = 1; q <= n; ++q) {
      const bool k = std::find(keep.begin(), keep.end(), q) != keep.end();
      (k ? kept : rest) += label[static_cast<std::size_t>(q - 1)];
    }
  };
  std::string kx, rx, ky, ry;
  for (std::size_t x = 0; x < ket.size(); ++x) {
    split(ket_label(x, n), kx, rx);
    for (std::size_t y = 0; y < bra.size(); ++y) {
      split(ket_label(y, n), ky, ry);
      if (rx != ry) continue;
      const auto row = kx.empty() ? 0 : std::stoul(kx, nullptr, 2);
      const auto col = ky.empty() ? 0 : std::stoul(ky, nullptr, 2);
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          ket[x] * std::conj(bra[y]);
    }
  }
  return out;
}

inline Eigen::MatrixXcd to_eigen(const qsslab::Matrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

/// Descending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline double entropy_bits(const Eigen::MatrixXcd& rho) {
  double s = 0.0;
  for (double l : eigenvalues(rho))
    if (l > 1e-12) s -= l * std::log2(l);
  return s;
}

inline double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  double s = 0.0;
  for (double l : eigenvalues(a - b)) s += std::abs(l);
  return 0.5 * s;
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

inline qsslab::Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  qsslab::Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cd(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Haar-random pair (alpha0, alpha1).
inline std::pair<cd, cd> random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  cd a(g(rng), g(rng));
  cd b(g(rng), g(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

// ---- GF(2) linear schemes -------------------------------------------------

/// Qualified iff the secret unit vector e0 lies in the row span of the
/// share vectors of the subset; found by enumerating all 2^|B| combinations.
inline bool qualified_by_rows(const std::vector<std::uint32_t>& vectors, std::uint32_t members) {
  std::vector<std::uint32_t> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if ((members >> i) & 1U) rows.push_back(vectors[i]);
  for (std::uint32_t c = 1; c < (1U << rows.size()); ++c) {
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < rows.size(); ++t)
      if ((c >> t) & 1U) acc ^= rows[t];
    if (acc == 1U) return true;
  }
  return false;
}

/// Unpruned enumeration of every scheme with exactly m randomness bits;
/// returns the number realizing the (k, n) threshold structure.
inline std::uint64_t count_threshold_schemes(int n, int k, int m) {
  const std::uint32_t per_share = 1U << (m + 1);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= per_share;
  std::uint64_t found = 0;
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % per_share);
      c /= per_share;
    }
    bool ok = true;
    for (std::uint32_t s = 1; s < (1U << n) && ok; ++s)
      ok = qualified_by_rows(v, s) == (std::popcount(s) >= k);
    found += ok;
  }
  return found;
}

}  // namespace oracle
