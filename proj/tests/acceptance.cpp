// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qsslab/access_analysis.hpp"
#include "qsslab/classical_bound.hpp"
#include "qsslab/code5.hpp"
#include "qsslab/errors.hpp"
#include "qsslab/quantum_core.hpp"

using namespace qsslab;

namespace {

constexpr double kTol = 1e-9;
constexpr std::uint64_t kSeed = 20171019;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<ShareSubset> subsets_where(const std::function<bool(const ShareSubset&)>& pred) {
  std::vector<ShareSubset> out;
  for (const ShareSubset& j : ShareSubset::all_nonempty(5))
    if (pred(j)) out.push_back(j);
  return out;
}

std::vector<code5::QubitSecret> random_secrets(int count, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<code5::QubitSecret> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex a(g(rng), g(rng));
    const Complex b(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    out.emplace_back(a / n, b / n);
  }
  return out;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome unqualified_secrecy() {
  const auto start = Clock::now();
  const auto small = subsets_where([](const ShareSubset& j) { return j.size() <= 2; });
  double worst_holevo = 0.0;
  double worst_td = 0.0;
  for (const SecretPrior& prior : standard_priors())
    for (const ShareSubset& j : small) {
      worst_holevo = std::max(worst_holevo, std::abs(holevo_information(j, prior)));
      worst_td = std::max(worst_td, share_trace_distance(j));
    }
  const double t = seconds_since(start);
  const bool pass = small.size() == 15 && worst_holevo <= kTol && worst_td <= kTol && t < 1.0;
  return {pass, std::to_string(small.size()) + " subsets x 3 priors, max holevo " +
                    fmt(worst_holevo) + ", max trace distance " + fmt(worst_td) + ", " + fmt(t) +
                    " s"};
}

Outcome qualified_reconstruction() {
  const auto start = Clock::now();
  const auto big = subsets_where([](const ShareSubset& j) { return j.size() >= 3; });
  double min_td = 1.0;
  double min_success = 1.0;
  bool guesses_ok = true;
  for (const ShareSubset& j : big) {
    min_td = std::min(min_td, share_trace_distance(j));
    for (int s : {0, 1}) {
      const auto r = reconstruct_classical(j, share_state(s, j));
      min_success = std::min(min_success, r.success_probability);
      guesses_ok = guesses_ok && r.guess == s;
    }
  }
  const double t = seconds_since(start);
  const bool pass = big.size() == 16 && min_td >= 1 - kTol && min_success >= 1 - kTol &&
                    guesses_ok && t < 1.0;
  return {pass, std::to_string(big.size()) + " subsets, min trace distance " + fmt(min_td) +
                    ", min success " + fmt(min_success) + (guesses_ok ? "" : ", WRONG GUESS") +
                    ", " + fmt(t) + " s"};
}

Outcome threshold_structure() {
  const AccessReport r = access_structure_report();
  std::size_t agree = 0;
  for (const auto& v : r.verdicts)
    agree += (v.classification == Classification::Qualified) == (v.subset.size() >= 3);
  const bool pass = r.verdicts.size() == 31 && agree == 31 && r.is_threshold(3);
  return {pass, std::to_string(agree) + "/31 subsets match, threshold flag " +
                    (r.is_threshold(3) ? "true" : "false")};
}

Outcome distance_certificate() {
  const code5::DistanceReport r = code5::verify_distance(3);
  double low_dev = 0.0;
  for (const auto& w : r.weights)
    if (w.weight <= 2) low_dev = std::max({low_dev, w.max_off_diagonal, w.max_diagonal_difference});
  const int weight3_violations = r.weights.at(2).violations;
  const bool pass = low_dev <= kTol && weight3_violations > 0 && r.distance == 3;
  return {pass, "max deviation at weight <= 2: " + fmt(low_dev) + ", weight-3 violations " +
                    std::to_string(weight3_violations) + " (e.g. " +
                    r.weights.at(2).first_violation.value_or("-") + ")"};
}

Outcome quantum_reconstruction() {
  std::mt19937_64 rng(kSeed);
  const auto secrets = random_secrets(20, rng);
  const std::vector<ShareSubset> qualified = {
      {1, 2, 3}, {2, 4, 5}, {1, 3, 5}, {1, 2, 4, 5}, ShareSubset::full(5)};
  const auto pairs = subsets_where([](const ShareSubset& j) { return j.size() == 2; });
  double min_fidelity = 1.0;
  int unqualified_errors = 0;
  int expected_errors = 0;
  for (const auto& secret : secrets) {
    const PureState encoded = code5::encode_quantum(secret);
    for (const ShareSubset& j : qualified)
      min_fidelity =
          std::min(min_fidelity, *reconstruct_quantum(j, reduced_state(encoded, j), secret).fidelity);
    for (const ShareSubset& j : pairs) {
      ++expected_errors;
      try {
        reconstruct_quantum(j, reduced_state(encoded, j), secret);
      } catch (const UnqualifiedError&) {
        ++unqualified_errors;
      }
    }
  }
  const bool pass = min_fidelity >= 1 - kTol && unqualified_errors == expected_errors;
  return {pass, "20 secrets x 5 subsets, min fidelity 1 - " + fmt(1 - min_fidelity) +
                    ", Unqualified errors " + std::to_string(unqualified_errors) + "/" +
                    std::to_string(expected_errors)};
}

Outcome superposition_secrecy() {
  std::mt19937_64 rng(kSeed + 1);
  const auto secrets = random_secrets(20, rng);
  const PureState reference = code5::encode_quantum({1.0, 0.0});
  const auto small = subsets_where([](const ShareSubset& j) { return j.size() <= 2; });
  double worst = 0.0;
  for (const auto& secret : secrets) {
    const PureState encoded = code5::encode_quantum(secret);
    for (const ShareSubset& j : small)
      worst = std::max(worst, max_abs_diff(reduced_state(encoded, j).matrix(),
                                           reduced_state(reference, j).matrix()));
  }
  return {worst <= kTol, "20 secrets x 15 subsets, max element deviation " + fmt(worst)};
}

Outcome classical_contrast() {
  const auto start = Clock::now();
  const auto none = classical::search_linear_schemes(5, 3, 5);
  const double t_none = seconds_since(start);
  const auto start_pos = Clock::now();
  const auto xor_scheme = classical::search_linear_schemes(2, 2, 2);
  const double t_pos = seconds_since(start_pos);
  const auto bound = classical::check_bound({5, 3, {2, 2, 2, 2, 2}});
  const bool pass = !none.found && none.nodes_visited > 0 && t_none <= 600.0 && xor_scheme.found &&
                    xor_scheme.witness.has_value() && t_pos < 1.0 && !bound.satisfied &&
                    bound.mean_share_size == 2.0 && bound.bound == 4;
  return {pass, "(3,5): " + std::string(none.found ? "FOUND" : "none") + " after " +
                    std::to_string(none.nodes_visited) + " nodes (" + fmt(t_none) +
                    " s); (2,2): " + (xor_scheme.found ? "witness" : "NONE") + " (" +
                    fmt(t_pos) + " s); mean share size " + fmt(bound.mean_share_size) +
                    " < n-k+2 = " + std::to_string(bound.bound)};
}

Outcome property_suites() {
  // Holevo monotonicity along every inclusion J subset of J'.
  int monotone_failures = 0;
  int dichotomy_failures = 0;
  for (const SecretPrior& prior : standard_priors()) {
    const AccessReport r = access_structure_report(prior);
    for (const auto& a : r.verdicts) {
      if (!(a.trace_dist <= kTol || a.trace_dist >= 1 - kTol)) ++dichotomy_failures;
      for (const auto& b : r.verdicts)
        if (a.subset.is_subset_of(b.subset) && a.holevo_bits > b.holevo_bits + kTol)
          ++monotone_failures;
    }
  }

  std::mt19937_64 rng(kSeed + 2);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_hermitian = [&](std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = g(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = Complex(g(rng), g(rng));
        m(j, i) = std::conj(m(i, j));
      }
    }
    return m;
  };

  double worst_additivity = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double p = u(rng);
    const std::vector<double> a = {p, 1 - p};
    const std::vector<double> b = {u(rng), u(rng), u(rng), u(rng)};
    const double bsum = b[0] + b[1] + b[2] + b[3];
    const std::vector<double> bn = {b[0] / bsum, b[1] / bsum, b[2] / bsum, b[3] / bsum};
    const Matrix basis = eigen_hermitian(random_hermitian(4)).vectors;
    const Matrix rho = Matrix::diagonal(a);
    const Matrix sigma = basis * Matrix::diagonal(bn) * basis.adjoint();
    const double lhs = von_neumann_entropy(DensityMatrix(kron(rho, sigma)));
    const double rhs =
        von_neumann_entropy(DensityMatrix(rho)) + von_neumann_entropy(DensityMatrix(sigma));
    worst_additivity = std::max(worst_additivity, std::abs(lhs - rhs));
  }

  double worst_residual = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = random_hermitian(4);
    worst_residual = std::max(worst_residual, max_abs_diff(eigen_hermitian(m).reconstruct(), m));
  }

  const bool pass = monotone_failures == 0 && dichotomy_failures == 0 &&
                    worst_additivity <= kTol && worst_residual <= kTol;
  return {pass, "monotonicity failures " + std::to_string(monotone_failures) +
                    ", dichotomy failures " + std::to_string(dichotomy_failures) +
                    ", additivity error " + fmt(worst_additivity) + ", eigen residual " +
                    fmt(worst_residual)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 unqualified-set secrecy", unqualified_secrecy},
      {"2 qualified-set reconstruction", qualified_reconstruction},
      {"3 threshold structure", threshold_structure},
      {"4 distance certificate", distance_certificate},
      {"5 quantum-secret reconstruction", quantum_reconstruction},
      {"6 superposition secrecy", superposition_secrecy},
      {"7 classical contrast", classical_contrast},
      {"8 property suites", property_suites},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] AC%s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
