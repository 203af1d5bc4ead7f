#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsslab/quantum_core.hpp"

namespace qsslab::classical {

/// n participants, threshold k, and the alphabet size of every share.
struct ThresholdParams {
  int n = 0;
  int k = 0;
  std::vector<int> share_sizes;

  /// Throws DomainError unless 1 <= k <= n, |share_sizes| = n, sizes >= 2.
  void validate() const;
};

struct BoundReport {
  double mean_share_size = 0.0;
  int bound = 0;  ///< n - k + 2
  bool satisfied = false;
};

/// Compares the arithmetic mean share size against n - k + 2. The bound
/// concerns schemes with a privacy requirement, i.e. k >= 2; for k = 1 the
/// report is still computed but says nothing about realizability.
BoundReport check_bound(const ThresholdParams& params);

/// Linear sharing of one secret bit s with m uniform randomness bits r over
/// GF(2). Share i is <v_i, (s, r)>, where bit 0 of v_i is the secret
/// coefficient and bit t (1 <= t <= m) the coefficient of r_t.
class LinearScheme {
 public:
  LinearScheme(int randomness_bits, std::vector<std::uint32_t> vectors);

  int n() const { return static_cast<int>(vectors_.size()); }
  int randomness_bits() const { return m_; }
  const std::vector<std::uint32_t>& vectors() const { return vectors_; }

  /// Share bits for a given secret and randomness word (bit t-1 of r is r_t).
  std::vector<int> shares(int secret, std::uint32_t randomness) const;

 private:
  int m_;
  std::vector<std::uint32_t> vectors_;
};

enum class SubsetStatus { Qualified, Unqualified };

/// Unqualified iff the secret column (a_i), i in B, lies in the GF(2) column
/// span of the randomness block (b_i), i in B. Linear schemes are perfect,
/// so the two cases exhaust. Throws DomainError for members beyond n.
SubsetStatus scheme_subset_status(const LinearScheme& scheme, const ShareSubset& subset);

/// Same criterion on raw vectors restricted to the bitmask `members`
/// (bit i-1 for participant i). Used by the search inner loop.
bool qualified_by_columns(const std::vector<std::uint32_t>& vectors, std::uint32_t members, int m);

struct SearchOptions {
  /// Reject partial assignments as soon as a fully assigned subset has the
  /// wrong status.
  bool prune = true;
  /// Number of worker threads; 0 selects hardware concurrency.
  unsigned workers = 0;
};

struct SearchReport {
  int n = 0;
  int k = 0;
  int max_randomness = 0;
  bool found = false;
  std::optional<LinearScheme> witness;
  /// Partial and complete assignments visited.
  std::uint64_t nodes_visited = 0;
  /// Complete assignments whose structure was checked.
  std::uint64_t schemes_enumerated = 0;
  /// Partial assignments cut off by pruning.
  std::uint64_t pruned = 0;
  std::uint64_t witnesses = 0;
};

/// Searches LinearSchemes with m = 0..max_randomness randomness bits for one
/// realizing the exact (k, n) threshold structure. Stops after the first m
/// that yields a witness; the reported witness is the lexicographically first
/// assignment for that m. Requires 1 <= k <= n <= 5 and 0 <= m_max <= 5.
SearchReport search_linear_schemes(int n, int k, int max_randomness,
                                   const SearchOptions& options = {});

}  // namespace qsslab::classical
