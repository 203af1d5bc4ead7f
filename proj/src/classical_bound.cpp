#include "qsslab/classical_bound.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <string>
#include <thread>

#include "qsslab/errors.hpp"

namespace qsslab::classical {

void ThresholdParams::validate() const {
  if (k < 1 || k > n) throw DomainError("ThresholdParams: need 1 <= k <= n");
  if (static_cast<int>(share_sizes.size()) != n) {
    throw DomainError("ThresholdParams: expected " + std::to_string(n) + " share sizes, got " +
                      std::to_string(share_sizes.size()));
  }
  for (int q : share_sizes)
    if (q < 2) throw DomainError("ThresholdParams: share sizes must be at least 2");
}

BoundReport check_bound(const ThresholdParams& params) {
  params.validate();
  BoundReport r;
  r.mean_share_size =
      std::accumulate(params.share_sizes.begin(), params.share_sizes.end(), 0.0) / params.n;
  r.bound = params.n - params.k + 2;
  r.satisfied = r.mean_share_size >= r.bound;
  return r;
}

LinearScheme::LinearScheme(int randomness_bits, std::vector<std::uint32_t> vectors)
    : m_(randomness_bits), vectors_(std::move(vectors)) {
  if (m_ < 0 || m_ > 30) throw DomainError("LinearScheme: randomness bits must be in 0..30");
  if (vectors_.empty() || vectors_.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw DomainError("LinearScheme: share count must be in 1..5");
  }
  for (std::uint32_t v : vectors_)
    if (v >> (m_ + 1)) throw DomainError("LinearScheme: vector longer than 1 + m bits");
}

std::vector<int> LinearScheme::shares(int secret, std::uint32_t randomness) const {
  const std::uint32_t input = (randomness << 1) | static_cast<std::uint32_t>(secret & 1);
  std::vector<int> out;
  out.reserve(vectors_.size());
  for (std::uint32_t v : vectors_) out.push_back(std::popcount(v & input) & 1);
  return out;
}

bool qualified_by_columns(const std::vector<std::uint32_t>& vectors, std::uint32_t members,
                          int m) {
  // Column masks over participant positions.
  auto column = [&](int t) {
    std::uint32_t col = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (((members >> i) & 1U) && ((vectors[i] >> t) & 1U)) col |= std::uint32_t{1} << i;
    return col;
  };
  // XOR basis indexed by leading bit.
  std::uint32_t basis[32] = {};
  auto reduce = [&](std::uint32_t x) {
    while (x) {
      const int lead = std::bit_width(x) - 1;
      if (!basis[lead]) return x;
      x ^= basis[lead];
    }
    return x;
  };
  for (int t = 1; t <= m; ++t) {
    const std::uint32_t r = reduce(column(t));
    if (r) basis[std::bit_width(r) - 1] = r;
  }
  return reduce(column(0)) != 0;
}

SubsetStatus scheme_subset_status(const LinearScheme& scheme, const ShareSubset& subset) {
  if (subset.max_member() > scheme.n()) {
    throw DomainError("scheme_subset_status: subset " + subset.to_string() + " exceeds " +
                      std::to_string(scheme.n()) + " shares");
  }
  return qualified_by_columns(scheme.vectors(), subset.mask(), scheme.randomness_bits())
             ? SubsetStatus::Qualified
             : SubsetStatus::Unqualified;
}

namespace {

struct PartitionResult {
  std::uint64_t nodes = 0;
  std::uint64_t schemes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t witnesses = 0;
  std::optional<std::vector<std::uint32_t>> first_witness;
};

class Enumerator {
 public:
  Enumerator(int n, int k, int m, bool prune) : n_(n), k_(k), m_(m), prune_(prune) {
    vectors_.assign(static_cast<std::size_t>(n), 0);
    // Subsets whose largest member is share i, grouped by i.
    newest_.resize(static_cast<std::size_t>(n));
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s)
      newest_[static_cast<std::size_t>(std::bit_width(s) - 1)].push_back(s);
  }

  PartitionResult run_first_vector(std::uint32_t v0) {
    result_ = {};
    visit(0, v0);
    return result_;
  }

 private:
  bool status_ok(std::uint32_t subset) const {
    const bool want = std::popcount(subset) >= k_;
    return qualified_by_columns(vectors_, subset, m_) == want;
  }

  bool subsets_ok(std::size_t share) const {
    for (std::uint32_t s : newest_[share])
      if (!status_ok(s)) return false;
    return true;
  }

  void visit(std::size_t share, std::uint32_t v) {
    vectors_[share] = v;
    ++result_.nodes;
    const bool last = share + 1 == static_cast<std::size_t>(n_);
    if (last) ++result_.schemes;

    if (prune_ && !subsets_ok(share)) {
      if (!last) ++result_.pruned;
      return;
    }
    if (last) {
      bool ok = true;
      if (!prune_)
        for (std::size_t i = 0; i < vectors_.size() && ok; ++i) ok = subsets_ok(i);
      if (ok) {
        ++result_.witnesses;
        if (!result_.first_witness) result_.first_witness = vectors_;
      }
      return;
    }
    const std::uint32_t count = std::uint32_t{1} << (m_ + 1);
    for (std::uint32_t next = 0; next < count; ++next) visit(share + 1, next);
  }

  int n_;
  int k_;
  int m_;
  bool prune_;
  std::vector<std::uint32_t> vectors_;
  std::vector<std::vector<std::uint32_t>> newest_;
  PartitionResult result_;
};

}  // namespace

SearchReport search_linear_schemes(int n, int k, int max_randomness, const SearchOptions& options) {
  if (n < 1 || n > 5) throw DomainError("search_linear_schemes: n must be in 1..5");
  if (k < 1 || k > n) throw DomainError("search_linear_schemes: k must be in 1..n");
  if (max_randomness < 0 || max_randomness > 5) {
    throw DomainError("search_linear_schemes: max randomness must be in 0..5");
  }
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1U, workers);

  SearchReport report;
  report.n = n;
  report.k = k;
  report.max_randomness = max_randomness;

  for (int m = 0; m <= max_randomness && !report.found; ++m) {
    const std::uint32_t first_values = std::uint32_t{1} << (m + 1);
    const unsigned used = std::min<unsigned>(workers, first_values);
    // Worker w takes first-share vectors w, w + used, ...; results are kept
    // per vector so the merge is independent of scheduling.
    std::vector<std::future<std::vector<PartitionResult>>> jobs;
    for (unsigned w = 0; w < used; ++w) {
      jobs.push_back(std::async(std::launch::async, [=, &options] {
        Enumerator e(n, k, m, options.prune);
        std::vector<PartitionResult> parts;
        for (std::uint32_t v0 = w; v0 < first_values; v0 += used)
          parts.push_back(e.run_first_vector(v0));
        return parts;
      }));
    }
    std::vector<PartitionResult> by_vector(first_values);
    for (unsigned w = 0; w < used; ++w) {
      auto parts = jobs[w].get();
      for (std::size_t i = 0; i < parts.size(); ++i) by_vector[w + i * used] = std::move(parts[i]);
    }
    for (auto& part : by_vector) {
      report.nodes_visited += part.nodes;
      report.schemes_enumerated += part.schemes;
      report.pruned += part.pruned;
      report.witnesses += part.witnesses;
      if (part.first_witness && !report.witness) {
        report.witness = LinearScheme(m, std::move(*part.first_witness));
        report.found = true;
      }
    }
  }
  return report;
}

}  // namespace qsslab::classical
