#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ulam/bounds.hpp"

namespace ulam {

/// Counts of the longest-increasing-subsequence length L_n over S_n (exact) or over samples.
struct LisDistribution {
  enum class Kind { exact, sampled };

  unsigned n = 0;
  Kind kind = Kind::exact;
  std::vector<std::uint64_t> counts; ///< counts[k] for k in 0..n; counts[0] is always 0
  std::uint64_t total = 0;
  std::optional<std::uint64_t> seed;

  std::uint64_t count(unsigned k) const { return k <= n ? counts[k] : 0; }
  /// Number of permutations (or samples) with L >= k.
  std::uint64_t count_at_least(unsigned k) const;
};

/// Largest n enumerated by default (9! = 362880 permutations).
inline constexpr unsigned kDefaultEnumerationLimit = 9;

struct EnumerationOptions {
  unsigned limit = kDefaultEnumerationLimit;
  unsigned threads = 1;
};

/**
 * Exact distribution of L_n by visiting every permutation of [n].
 * The work is split by leading symbol, so totals do not depend on `threads`.
 * Throws CapacityError above the limit.
 */
LisDistribution lis_distribution_exact(unsigned n, const EnumerationOptions &options = {});

/// Sampled distribution from `samples` uniform permutations.
LisDistribution lis_distribution_sampled(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

/// Reads/writes the plain-text form: "n total" then "k count" lines sorted by k.
void write_distribution(std::ostream &out, const LisDistribution &dist);
LisDistribution read_distribution(std::istream &in);

/// On-disk cache of exact distributions, one file per n.
class DistributionCache {
public:
  explicit DistributionCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// Loads lis_n<n>.txt if present and well-formed, otherwise enumerates and stores it.
  LisDistribution exact(unsigned n, const EnumerationOptions &options = {}) const;

  std::filesystem::path path_for(unsigned n) const;

private:
  std::filesystem::path dir_;
};

/// |B(r)| for r in 0..n-1, the number of permutations within Ulam distance r of the identity.
struct BallTable {
  unsigned n = 0;
  std::vector<std::uint64_t> sizes;
};

/// |B(r)| = #{sigma : L(sigma) >= n - r}.
BallTable ball_table(const LisDistribution &exact);

std::uint64_t ball_size(unsigned n, unsigned r, const EnumerationOptions &options = {});

struct SphereBounds {
  BigInt lower; ///< ceil(n! / |B(d - 1)|)
  BigInt upper; ///< floor(n! / |B(floor((d - 1) / 2))|)
};

SphereBounds sphere_packing_bounds(const CodeParams &params, const LisDistribution &exact);
SphereBounds sphere_packing_bounds(const CodeParams &params, const EnumerationOptions &options = {});

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/**
 * Monte-Carlo estimate of P(L_n >= k) with binomial standard error.
 * Samples are drawn in fixed-size chunks, each with its own seed derived from
 * (seed, chunk index), so the result is identical for any thread count.
 */
McEstimate lis_prob_mc(unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

/// (L_n - 2 sqrt(n)) / n^(1/6) for `samples` uniform permutations, in sample order.
std::vector<double> clt_samples(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

} // namespace ulam
