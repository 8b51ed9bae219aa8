#include "ulam/ball_lis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "ulam/errors.hpp"
#include "ulam/permutation.hpp"

namespace ulam {

std::uint64_t LisDistribution::count_at_least(unsigned k) const {
  std::uint64_t s = 0;
  for (unsigned j = std::max(k, 1u); j <= n; ++j)
    s += counts[j];
  return s;
}

namespace {

constexpr std::uint64_t kChunk = 1u << 16;

// Runs job(i) for i in [0, count) on up to `threads` workers, strided so the
// assignment of work never affects the per-index results.
template <typename Job>
void parallel_for(std::uint64_t count, unsigned threads, Job job) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(threads, 1u), count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i)
      job(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < count; i += workers)
        job(i);
    });
  for (auto &t : pool)
    t.join();
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t chunks_for(std::uint64_t samples) { return (samples + kChunk - 1) / kChunk; }

std::uint64_t chunk_size(std::uint64_t samples, std::uint64_t chunk) {
  return std::min(kChunk, samples - chunk * kChunk);
}

// Visits L(sigma) for `samples` uniform permutations of chunk `chunk`.
template <typename Visit>
void sample_chunk(unsigned n, std::uint64_t samples, std::uint64_t seed, std::uint64_t chunk, Visit visit) {
  auto rng = chunk_rng(seed, chunk);
  std::vector<Symbol> perm(n);
  std::iota(perm.begin(), perm.end(), Symbol{1});
  const std::uint64_t m = chunk_size(samples, chunk);
  for (std::uint64_t s = 0; s < m; ++s) {
    std::shuffle(perm.begin(), perm.end(), rng);
    visit(s, lis_length(perm));
  }
}

} // namespace

LisDistribution lis_distribution_exact(unsigned n, const EnumerationOptions &options) {
  if (n < 1)
    throw DomainError("n must be at least 1");
  if (n > options.limit)
    throw CapacityError("exact enumeration of S_" + std::to_string(n) + " exceeds the limit n <= " +
                        std::to_string(options.limit) + "; use the Monte Carlo estimator instead");

  // One partial histogram per leading symbol.
  std::vector<std::vector<std::uint64_t>> partial(n, std::vector<std::uint64_t>(n + 1, 0));
  parallel_for(n, options.threads, [&](std::uint64_t lead) {
    std::vector<Symbol> perm(n);
    perm[0] = static_cast<Symbol>(lead + 1);
    Symbol next = 1;
    for (unsigned i = 1; i < n; ++i) {
      if (next == perm[0])
        ++next;
      perm[i] = next++;
    }
    auto &hist = partial[lead];
    do {
      ++hist[lis_length(perm)];
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  });

  LisDistribution dist;
  dist.n = n;
  dist.kind = LisDistribution::Kind::exact;
  dist.counts.assign(n + 1, 0);
  for (const auto &hist : partial)
    for (unsigned k = 0; k <= n; ++k)
      dist.counts[k] += hist[k];
  dist.total = std::accumulate(dist.counts.begin(), dist.counts.end(), std::uint64_t{0});
  return dist;
}

LisDistribution lis_distribution_sampled(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 1 || samples < 1)
    throw DomainError("need n >= 1 and samples >= 1");
  const std::uint64_t chunks = chunks_for(samples);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(n + 1, 0));
  parallel_for(chunks, threads, [&](std::uint64_t c) {
    auto &hist = partial[c];
    sample_chunk(n, samples, seed, c, [&](std::uint64_t, std::size_t l) { ++hist[l]; });
  });
  LisDistribution dist;
  dist.n = n;
  dist.kind = LisDistribution::Kind::sampled;
  dist.counts.assign(n + 1, 0);
  for (const auto &hist : partial)
    for (unsigned k = 0; k <= n; ++k)
      dist.counts[k] += hist[k];
  dist.total = samples;
  dist.seed = seed;
  return dist;
}

void write_distribution(std::ostream &out, const LisDistribution &dist) {
  out << dist.n << ' ' << dist.total << '\n';
  for (unsigned k = 1; k <= dist.n; ++k)
    out << k << ' ' << dist.counts[k] << '\n';
}

LisDistribution read_distribution(std::istream &in) {
  LisDistribution dist;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::uint64_t a = 0, b = 0;
    if (!(ls >> a >> b))
      throw ParseError("expected two integers", lineno);
    std::string rest;
    if (ls >> rest)
      throw ParseError("trailing text '" + rest + "'", lineno);
    if (!header) {
      if (a < 1)
        throw ParseError("n must be positive", lineno);
      dist.n = static_cast<unsigned>(a);
      dist.total = b;
      dist.counts.assign(dist.n + 1, 0);
      header = true;
      continue;
    }
    if (a < 1 || a > dist.n)
      throw ParseError("length " + std::to_string(a) + " outside 1.." + std::to_string(dist.n), lineno);
    dist.counts[a] = b;
  }
  if (!header)
    throw ParseError("empty distribution file");
  if (dist.count_at_least(1) != dist.total)
    throw ParseError("counts do not sum to the stated total");
  return dist;
}

std::filesystem::path DistributionCache::path_for(unsigned n) const {
  return dir_ / ("lis_n" + std::to_string(n) + ".txt");
}

LisDistribution DistributionCache::exact(unsigned n, const EnumerationOptions &options) const {
  const auto path = path_for(n);
  if (std::ifstream in(path); in) {
    try {
      auto dist = read_distribution(in);
      if (dist.n == n && dist.total == to_uint64(factorial(n)).value_or(0))
        return dist;
    } catch (const ParseError &) {
      // Corrupt cache entry; recompute below.
    }
  }
  auto dist = lis_distribution_exact(n, options);
  std::filesystem::create_directories(dir_);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    write_distribution(out, dist);
  }
  std::filesystem::rename(tmp, path);
  return dist;
}

BallTable ball_table(const LisDistribution &exact) {
  if (exact.kind != LisDistribution::Kind::exact)
    throw std::invalid_argument("ball sizes need the exact distribution");
  BallTable t;
  t.n = exact.n;
  t.sizes.resize(exact.n);
  for (unsigned r = 0; r < exact.n; ++r)
    t.sizes[r] = exact.count_at_least(exact.n - r);
  return t;
}

std::uint64_t ball_size(unsigned n, unsigned r, const EnumerationOptions &options) {
  if (r > n - 1)
    throw DomainError("radius must lie in 0..n-1");
  return ball_table(lis_distribution_exact(n, options)).sizes[r];
}

SphereBounds sphere_packing_bounds(const CodeParams &params, const LisDistribution &exact) {
  if (exact.n != params.n())
    throw DimensionError("distribution is for a different n");
  const BallTable balls = ball_table(exact);
  const BigInt total = factorial(params.n());
  const unsigned delta = params.delta();
  SphereBounds b;
  b.lower = ceil_div(total, BigInt(static_cast<unsigned long>(balls.sizes[delta])));
  b.upper = total / BigInt(static_cast<unsigned long>(balls.sizes[delta / 2]));
  return b;
}

SphereBounds sphere_packing_bounds(const CodeParams &params, const EnumerationOptions &options) {
  return sphere_packing_bounds(params, lis_distribution_exact(params.n(), options));
}

McEstimate lis_prob_mc(unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 1 || k < 1 || k > n)
    throw DomainError("need 1 <= k <= n");
  if (samples < 1)
    throw DomainError("need at least one sample");
  const std::uint64_t chunks = chunks_for(samples);
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, threads, [&](std::uint64_t c) {
    std::uint64_t h = 0;
    sample_chunk(n, samples, seed, c, [&](std::uint64_t, std::size_t l) { h += l >= k; });
    hits[c] = h;
  });
  McEstimate est;
  est.samples = samples;
  est.hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.standard_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  return est;
}

std::vector<double> clt_samples(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 1 || samples < 1)
    throw DomainError("need n >= 1 and samples >= 1");
  std::vector<double> out(samples);
  const double centre = 2.0 * std::sqrt(static_cast<double>(n));
  const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
  parallel_for(chunks_for(samples), threads, [&](std::uint64_t c) {
    double *slice = out.data() + c * kChunk;
    sample_chunk(n, samples, seed, c,
                 [&](std::uint64_t s, std::size_t l) { slice[s] = (static_cast<double>(l) - centre) / scale; });
  });
  return out;
}

} // namespace ulam
