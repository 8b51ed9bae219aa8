#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's distance, LIS or translocation code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

namespace oracle {

using Perm = std::vector<unsigned>; // one-line form, 1-based symbols

inline std::vector<Perm> all_perms(unsigned n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1u);
  std::vector<Perm> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// (sigma tau)(i) = sigma(tau(i)).
inline Perm compose(const Perm &sigma, const Perm &tau) {
  Perm r(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i)
    r[i] = sigma[tau[i] - 1];
  return r;
}

/// Right translocation (i, j), written out as a one-line permutation:
/// [1, ..., i-1, i+1, ..., j, i, j+1, ..., n].
inline Perm right_one_line(unsigned n, unsigned i, unsigned j) {
  Perm t;
  for (unsigned v = 1; v < i; ++v)
    t.push_back(v);
  for (unsigned v = i + 1; v <= j; ++v)
    t.push_back(v);
  t.push_back(i);
  for (unsigned v = j + 1; v <= n; ++v)
    t.push_back(v);
  return t;
}

/// Left translocation (i, j), i < j, written out as a one-line permutation:
/// [1, ..., i-1, j, i, ..., j-1, j+1, ..., n].
inline Perm left_one_line(unsigned n, unsigned i, unsigned j) {
  Perm t;
  for (unsigned v = 1; v < i; ++v)
    t.push_back(v);
  t.push_back(j);
  for (unsigned v = i; v < j; ++v)
    t.push_back(v);
  for (unsigned v = j + 1; v <= n; ++v)
    t.push_back(v);
  return t;
}

inline std::vector<Perm> all_translocation_perms(unsigned n) {
  std::vector<Perm> out;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      out.push_back(right_one_line(n, i, j));
      out.push_back(left_one_line(n, i, j));
    }
  return out;
}

/// BFS distances from `source` in the Cayley graph generated by translocations
/// (acting on the right: sigma -> sigma t).
inline std::map<Perm, unsigned> bfs(const Perm &source) {
  const auto gens = all_translocation_perms(static_cast<unsigned>(source.size()));
  std::map<Perm, unsigned> dist{{source, 0}};
  std::queue<Perm> q;
  q.push(source);
  while (!q.empty()) {
    const Perm u = q.front();
    q.pop();
    for (const auto &t : gens) {
      Perm v = compose(u, t);
      if (dist.emplace(v, dist[u] + 1).second)
        q.push(std::move(v));
    }
  }
  return dist;
}

/// Textbook O(n^2) dynamic-programming LCS.
inline unsigned lcs_dp(const Perm &a, const Perm &b) {
  std::vector<std::vector<unsigned>> t(a.size() + 1, std::vector<unsigned>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
  return t[a.size()][b.size()];
}

/// LIS by checking every subset of positions.
inline unsigned lis_brute(const Perm &p) {
  unsigned best = 0;
  const unsigned n = static_cast<unsigned>(p.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    unsigned last = 0, len = 0;
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i)
      if (mask >> i & 1u) {
        ok = p[i] > last;
        last = p[i];
        ++len;
      }
    if (ok)
      best = std::max(best, len);
  }
  return best;
}

/// Exact LIS-length histogram over S_n using the brute-force LIS.
inline std::vector<std::uint64_t> lis_histogram(unsigned n) {
  std::vector<std::uint64_t> h(n + 1, 0);
  for (const auto &p : all_perms(n))
    ++h[lis_brute(p)];
  return h;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace oracle
