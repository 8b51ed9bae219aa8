#pragma once

// Flat, byte-per-symbol permutations for the exhaustive searches (n <= 9).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ulam/permutation.hpp"

namespace ulam::detail {

inline constexpr unsigned kMaxFlatN = 12;

/// Lexicographic rank of a sequence of k distinct values in 0..k-1.
inline std::uint32_t pattern_rank(const std::uint8_t *seq, unsigned k) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < k; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < k; ++j)
      smaller += seq[j] < seq[i];
    r = r * (k - i) + smaller;
  }
  return r;
}

/// Rank among the n!/(n-k)! ordered k-tuples of distinct symbols 0..n-1.
inline std::uint32_t arrangement_rank(const std::uint8_t *tuple, unsigned k, unsigned n) {
  std::uint32_t r = 0;
  std::uint32_t used = 0;
  for (unsigned i = 0; i < k; ++i) {
    const std::uint32_t below = used & ((1u << tuple[i]) - 1);
    const unsigned c = tuple[i] - static_cast<unsigned>(__builtin_popcount(below));
    r = r * (n - i) + c;
    used |= 1u << tuple[i];
  }
  return r;
}

/// LCS of two permutations of 0..n-1.
inline unsigned lcs_flat(const std::uint8_t *u, const std::uint8_t *v, unsigned n) {
  std::uint8_t pos[kMaxFlatN];
  for (unsigned i = 0; i < n; ++i)
    pos[u[i]] = static_cast<std::uint8_t>(i);
  std::uint8_t tails[kMaxFlatN];
  unsigned len = 0;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint8_t x = pos[v[i]];
    unsigned lo = 0;
    while (lo < len && tails[lo] < x)
      ++lo;
    tails[lo] = x;
    if (lo == len)
      ++len;
  }
  return len;
}

inline unsigned lis_flat(const std::uint8_t *v, unsigned n) {
  std::uint8_t tails[kMaxFlatN];
  unsigned len = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned lo = 0;
    while (lo < len && tails[lo] < v[i])
      ++lo;
    tails[lo] = v[i];
    if (lo == len)
      ++len;
  }
  return len;
}

/// Relative order of the symbols 0..k-1 in v, as a pattern rank.
inline std::uint32_t class_rank(const std::uint8_t *v, unsigned n, unsigned k) {
  std::uint8_t seq[kMaxFlatN];
  unsigned m = 0;
  for (unsigned i = 0; i < n; ++i)
    if (v[i] < k)
      seq[m++] = v[i];
  return pattern_rank(seq, k);
}

/// All permutations of 0..n-1 in lexicographic order, stored contiguously.
inline std::vector<std::uint8_t> all_permutations(unsigned n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::uint8_t> out;
  do {
    out.insert(out.end(), p.begin(), p.end());
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Permutation to_permutation(const std::uint8_t *v, unsigned n) {
  std::vector<Symbol> e(n);
  for (unsigned i = 0; i < n; ++i)
    e[i] = static_cast<Symbol>(v[i]) + 1;
  return Permutation(std::move(e));
}

inline std::vector<std::uint8_t> to_flat(const Permutation &p) {
  std::vector<std::uint8_t> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    v[i] = static_cast<std::uint8_t>(p.entries()[i] - 1);
  return v;
}

/// All k-subsets of 0..n-1 as sorted index lists, in lexicographic order.
inline std::vector<std::vector<std::uint8_t>> combinations(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> c(k);
  std::iota(c.begin(), c.end(), std::uint8_t{0});
  if (k > n)
    return out;
  for (;;) {
    out.push_back(c);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && c[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i))
      --i;
    if (i < 0)
      break;
    ++c[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j)
      c[j] = static_cast<std::uint8_t>(c[j - 1] + 1);
  }
  return out;
}

} // namespace ulam::detail
