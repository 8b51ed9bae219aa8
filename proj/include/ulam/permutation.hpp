#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ulam {

using Symbol = std::uint32_t;

/**
 * An element of the symmetric group S_n in one-line notation.
 *
 * Entries are the 1-based images sigma(1), ..., sigma(n). Construction
 * validates that the entries form a bijection on [n].
 */
class Permutation {
public:
  /// Throws std::invalid_argument unless `entries` is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<Symbol> entries);

  static Permutation identity(std::size_t n);
  /// The strictly decreasing permutation [n, n-1, ..., 1].
  static Permutation reversal(std::size_t n);

  std::size_t size() const { return entries_.size(); }

  /// sigma(i) for 1-based position i.
  Symbol operator()(std::size_t i) const { return entries_[i - 1]; }

  std::span<const Symbol> entries() const { return entries_; }

  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Symbol> entries, Unchecked) : entries_(std::move(entries)) {}

  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);

  std::vector<Symbol> entries_;
};

/// Moves one symbol of the one-line form to another position.
struct Translocation {
  enum class Kind { right, left };

  Kind kind;
  std::size_t i; ///< 1-based, i < j
  std::size_t j; ///< 1-based

  /// Throws IndexError unless 1 <= i < j.
  static Translocation right(std::size_t i, std::size_t j);
  static Translocation left(std::size_t i, std::size_t j);

  /// The translocation undoing this one.
  Translocation inverse() const { return {kind == Kind::right ? Kind::left : Kind::right, i, j}; }

  friend bool operator==(const Translocation &, const Translocation &) = default;
};

/// Returns sigma*tau, i.e. the permutation i -> sigma(tau(i)). Throws DimensionError on length mismatch.
Permutation compose(const Permutation &sigma, const Permutation &tau);

Permutation inverse(const Permutation &sigma);

/**
 * Returns sigma * t, where t is the translocation in one-line form.
 *
 * For a right translocation (i, j) the symbol at position i is reinserted at
 * position j; for a left translocation (i, j) the symbol at position j is
 * reinserted at position i. The two kinds are mutual inverses.
 */
Permutation apply_translocation(const Permutation &sigma, const Translocation &t);

/// Every translocation of S_n with the right/left duplicates at j = i + 1 removed.
std::vector<Translocation> all_translocations(std::size_t n);

/// Length of a longest strictly increasing subsequence, O(n log n).
std::size_t lis_length(std::span<const Symbol> seq);
std::size_t lis_length(const Permutation &sigma);

/// Length of a longest common subsequence of two permutations of equal length.
std::size_t lcs_length(const Permutation &sigma, const Permutation &tau);

/// n - lcs_length(sigma, tau).
std::size_t ulam_distance(const Permutation &sigma, const Permutation &tau);

/// Uniform Fisher-Yates permutation driven by an mt19937_64 seeded with `seed`.
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// Uniform permutation drawn from a caller-owned generator.
Permutation random_permutation(std::size_t n, std::mt19937_64 &rng);

/// Parses "2 3 1 5 4". Throws ParseError naming the offending token or the duplicated/missing symbol.
Permutation parse_permutation(std::string_view text, std::size_t line = 0);

std::string to_string(const Permutation &sigma);

} // namespace ulam
