#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulam/bounds.hpp"
#include "ulam/budget.hpp"
#include "ulam/permutation.hpp"

namespace ulam {

/// A set of permutations with a certified minimum Ulam distance.
struct Code {
  CodeParams params;
  std::vector<Permutation> words; ///< sorted, distinct
  /// Exact pairwise minimum; n when the code has fewer than two words.
  std::size_t min_distance = 0;

  std::size_t size() const { return words.size(); }
};

/// Raised by verify_code; names the closest offending pair.
class CodeViolation : public std::runtime_error {
public:
  CodeViolation(const std::string &what, Permutation first, Permutation second, std::size_t distance)
      : std::runtime_error(what), first(std::move(first)), second(std::move(second)), distance(distance) {}

  Permutation first;
  Permutation second;
  std::size_t distance;
};

/// Relative order of the symbols 1..n-d+1 in a permutation's one-line form.
struct ColorClass {
  Permutation pattern;

  friend bool operator==(const ColorClass &, const ColorClass &) = default;
};

/// DomainError for d = 1, where every class would be a single permutation.
ColorClass color_class(const Permutation &sigma, const CodeParams &params);

/**
 * Computes the exact pairwise minimum distance of `words`. Throws
 * CodeViolation naming the closest pair if it is below params.d,
 * DimensionError on a length mismatch and std::invalid_argument for an
 * empty set or duplicates.
 */
Code verify_code(std::vector<Permutation> words, const CodeParams &params);

/**
 * Certifies that no two words share a subsequence of length n - d + 1,
 * which is equivalent to pairwise distance >= d, in O(|C| C(n, d-1)) hash
 * lookups. Returns the first clashing pair, if any.
 */
std::optional<std::pair<std::size_t, std::size_t>> find_shared_subsequence(const std::vector<Permutation> &words,
                                                                           const CodeParams &params);

/// {sigma : maj(sigma) = 0 mod n}, a code of size (n-1)! with minimum distance 2.
std::vector<Permutation> major_index_code(unsigned n);

/// Code file: "n d" then one permutation per line.
void write_code(std::ostream &out, const CodeParams &params, const std::vector<Permutation> &words);

struct CodeFile {
  CodeParams params;
  std::vector<Permutation> words;
};

CodeFile read_code(std::istream &in);

enum class Optimality { proven_maximum, lower_bound_only };

const char *to_string(Optimality o);

struct SearchResult {
  Code code;
  Optimality optimality = Optimality::lower_bound_only;
  BigInt upper_bound_used;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

enum class SingletonVerdict { exists, does_not_exist, unknown };

const char *to_string(SingletonVerdict v);

struct SingletonSearchResult {
  SingletonVerdict verdict = SingletonVerdict::unknown;
  std::optional<Code> code;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

/// Largest n accepted by the searches.
inline constexpr unsigned kDefaultSearchLimit = 9;

/**
 * Looks for a code of size (n - d + 1)! with the identity as a codeword.
 *
 * Such a code takes exactly one word per color class and no two words share a
 * subsequence of length n - d + 1; since the counts match, every ordered
 * (n - d + 1)-tuple of distinct symbols then occurs in exactly one word. The
 * search is Algorithm X over those tuples. Non-existence is reported only
 * after the whole tree is exhausted.
 */
SingletonSearchResult find_singleton_optimal(const CodeParams &params, const Budget &budget);

struct SearchOptions {
  /// Fix the identity as a codeword (no loss of generality by left-invariance).
  bool fix_identity = true;
  /// Visit classes in this order (a permutation of 0..(n-d+1)!-1, by pattern rank).
  std::optional<std::vector<std::size_t>> class_order;
  /// Externally known upper bound on A(n, d), e.g. the integer-program bound.
  std::optional<BigInt> upper_bound;
  /// Run find_singleton_optimal first when the upper bound equals the Singleton bound.
  bool try_singleton_first = true;
  /// Also bound by pattern counts over every (n-d+1)-subset of symbols, not just 1..n-d+1.
  bool subset_bound = true;
  unsigned limit = kDefaultSearchLimit;
};

/**
 * Branch and bound for a largest (n, d) code taking at most one word from
 * each color class, in a fixed class order.
 *
 * Pruned by the number of classes still holding a compatible candidate and by
 * the best analytic upper bound. Returns proven_maximum only after the tree is
 * exhausted or the upper bound is met. d = 2 is answered by major_index_code.
 */
SearchResult max_code_search(const CodeParams &params, const Budget &budget, const SearchOptions &options = {});

/// One (n, d) cell of the reproduced tables.
struct TableCell {
  unsigned n = 0;
  unsigned d = 0;
  enum class Status { proven, lower_bound, skipped };
  Status status = Status::skipped;
  BigInt value;       ///< exact A(n, d) when proven, else the best size found
  BigInt upper_bound; ///< best upper bound known for the cell
  SingletonVerdict singleton = SingletonVerdict::unknown;
  std::string method; ///< "construction" or "search"
  std::uint64_t nodes = 0;
};

struct TableOptions {
  unsigned n_min = 4;
  unsigned n_max = 6;
  unsigned d_min = 2;
  unsigned d_max = 0; ///< 0 = n - 1 for each row
  Budget cell_budget{0, 120.0};
  /// Full proofs are attempted for n <= 6 and for n = 7, d >= 5; other cells
  /// get `bounded_budget` unless this is set.
  bool long_run = false;
  Budget bounded_budget{0, 10.0};
  bool with_ip = true;
  /// Separate, shorter limit for the integer program; it can stall at the LP value.
  Budget ip_budget{0, 20.0};
};

struct TableReport {
  std::vector<TableCell> cells;
};

TableReport reproduce_tables(const TableOptions &options);

/// Size cell "24=", "59≥", or "?".
std::string format_size_cell(const TableCell &cell);
/// "yes", "no" or "?".
std::string format_verdict_cell(const TableCell &cell);

std::string table_text(const TableReport &report);
std::string table_csv(const TableReport &report);

} // namespace ulam
