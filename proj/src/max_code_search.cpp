#include <algorithm>
#include <numeric>

#include "perm_space.hpp"
#include "ulam/ball_lis.hpp"
#include "ulam/code_search.hpp"
#include "ulam/errors.hpp"

namespace ulam {

namespace {

using Bits = std::vector<std::uint64_t>;

constexpr std::size_t kAdjacencyCapBytes = std::size_t{256} << 20;
constexpr std::size_t kPatternCapBytes = std::size_t{64} << 20;

bool any_in(const Bits &bits, std::size_t begin, std::size_t end) {
  if (begin >= end)
    return false;
  std::size_t wb = begin >> 6, we = (end - 1) >> 6;
  const std::uint64_t first = ~std::uint64_t{0} << (begin & 63);
  const std::uint64_t last = ~std::uint64_t{0} >> (63 - ((end - 1) & 63));
  if (wb == we)
    return (bits[wb] & first & last) != 0;
  if (bits[wb] & first)
    return true;
  for (std::size_t w = wb + 1; w < we; ++w)
    if (bits[w])
      return true;
  return (bits[we] & last) != 0;
}

void clear_range(Bits &bits, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

template <typename F>
void for_each_bit(const Bits &bits, std::size_t begin, std::size_t end, F f) {
  for (std::size_t w = begin >> 6; w < bits.size() && (w << 6) < end; ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      const std::size_t i = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(word));
      word &= word - 1;
      if (i < begin)
        continue;
      if (i >= end)
        return;
      f(i);
    }
  }
}

class CliqueSearch {
public:
  CliqueSearch(const CodeParams &params, const SearchOptions &options, std::size_t upper, BudgetClock &clock)
      : n_(params.n()), k_(params.pattern_length()), upper_(upper), clock_(clock) {
    perms_ = detail::all_permutations(n_);
    const std::size_t total = perms_.size() / n_;
    std::uint32_t classes = 1;
    for (unsigned i = 2; i <= k_; ++i)
      classes *= i;

    std::vector<std::size_t> position_of(classes);
    if (options.class_order) {
      const auto &order = *options.class_order;
      if (order.size() != classes)
        throw std::invalid_argument("class order must list every class once");
      std::vector<bool> seen(classes, false);
      for (std::size_t p = 0; p < classes; ++p) {
        if (order[p] >= classes || seen[order[p]])
          throw std::invalid_argument("class order must list every class once");
        seen[order[p]] = true;
        position_of[order[p]] = p;
      }
    } else {
      std::iota(position_of.begin(), position_of.end(), std::size_t{0});
    }

    // Candidates sorted by class position, then lexicographically.
    std::vector<std::pair<std::size_t, std::uint32_t>> keyed;
    for (std::size_t i = 0; i < total; ++i) {
      const std::uint8_t *p = &perms_[i * n_];
      if (options.fix_identity && detail::lis_flat(p, n_) >= k_)
        continue;
      keyed.emplace_back(position_of[detail::class_rank(p, n_, k_)], static_cast<std::uint32_t>(i));
    }
    std::sort(keyed.begin(), keyed.end());
    class_begin_.assign(classes + 1, keyed.size());
    for (std::size_t c = keyed.size(); c-- > 0;)
      class_begin_[keyed[c].first] = c;
    for (std::size_t p = classes; p-- > 0;)
      class_begin_[p] = std::min(class_begin_[p], class_begin_[p + 1]);
    for (const auto &kv : keyed)
      cand_.push_back(kv.second);

    words_ = (cand_.size() + 63) / 64;
    cache_rows_ = cand_.size() * words_ * 8 <= kAdjacencyCapBytes;
    if (cache_rows_)
      rows_.resize(cand_.size());

    if (options.subset_bound && k_ < n_) {
      subsets_ = detail::combinations(n_, k_);
      if (subsets_.size() * cand_.size() * 2 <= kPatternCapBytes) {
        patterns_.resize(subsets_.size() * cand_.size());
        for (std::size_t s = 0; s < subsets_.size(); ++s) {
          std::uint8_t rank_in_subset[detail::kMaxFlatN];
          std::fill(std::begin(rank_in_subset), std::end(rank_in_subset), std::uint8_t{0xff});
          for (unsigned i = 0; i < k_; ++i)
            rank_in_subset[subsets_[s][i]] = static_cast<std::uint8_t>(i);
          for (std::size_t c = 0; c < cand_.size(); ++c) {
            const std::uint8_t *p = &perms_[cand_[c] * std::size_t{n_}];
            std::uint8_t seq[detail::kMaxFlatN];
            unsigned m = 0;
            for (unsigned i = 0; i < n_; ++i)
              if (rank_in_subset[p[i]] != 0xff)
                seq[m++] = rank_in_subset[p[i]];
            patterns_[s * cand_.size() + c] = static_cast<std::uint16_t>(detail::pattern_rank(seq, k_));
          }
        }
        seen_.assign((classes + 63) / 64, 0);
      } else {
        subsets_.clear();
      }
    }
  }

  void seed_incumbent(std::size_t fixed) {
    fixed_ = fixed;
    // Greedy: first compatible member of each class in order.
    Bits rem(words_, 0);
    for (std::size_t i = 0; i < cand_.size(); ++i)
      rem[i >> 6] |= std::uint64_t{1} << (i & 63);
    std::vector<std::size_t> picked;
    for (std::size_t p = 0; p + 1 < class_begin_.size(); ++p) {
      std::size_t chosen = cand_.size();
      for_each_bit(rem, class_begin_[p], class_begin_[p + 1], [&](std::size_t c) {
        if (chosen == cand_.size())
          chosen = c;
      });
      if (chosen == cand_.size())
        continue;
      picked.push_back(chosen);
      const Bits &row = adjacency(chosen);
      for (std::size_t w = 0; w < words_; ++w)
        rem[w] &= row[w];
    }
    best_ = picked;
  }

  /// Returns true when the tree was exhausted or the upper bound met.
  bool run() {
    Bits rem(words_, 0);
    for (std::size_t i = 0; i < cand_.size(); ++i)
      rem[i >> 6] |= std::uint64_t{1} << (i & 63);
    stack_.clear();
    node(0, rem);
    return !aborted_;
  }

  std::vector<Permutation> best_words(bool with_identity) const {
    std::vector<Permutation> out;
    if (with_identity)
      out.push_back(Permutation::identity(n_));
    for (std::size_t c : best_)
      out.push_back(detail::to_permutation(&perms_[cand_[c] * std::size_t{n_}], n_));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t best_size() const { return fixed_ + best_.size(); }

private:
  const Bits &adjacency(std::size_t c) {
    if (cache_rows_ && !rows_[c].empty())
      return rows_[c];
    Bits row(words_, 0);
    const std::uint8_t *u = &perms_[cand_[c] * std::size_t{n_}];
    for (std::size_t j = 0; j < cand_.size(); ++j)
      if (detail::lcs_flat(u, &perms_[cand_[j] * std::size_t{n_}], n_) < k_)
        row[j >> 6] |= std::uint64_t{1} << (j & 63);
    if (cache_rows_) {
      rows_[c] = std::move(row);
      return rows_[c];
    }
    scratch_row_ = std::move(row);
    return scratch_row_;
  }

  // Fewest distinct patterns on any k-subset of symbols among the remaining
  // candidates; stops early once it is at most `stop_at`.
  std::size_t subset_count(const Bits &rem, std::size_t begin, std::size_t stop_at) {
    std::size_t bound = class_begin_.size();
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      const std::uint16_t *pat = &patterns_[s * cand_.size()];
      std::fill(seen_.begin(), seen_.end(), 0);
      std::size_t distinct = 0;
      for_each_bit(rem, begin, cand_.size(), [&](std::size_t c) {
        const std::uint16_t q = pat[c];
        const std::uint64_t bit = std::uint64_t{1} << (q & 63);
        if (!(seen_[q >> 6] & bit)) {
          seen_[q >> 6] |= bit;
          ++distinct;
        }
      });
      bound = std::min(bound, distinct);
      if (bound <= stop_at)
        break;
    }
    return bound;
  }

  void node(std::size_t pos, const Bits &rem) {
    if (aborted_ || done_)
      return;
    if (!clock_.tick()) {
      aborted_ = true;
      return;
    }
    if (stack_.size() > best_.size())
      best_ = stack_;
    if (best_size() >= upper_) {
      done_ = true;
      return;
    }
    const std::size_t classes = class_begin_.size() - 1;
    while (pos < classes && !any_in(rem, class_begin_[pos], class_begin_[pos + 1]))
      ++pos;
    if (pos == classes)
      return;

    std::size_t open = 0;
    for (std::size_t p = pos; p < classes; ++p)
      open += any_in(rem, class_begin_[p], class_begin_[p + 1]);
    if (stack_.size() + open <= best_.size())
      return;
    if (!subsets_.empty()) {
      const std::size_t slack = best_.size() - stack_.size();
      if (subset_count(rem, class_begin_[pos], slack) <= slack)
        return;
    }

    const std::size_t begin = class_begin_[pos], end = class_begin_[pos + 1];
    std::vector<std::size_t> members;
    for_each_bit(rem, begin, end, [&](std::size_t c) { members.push_back(c); });
    Bits child(words_);
    for (std::size_t c : members) {
      const Bits &row = adjacency(c);
      for (std::size_t w = 0; w < words_; ++w)
        child[w] = rem[w] & row[w];
      clear_range(child, begin, end);
      stack_.push_back(c);
      node(pos + 1, child);
      stack_.pop_back();
      if (aborted_ || done_)
        return;
    }
    child = rem;
    clear_range(child, begin, end);
    node(pos + 1, child);
  }

  unsigned n_, k_;
  std::size_t upper_;
  BudgetClock &clock_;
  std::vector<std::uint8_t> perms_;
  std::vector<std::uint32_t> cand_;
  std::vector<std::size_t> class_begin_;
  std::size_t words_ = 0;
  bool cache_rows_ = false;
  std::vector<Bits> rows_;
  Bits scratch_row_;
  std::vector<std::vector<std::uint8_t>> subsets_;
  std::vector<std::uint16_t> patterns_;
  Bits seen_;
  std::vector<std::size_t> stack_, best_;
  std::size_t fixed_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

} // namespace

SearchResult max_code_search(const CodeParams &params, const Budget &budget, const SearchOptions &options) {
  if (params.d() < 2)
    throw DomainError("code search needs d >= 2");
  const unsigned n = params.n();
  if (n > options.limit || n > detail::kMaxFlatN)
    throw CapacityError("code search supports n <= " + std::to_string(std::min(options.limit, detail::kMaxFlatN)));

  BudgetClock clock(budget);
  SearchResult result{Code{params, {}, 0}, Optimality::lower_bound_only, singleton_upper(params), 0, 0.0};

  if (params.d() == 2) {
    // Singleton-optimal by construction; certified by the subsequence check.
    auto words = major_index_code(n);
    if (find_shared_subsequence(words, params))
      throw std::logic_error("major-index code is not a code");
    result.code = Code{params, std::move(words), 2};
    result.optimality = Optimality::proven_maximum;
    result.elapsed_seconds = clock.elapsed();
    return result;
  }

  BigInt upper = singleton_upper(params);
  if (n <= kDefaultEnumerationLimit)
    upper = std::min(upper, sphere_packing_bounds(params, EnumerationOptions{}).upper);
  if (options.upper_bound)
    upper = std::min(upper, *options.upper_bound);
  if (upper < 1)
    throw std::invalid_argument("upper bound must be positive");

  std::uint64_t spent_nodes = 0;
  double spent_seconds = 0.0;
  if (options.try_singleton_first && options.fix_identity && upper == singleton_upper(params)) {
    const auto s = find_singleton_optimal(params, budget);
    spent_nodes = s.nodes_explored;
    spent_seconds = s.elapsed_seconds;
    if (s.verdict == SingletonVerdict::exists) {
      result.code = *s.code;
      result.optimality = Optimality::proven_maximum;
      result.upper_bound_used = upper;
      result.nodes_explored = spent_nodes;
      result.elapsed_seconds = clock.elapsed();
      return result;
    }
    if (s.verdict == SingletonVerdict::does_not_exist)
      upper -= 1;
  }
  result.upper_bound_used = upper;

  Budget rest = budget;
  if (rest.max_nodes != 0)
    rest.max_nodes = rest.max_nodes > spent_nodes ? rest.max_nodes - spent_nodes : 1;
  if (rest.max_seconds > 0.0)
    rest.max_seconds = std::max(rest.max_seconds - spent_seconds, 1e-3);
  BudgetClock search_clock(rest);
  CliqueSearch search(params, options, static_cast<std::size_t>(upper.get_ui()), search_clock);
  search.seed_incumbent(options.fix_identity ? 1 : 0);
  const bool complete = search.run();

  result.code = verify_code(search.best_words(options.fix_identity), params);
  result.optimality = complete ? Optimality::proven_maximum : Optimality::lower_bound_only;
  result.nodes_explored = spent_nodes + search_clock.nodes();
  result.elapsed_seconds = clock.elapsed();
  return result;
}

} // namespace ulam
