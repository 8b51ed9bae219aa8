#include <algorithm>

#include "perm_space.hpp"
#include "ulam/code_search.hpp"
#include "ulam/errors.hpp"

namespace ulam {

namespace {

// Dancing-links exact cover. Node 0 is the root; nodes 1..items are column headers.
class ExactCover {
public:
  explicit ExactCover(std::size_t items) : size_(items + 1, 0) {
    const std::size_t h = items + 1;
    left_.resize(h);
    right_.resize(h);
    up_.resize(h);
    down_.resize(h);
    col_.resize(h);
    row_.assign(h, 0);
    for (std::size_t i = 0; i < h; ++i) {
      left_[i] = i == 0 ? items : i - 1;
      right_[i] = i == items ? 0 : i + 1;
      up_[i] = down_[i] = col_[i] = static_cast<std::uint32_t>(i);
    }
  }

  /// Removes an item from the header list; it then needs no cover.
  void drop_item(std::size_t item) {
    const std::uint32_t c = static_cast<std::uint32_t>(item + 1);
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
  }

  void add_option(std::uint32_t id, const std::vector<std::uint32_t> &items) {
    std::uint32_t first = 0;
    for (std::uint32_t item : items) {
      const auto node = static_cast<std::uint32_t>(left_.size());
      const std::uint32_t c = item + 1;
      col_.push_back(c);
      row_.push_back(id);
      up_.push_back(up_[c]);
      down_.push_back(c);
      down_[up_[c]] = node;
      up_[c] = node;
      ++size_[c];
      if (first == 0) {
        first = node;
        left_.push_back(node);
        right_.push_back(node);
      } else {
        left_.push_back(left_[first]);
        right_.push_back(first);
        right_[left_[first]] = node;
        left_[first] = node;
      }
    }
  }

  enum class Outcome { solved, exhausted, aborted };

  Outcome solve(BudgetClock &clock) {
    solution_.clear();
    return search(clock);
  }

  const std::vector<std::uint32_t> &solution() const { return solution_; }
  std::size_t node_count() const { return left_.size(); }

private:
  void cover(std::uint32_t c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (std::uint32_t i = down_[c]; i != c; i = down_[i]) {
      for (std::uint32_t j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --size_[col_[j]];
      }
    }
  }

  void uncover(std::uint32_t c) {
    for (std::uint32_t i = up_[c]; i != c; i = up_[i]) {
      for (std::uint32_t j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  Outcome search(BudgetClock &clock) {
    if (right_[0] == 0)
      return Outcome::solved;
    // Fewest remaining options; first in item order on ties.
    std::uint32_t c = right_[0];
    for (std::uint32_t j = right_[c]; j != 0; j = right_[j])
      if (size_[j] < size_[c])
        c = j;
    if (size_[c] == 0)
      return Outcome::exhausted;

    cover(c);
    for (std::uint32_t r = down_[c]; r != c; r = down_[r]) {
      if (!clock.tick()) {
        uncover(c);
        return Outcome::aborted;
      }
      solution_.push_back(row_[r]);
      for (std::uint32_t j = right_[r]; j != r; j = right_[j])
        cover(col_[j]);
      const Outcome o = search(clock);
      if (o == Outcome::solved)
        return o;
      for (std::uint32_t j = left_[r]; j != r; j = left_[j])
        uncover(col_[j]);
      solution_.pop_back();
      if (o == Outcome::aborted) {
        uncover(c);
        return o;
      }
    }
    uncover(c);
    return Outcome::exhausted;
  }

  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> left_, right_, up_, down_, col_, row_;
  std::vector<std::uint32_t> solution_;
};

constexpr std::uint64_t kMaxCoverNodes = 12'000'000;

} // namespace

SingletonSearchResult find_singleton_optimal(const CodeParams &params, const Budget &budget) {
  if (params.d() < 2)
    throw DomainError("Singleton-optimal search needs d >= 2");
  const unsigned n = params.n();
  if (n > kDefaultSearchLimit)
    throw CapacityError("Singleton-optimal search supports n <= " + std::to_string(kDefaultSearchLimit));
  const unsigned k = params.pattern_length();
  BudgetClock clock(budget);
  SingletonSearchResult result;

  const auto perms = detail::all_permutations(n);
  const std::size_t total = perms.size() / n;
  const auto positions = detail::combinations(n, k);

  // Options: permutations sharing no length-k subsequence with the identity, i.e. LIS < k.
  std::vector<std::uint32_t> options;
  for (std::size_t i = 0; i < total; ++i)
    if (detail::lis_flat(&perms[i * n], n) < k)
      options.push_back(static_cast<std::uint32_t>(i));

  if (static_cast<std::uint64_t>(options.size()) * positions.size() > kMaxCoverNodes) {
    if (params.d() == 2) {
      // Too large to search; the major-index code settles existence.
      auto words = major_index_code(n);
      if (auto clash = find_shared_subsequence(words, params))
        throw std::logic_error("major-index code is not a code");
      result.verdict = SingletonVerdict::exists;
      result.code = Code{params, std::move(words), params.d()};
      result.elapsed_seconds = clock.elapsed();
      return result;
    }
    throw CapacityError("exact-cover instance for (" + std::to_string(n) + ", " + std::to_string(params.d()) +
                        ") exceeds the node limit");
  }

  std::uint32_t arrangements = 1;
  for (unsigned i = 0; i < k; ++i)
    arrangements *= n - i;
  ExactCover cover(arrangements);

  // The identity covers every increasing k-tuple.
  std::uint8_t tuple[detail::kMaxFlatN];
  for (const auto &pos : positions)
    cover.drop_item(detail::arrangement_rank(pos.data(), k, n));

  std::vector<std::uint32_t> items(positions.size());
  for (std::size_t o = 0; o < options.size(); ++o) {
    const std::uint8_t *p = &perms[options[o] * std::size_t{n}];
    for (std::size_t s = 0; s < positions.size(); ++s) {
      for (unsigned i = 0; i < k; ++i)
        tuple[i] = p[positions[s][i]];
      items[s] = detail::arrangement_rank(tuple, k, n);
    }
    cover.add_option(static_cast<std::uint32_t>(o), items);
  }

  const auto outcome = cover.solve(clock);
  result.nodes_explored = clock.nodes();
  result.elapsed_seconds = clock.elapsed();
  switch (outcome) {
  case ExactCover::Outcome::solved: {
    std::vector<Permutation> words;
    words.push_back(Permutation::identity(n));
    for (std::uint32_t o : cover.solution())
      words.push_back(detail::to_permutation(&perms[options[o] * std::size_t{n}], n));
    std::sort(words.begin(), words.end());
    if (find_shared_subsequence(words, params))
      throw std::logic_error("exact cover produced a pair sharing a subsequence");
    // Size k! > (k-1)! rules out minimum distance d + 1, so the minimum is exactly d.
    const std::size_t min_distance = words.size() > 1 ? params.d() : n;
    result.verdict = SingletonVerdict::exists;
    result.code = Code{params, std::move(words), min_distance};
    break;
  }
  case ExactCover::Outcome::exhausted:
    result.verdict = SingletonVerdict::does_not_exist;
    break;
  case ExactCover::Outcome::aborted:
    result.verdict = SingletonVerdict::unknown;
    break;
  }
  return result;
}

} // namespace ulam
