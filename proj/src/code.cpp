#include "ulam/code_search.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "perm_space.hpp"
#include "ulam/errors.hpp"

namespace ulam {

ColorClass color_class(const Permutation &sigma, const CodeParams &params) {
  if (params.d() < 2)
    throw DomainError("color classes need d >= 2");
  if (sigma.size() != params.n())
    throw DimensionError("permutation length differs from n");
  const Symbol k = params.pattern_length();
  std::vector<Symbol> pattern;
  pattern.reserve(k);
  for (Symbol s : sigma.entries())
    if (s <= k)
      pattern.push_back(s);
  return {Permutation(std::move(pattern))};
}

Code verify_code(std::vector<Permutation> words, const CodeParams &params) {
  if (words.empty())
    throw std::invalid_argument("a code needs at least one word");
  for (const auto &w : words)
    if (w.size() != params.n())
      throw DimensionError("word of length " + std::to_string(w.size()) + " in a code of length " +
                           std::to_string(params.n()));
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i)
    if (words[i] == words[i - 1])
      throw std::invalid_argument("duplicate word " + to_string(words[i]));

  std::size_t best = params.n();
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const std::size_t dist = ulam_distance(words[i], words[j]);
      if (dist < best) {
        best = dist;
        bi = i;
        bj = j;
      }
    }
  }
  if (best < params.d())
    throw CodeViolation("words " + to_string(words[bi]) + " and " + to_string(words[bj]) + " are at distance " +
                            std::to_string(best) + " < " + std::to_string(params.d()),
                        words[bi], words[bj], best);
  return Code{params, std::move(words), best};
}

std::optional<std::pair<std::size_t, std::size_t>> find_shared_subsequence(const std::vector<Permutation> &words,
                                                                           const CodeParams &params) {
  const unsigned n = params.n();
  const unsigned k = params.pattern_length();
  if (n > detail::kMaxFlatN)
    throw CapacityError("subsequence certificate supports n <= " + std::to_string(detail::kMaxFlatN));
  const auto subsets = detail::combinations(n, k);
  std::unordered_map<std::uint32_t, std::size_t> owner;
  owner.reserve(words.size() * subsets.size());
  std::uint8_t tuple[detail::kMaxFlatN];
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w].size() != n)
      throw DimensionError("word length differs from n");
    const auto flat = detail::to_flat(words[w]);
    for (const auto &positions : subsets) {
      for (unsigned i = 0; i < k; ++i)
        tuple[i] = flat[positions[i]];
      const auto [it, inserted] = owner.emplace(detail::arrangement_rank(tuple, k, n), w);
      if (!inserted && it->second != w)
        return std::make_pair(it->second, w);
    }
  }
  return std::nullopt;
}

std::vector<Permutation> major_index_code(unsigned n) {
  if (n < 2 || n > 10)
    throw CapacityError("major-index construction is enumerated for 2 <= n <= 10");
  std::vector<Permutation> out;
  std::vector<Symbol> p(n);
  std::iota(p.begin(), p.end(), Symbol{1});
  do {
    unsigned maj = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (p[i] > p[i + 1])
        maj += i + 1;
    if (maj % n == 0)
      out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void write_code(std::ostream &out, const CodeParams &params, const std::vector<Permutation> &words) {
  out << params.n() << ' ' << params.d() << '\n';
  for (const auto &w : words)
    out << to_string(w) << '\n';
}

CodeFile read_code(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<CodeParams> params;
  std::vector<Permutation> words;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#')
      continue;
    if (!params) {
      std::istringstream ls(line);
      unsigned n = 0, d = 0;
      std::string rest;
      if (!(ls >> n >> d) || (ls >> rest))
        throw ParseError("expected header 'n d'", lineno, 1);
      try {
        params.emplace(n, d);
      } catch (const DomainError &e) {
        throw ParseError(e.what(), lineno, 1);
      }
      continue;
    }
    Permutation p = parse_permutation(line, lineno);
    if (p.size() != params->n())
      throw ParseError("permutation has length " + std::to_string(p.size()) + ", expected " +
                           std::to_string(params->n()),
                       lineno, 1);
    words.push_back(std::move(p));
  }
  if (!params)
    throw ParseError("empty code file");
  return {*params, std::move(words)};
}

const char *to_string(Optimality o) {
  return o == Optimality::proven_maximum ? "proven_maximum" : "lower_bound_only";
}

const char *to_string(SingletonVerdict v) {
  switch (v) {
  case SingletonVerdict::exists:
    return "yes";
  case SingletonVerdict::does_not_exist:
    return "no";
  case SingletonVerdict::unknown:
    return "?";
  }
  return "?";
}

} // namespace ulam
