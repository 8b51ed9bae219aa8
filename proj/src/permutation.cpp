#include "ulam/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ulam/errors.hpp"

namespace ulam {

Permutation::Permutation(std::vector<Symbol> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0)
    throw std::invalid_argument("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (Symbol s : entries_) {
    if (s < 1 || s > n)
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
    if (seen[s])
      throw std::invalid_argument("symbol " + std::to_string(s) + " appears more than once");
    seen[s] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("permutation must have at least one entry");
  std::vector<Symbol> v(n);
  std::iota(v.begin(), v.end(), Symbol{1});
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::reversal(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("permutation must have at least one entry");
  std::vector<Symbol> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Symbol>(n - i);
  return Permutation(std::move(v), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != i + 1)
      return false;
  return true;
}

Translocation Translocation::right(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j)
    throw IndexError("translocation needs 1 <= i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  return {Kind::right, i, j};
}

Translocation Translocation::left(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j)
    throw IndexError("translocation needs 1 <= i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  return {Kind::left, i, j};
}

Permutation compose(const Permutation &sigma, const Permutation &tau) {
  if (sigma.size() != tau.size())
    throw DimensionError("compose: lengths " + std::to_string(sigma.size()) + " and " +
                         std::to_string(tau.size()) + " differ");
  std::vector<Symbol> r(sigma.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = sigma.entries_[tau.entries_[i] - 1];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation inverse(const Permutation &sigma) {
  std::vector<Symbol> r(sigma.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[sigma.entries_[i] - 1] = static_cast<Symbol>(i + 1);
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation apply_translocation(const Permutation &sigma, const Translocation &t) {
  const auto n = sigma.size();
  if (t.i < 1 || t.i >= t.j || t.j > n)
    throw IndexError("translocation (" + std::to_string(t.i) + ", " + std::to_string(t.j) +
                     ") invalid for n=" + std::to_string(n));
  std::vector<Symbol> v(sigma.entries().begin(), sigma.entries().end());
  auto first = v.begin() + static_cast<std::ptrdiff_t>(t.i - 1);
  auto last = v.begin() + static_cast<std::ptrdiff_t>(t.j);
  if (t.kind == Translocation::Kind::right)
    std::rotate(first, first + 1, last);
  else
    std::rotate(first, last - 1, last);
  return Permutation(std::move(v));
}

std::vector<Translocation> all_translocations(std::size_t n) {
  std::vector<Translocation> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      out.push_back(Translocation::right(i, j));
      // Adjacent right and left translocations are the same transposition.
      if (j > i + 1)
        out.push_back(Translocation::left(i, j));
    }
  }
  return out;
}

std::size_t lis_length(std::span<const Symbol> seq) {
  // tails[k] is the smallest tail of an increasing run of length k + 1.
  std::vector<Symbol> tails;
  tails.reserve(seq.size());
  for (Symbol s : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), s);
    if (it == tails.end())
      tails.push_back(s);
    else
      *it = s;
  }
  return tails.size();
}

std::size_t lis_length(const Permutation &sigma) { return lis_length(sigma.entries()); }

std::size_t lcs_length(const Permutation &sigma, const Permutation &tau) {
  if (sigma.size() != tau.size())
    throw DimensionError("lcs_length: lengths " + std::to_string(sigma.size()) + " and " +
                         std::to_string(tau.size()) + " differ");
  // A common subsequence is an increasing run of sigma-positions read in tau order.
  const auto n = sigma.size();
  std::vector<Symbol> pos(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    pos[sigma.entries()[i]] = static_cast<Symbol>(i + 1);
  std::vector<Symbol> seq(n);
  for (std::size_t i = 0; i < n; ++i)
    seq[i] = pos[tau.entries()[i]];
  return lis_length(seq);
}

std::size_t ulam_distance(const Permutation &sigma, const Permutation &tau) {
  return sigma.size() - lcs_length(sigma, tau);
}

Permutation random_permutation(std::size_t n, std::mt19937_64 &rng) {
  std::vector<Symbol> v(n);
  std::iota(v.begin(), v.end(), Symbol{1});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_permutation(n, rng);
}

Permutation parse_permutation(std::string_view text, std::size_t line) {
  std::vector<Symbol> v;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == ','))
      ++i;
    if (i == text.size())
      break;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != ',')
      ++i;
    const auto token = text.substr(start, i - start);
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("expected a positive integer, got '" + std::string(token) + "'", line, start + 1);
    v.push_back(value);
  }
  if (v.empty())
    throw ParseError("empty permutation", line, 1);

  const auto n = v.size();
  std::vector<std::size_t> first_seen(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] < 1 || v[k] > n)
      throw ParseError("symbol " + std::to_string(v[k]) + " outside 1.." + std::to_string(n) +
                           " (not a bijection)", line);
    if (first_seen[v[k]] != 0)
      throw ParseError("symbol " + std::to_string(v[k]) + " repeated at positions " +
                           std::to_string(first_seen[v[k]]) + " and " + std::to_string(k + 1) +
                           " (not a bijection)", line);
    first_seen[v[k]] = k + 1;
  }
  return Permutation(std::move(v));
}

std::string to_string(const Permutation &sigma) {
  std::string s;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i != 0)
      s += ' ';
    s += std::to_string(sigma.entries()[i]);
  }
  return s;
}

} // namespace ulam
