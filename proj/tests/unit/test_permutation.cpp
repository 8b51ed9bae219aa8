#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "ulam/errors.hpp"
#include "ulam/permutation.hpp"

using namespace ulam;

namespace {

Permutation P(std::vector<Symbol> v) { return Permutation(std::move(v)); }

Permutation from_oracle(const oracle::Perm &p) { return Permutation(std::vector<Symbol>(p.begin(), p.end())); }

std::vector<Permutation> all_of(unsigned n) {
  std::vector<Permutation> out;
  for (const auto &p : oracle::all_perms(n))
    out.push_back(from_oracle(p));
  return out;
}

} // namespace

TEST_CASE("construction validates bijections") {
  CHECK_NOTHROW(P({1}));
  CHECK_THROWS_AS(P({}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 4, 2}), std::invalid_argument);
  CHECK(Permutation::identity(4) == P({1, 2, 3, 4}));
  CHECK(Permutation::reversal(4) == P({4, 3, 2, 1}));
}

TEST_CASE("compose and inverse") {
  const auto e = Permutation::identity(3);
  const auto s = P({2, 3, 1});
  CHECK(compose(e, s) == s);
  CHECK(compose(s, inverse(s)) == e);
  CHECK(compose(P({2, 3, 1}), P({3, 1, 2})) == e);
  CHECK(inverse(s) == P({3, 1, 2}));
  CHECK(inverse(e) == e);
  CHECK(inverse(Permutation::reversal(6)) == Permutation::reversal(6));
  CHECK_THROWS_AS(compose(e, Permutation::identity(4)), DimensionError);

  for (const auto &a : all_of(4))
    for (const auto &b : all_of(4)) {
      const auto ab = compose(a, b);
      for (std::size_t i = 1; i <= 4; ++i)
        REQUIRE(ab(i) == a(b(i)));
    }
}

TEST_CASE("translocations match their one-line forms") {
  CHECK(apply_translocation(Permutation::identity(3), Translocation::right(1, 2)) == P({2, 1, 3}));
  CHECK_THROWS_AS(Translocation::right(2, 2), IndexError);
  CHECK_THROWS_AS(Translocation::left(0, 2), IndexError);
  CHECK_THROWS_AS(apply_translocation(Permutation::identity(3), Translocation::right(1, 4)), IndexError);

  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned j = i + 1; j <= n; ++j) {
        const auto r = from_oracle(oracle::right_one_line(n, i, j));
        const auto l = from_oracle(oracle::left_one_line(n, i, j));
        // Left translocations are exactly the inverses of right ones.
        REQUIRE(compose(r, l) == Permutation::identity(n));
        for (const auto &s : all_of(n)) {
          REQUIRE(apply_translocation(s, Translocation::right(i, j)) == compose(s, r));
          REQUIRE(apply_translocation(s, Translocation::left(i, j)) == compose(s, l));
        }
      }
    }
  }
}

TEST_CASE("a translocation and its inverse cancel, and move the word by distance 1") {
  for (const auto &s : all_of(5)) {
    for (const auto &t : all_translocations(5)) {
      const auto moved = apply_translocation(s, t);
      REQUIRE(apply_translocation(moved, t.inverse()) == s);
      REQUIRE(ulam_distance(s, moved) == 1);
    }
  }
}

TEST_CASE("all_translocations lists each non-identity move once") {
  for (unsigned n = 2; n <= 6; ++n) {
    std::vector<Permutation> seen;
    for (const auto &t : all_translocations(n))
      seen.push_back(apply_translocation(Permutation::identity(n), t));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(seen.size() == static_cast<std::size_t>((n - 1) * (n - 1)));
  }
}

TEST_CASE("lis_length") {
  CHECK(lis_length(Permutation::identity(7)) == 7);
  CHECK(lis_length(Permutation::reversal(7)) == 1);
  CHECK(lis_length(P({1, 3, 5, 7, 2, 4, 6, 8})) == 5);
  CHECK(oracle::lis_brute({1, 3, 5, 7, 2, 4, 6, 8}) == 5);
  for (const auto &p : oracle::all_perms(6))
    REQUIRE(lis_length(from_oracle(p)) == oracle::lis_brute(p));
}

TEST_CASE("lcs_length agrees with dynamic programming on S_4") {
  const auto perms = oracle::all_perms(4);
  for (const auto &a : perms)
    for (const auto &b : perms) {
      const auto x = from_oracle(a), y = from_oracle(b);
      REQUIRE(lcs_length(x, y) == oracle::lcs_dp(a, b));
      REQUIRE(lcs_length(x, y) == lcs_length(y, x));
    }
  CHECK(lcs_length(Permutation::identity(5), Permutation::reversal(5)) == 1);
  CHECK_THROWS_AS(lcs_length(Permutation::identity(3), Permutation::identity(2)), DimensionError);
}

TEST_CASE("ulam_distance equals translocation BFS on S_5") {
  for (const auto &src : oracle::all_perms(5)) {
    const auto dist = oracle::bfs(src);
    REQUIRE(dist.size() == 120);
    const auto s = from_oracle(src);
    for (const auto &[dst, steps] : dist)
      REQUIRE(ulam_distance(s, from_oracle(dst)) == steps);
  }
}

TEST_CASE("metric axioms and left-invariance on S_4") {
  const auto perms = all_of(4);
  for (const auto &a : perms)
    for (const auto &b : perms) {
      const auto dab = ulam_distance(a, b);
      REQUIRE((dab == 0) == (a == b));
      REQUIRE(dab == ulam_distance(b, a));
      REQUIRE(dab <= 3);
      for (const auto &c : perms) {
        REQUIRE(dab <= ulam_distance(a, c) + ulam_distance(c, b));
        REQUIRE(ulam_distance(compose(c, a), compose(c, b)) == dab);
      }
    }
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto &a : all_of(n))
      REQUIRE(ulam_distance(Permutation::identity(n), a) <= n - 1);
  CHECK(ulam_distance(Permutation::identity(6), Permutation::reversal(6)) == 5);
}

TEST_CASE("random_permutation is deterministic and uniform") {
  CHECK(random_permutation(1, 7) == Permutation::identity(1));
  CHECK(random_permutation(20, 42) == random_permutation(20, 42));
  CHECK(random_permutation(20, 42) != random_permutation(20, 43));

  std::mt19937_64 rng(2024);
  std::map<Permutation, std::uint64_t> freq;
  const std::uint64_t samples = 1'000'000;
  for (std::uint64_t s = 0; s < samples; ++s)
    ++freq[random_permutation(3, rng)];
  REQUIRE(freq.size() == 6);
  const double p = 1.0 / 6.0;
  const double sigma = std::sqrt(samples * p * (1 - p));
  for (const auto &[perm, count] : freq)
    CHECK(std::abs(static_cast<double>(count) - samples * p) < 5 * sigma);
}

TEST_CASE("parsing") {
  CHECK(parse_permutation("2 3 1 5 4") == P({2, 3, 1, 5, 4}));
  CHECK(parse_permutation("  1\t2 ") == P({1, 2}));
  CHECK(to_string(P({2, 3, 1, 5, 4})) == "2 3 1 5 4");
  try {
    parse_permutation("1 2 x", 7);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 5);
  }
  try {
    parse_permutation("1 3 3");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("not a bijection") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_permutation("1 4 2"), ParseError);
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
}
