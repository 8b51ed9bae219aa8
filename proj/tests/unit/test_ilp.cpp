#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "ulam/errors.hpp"
#include "ulam/ilp.hpp"

using namespace ulam;

namespace {

// Dense coefficient vector over positions b = 1..n for symbol a.
std::vector<long> coefficients_over_b(const IlpModel &m, const LinearRow &row, unsigned a) {
  std::vector<long> c(m.n, 0);
  for (const auto &t : row.terms) {
    REQUIRE(m.symbol_of(t.var) == a);
    c[m.position_of(t.var) - 1] = t.coef.get_si();
  }
  return c;
}

const LinearRow &row_named(const std::vector<LinearRow> &rows, const std::string &name) {
  for (const auto &r : rows)
    if (r.name == name)
      return r;
  FAIL("missing row " << name);
  return rows.front();
}

} // namespace

TEST_CASE("worked example rows") {
  const IlpModel m = build_model(CodeParams(5, 3));
  CHECK(m.num_vars() == 25);
  CHECK(m.inequality_rows.size() == 15);
  CHECK(m.equality_rows.size() == 4);
  for (unsigned a = 1; a <= 5; ++a) {
    const std::string p = "sub_a" + std::to_string(a) + "_l";
    CHECK(coefficients_over_b(m, row_named(m.inequality_rows, p + "0"), a) == std::vector<long>{6, 3, 1, 0, 0});
    CHECK(coefficients_over_b(m, row_named(m.inequality_rows, p + "1"), a) == std::vector<long>{0, 3, 4, 3, 0});
    CHECK(coefficients_over_b(m, row_named(m.inequality_rows, p + "2"), a) == std::vector<long>{0, 0, 1, 3, 6});
  }
  for (const auto &r : m.inequality_rows)
    CHECK(r.rhs == 12);
  CHECK(m.var_name(m.var(2, 4)) == "x_2_4");
  CHECK(m.objective.size() == 5);
}

TEST_CASE("model shape for every small (n, d)") {
  for (unsigned n = 3; n <= 8; ++n) {
    for (unsigned d = 2; d < n; ++d) {
      const IlpModel m = build_model(CodeParams(n, d));
      REQUIRE(m.inequality_rows.size() == n * (n - d + 1));
      REQUIRE(m.equality_rows.size() == n - 1);
      const auto rhs = oracle::factorial(n - 1) / oracle::factorial(d - 1);
      for (const auto &r : m.inequality_rows) {
        REQUIRE(r.rhs == static_cast<unsigned long>(rhs));
        const unsigned l = static_cast<unsigned>(std::stoul(r.name.substr(r.name.find("_l") + 2)));
        for (const auto &t : r.terms) {
          const unsigned b = m.position_of(t.var);
          REQUIRE(t.coef == static_cast<unsigned long>(oracle::binomial(b - 1, l) * oracle::binomial(n - b, n - d - l)));
        }
      }
      for (const auto &r : m.equality_rows) {
        REQUIRE(r.rhs == 0);
        for (const auto &t : r.terms)
          REQUIRE((t.coef == 1 || t.coef == -1));
      }
    }
  }
  CHECK_THROWS_AS(build_model(CodeParams(5, 1)), DomainError);
}

TEST_CASE("d = n - 1 has the two splits l = 0 and l = 1") {
  const unsigned n = 6;
  const IlpModel m = build_model(CodeParams(n, n - 1));
  CHECK(m.inequality_rows.size() == 2 * n);
  const auto &r0 = row_named(m.inequality_rows, "sub_a1_l0");
  const auto &r1 = row_named(m.inequality_rows, "sub_a1_l1");
  // l = 0: C(n-b, 1) = n - b; l = 1: C(b-1, 1) = b - 1.
  CHECK(coefficients_over_b(m, r0, 1) == std::vector<long>{5, 4, 3, 2, 1, 0});
  CHECK(coefficients_over_b(m, r1, 1) == std::vector<long>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("all-ones point") {
  const IlpModel m = build_model(CodeParams(5, 3));
  // Column sums per split: 6+3+1 = 3+4+3 = 1+3+6 = 10 <= 12.
  std::vector<BigInt> ones(m.num_vars(), 1);
  CHECK(is_feasible(m, ones));
  CHECK(objective_value(m, ones) == 5);
  std::vector<BigInt> bad(m.num_vars(), 0);
  bad[m.var(1, 1)] = 3;
  CHECK_FALSE(is_feasible(m, bad));
}

TEST_CASE("derived variable bounds") {
  const IlpModel m = build_model(CodeParams(5, 3));
  REQUIRE(m.upper_bounds.size() == 25);
  // X[1][a] <= floor(12 / 6) = 2, X[3][a] <= floor(12 / 4) = 3.
  CHECK(*m.upper_bounds[m.var(1, 1)] == 2);
  CHECK(*m.upper_bounds[m.var(3, 2)] == 3);
}

TEST_CASE("LP relaxation") {
  const IlpModel m = build_model(CodeParams(5, 3));
  const Rational lp = solve_lp_relaxation(m);
  CHECK(lp >= 5);
  CHECK(lp <= 6);
  CHECK(lp == 6); // regression value

  IlpModel zero = m;
  for (auto &r : zero.inequality_rows)
    r.rhs = 0;
  zero.upper_bounds.clear();
  CHECK(solve_lp_relaxation(zero) == 0);
}

TEST_CASE("integer program") {
  const IlpModel m = build_model(CodeParams(5, 3));
  const IlpSolution s = solve_ilp(m, Budget{});
  REQUIRE(s.status == IlpStatus::optimal);
  CHECK(s.objective_value == 5);
  REQUIRE(s.assignment);
  CHECK(is_feasible(m, *s.assignment));
  CHECK(objective_value(m, *s.assignment) == 5);
  CHECK(floor_of(s.lp_relaxation_value) >= s.objective_value);

  const IlpSolution cut = solve_ilp(m, Budget{1, 0});
  CHECK(cut.status == IlpStatus::bound_only);
  CHECK(cut.objective_value >= 5);
  CHECK(cut.objective_value <= 6);
}

TEST_CASE("ip_upper_bound") {
  CHECK(ip_upper_bound(CodeParams(5, 3), Budget{}).value == 5);
  CHECK(ip_upper_bound(CodeParams(4, 2), Budget{}).value >= 6);
  CHECK(ip_upper_bound(CodeParams(4, 3), Budget{}).value >= 2);
  const IpBound trivial = ip_upper_bound(CodeParams(6, 1), Budget{});
  CHECK(trivial.value == 720);
  CHECK_FALSE(trivial.solution);

  std::map<std::pair<unsigned, unsigned>, BigInt> values;
  for (unsigned n = 4; n <= 6; ++n)
    for (unsigned d = 2; d < n; ++d) {
      const CodeParams p(n, d);
      const IpBound b = ip_upper_bound(p, Budget{0, 30.0});
      CHECK(b.value <= singleton_upper(p));
      CHECK(b.value >= 1);
      values[{n, d}] = b.value;
    }
  // Regression values.
  CHECK(values[{4, 2}] == 6);
  CHECK(values[{4, 3}] == 2);
  CHECK(values[{5, 3}] == 5);
}

TEST_CASE("LP export") {
  const IlpModel m = build_model(CodeParams(5, 3));
  const std::string text = export_lp(m);
  CHECK(text == export_lp(m));
  CHECK(text.find(" sub_a1_l0: 6 x_1_1 + 3 x_2_1 + x_3_1 <= 12\n") != std::string::npos);
  CHECK(text.find(" sub_a3_l2: x_3_3 + 3 x_4_3 + 6 x_5_3 <= 12\n") != std::string::npos);
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("General") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);

  const IlpModel back = parse_lp(text);
  CHECK(back.n == 5);
  CHECK(back.d == 3);
  REQUIRE(back.inequality_rows.size() == m.inequality_rows.size());
  CHECK(export_lp(back) == text);
  const IlpSolution s = solve_ilp(back, Budget{});
  CHECK(s.status == IlpStatus::optimal);
  CHECK(s.objective_value == 5);

  CHECK_THROWS_AS(parse_lp("Maximize\n obj: x_1_1\nEnd\n"), ParseError);
  CHECK_THROWS_AS(parse_lp("\\ n = 2, d = 1\nMaximize\n obj: x_1_1 +\nSubject To\n c: x_9_9 <= 1\nEnd\n"), ParseError);
}
