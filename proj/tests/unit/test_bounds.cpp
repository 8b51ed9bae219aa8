#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ulam/ball_lis.hpp"
#include "ulam/bounds.hpp"
#include "ulam/errors.hpp"

using namespace ulam;

namespace {

double ln_factorial(double m) { return std::lgamma(m + 1.0); }
double ln_binomial(double n, double k) { return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k); }
double h(double p) { return p <= 0 || p >= 1 ? 0.0 : -p * std::log(p) - (1 - p) * std::log(1 - p); }

} // namespace

TEST_CASE("CodeParams validation") {
  CHECK_NOTHROW(CodeParams(2, 1));
  CHECK_THROWS_AS(CodeParams(1, 1), DomainError);
  CHECK_THROWS_AS(CodeParams(5, 0), DomainError);
  CHECK_THROWS_AS(CodeParams(5, 5), DomainError);
  CHECK(CodeParams(7, 4).delta() == 3);
  CHECK(CodeParams(7, 4).pattern_length() == 4);
}

TEST_CASE("Singleton and GV-type bounds") {
  CHECK(singleton_upper(CodeParams(5, 3)) == 6);
  CHECK(singleton_upper(CodeParams(7, 4)) == 24);
  CHECK(gv_lower(CodeParams(6, 3)) == 2);
  CHECK(gv_lower(CodeParams(5, 3)) == 1);
  for (unsigned n = 2; n <= 12; ++n) {
    CHECK(singleton_upper(CodeParams(n, 1)) == factorial(n));
    CHECK(gv_lower(CodeParams(n, 1)) == factorial(n));
  }
  // Exact beyond 64 bits.
  CHECK(to_string(singleton_upper(CodeParams(30, 5))) == "403291461126605635584000000");

  for (unsigned n = 2; n <= 10; ++n) {
    for (unsigned d = 1; d < n; ++d) {
      const CodeParams p(n, d);
      CHECK(gv_lower(p) <= singleton_upper(p));
      if (d >= 2)
        CHECK(singleton_upper(p) * (n - d + 2) == singleton_upper(CodeParams(n, d - 1)));
      // ceil((n-d+1)! / C(n, d-1)) from independent integer arithmetic.
      const std::uint64_t num = oracle::factorial(n - d + 1), den = oracle::binomial(n, d - 1);
      CHECK(gv_lower(p) == static_cast<unsigned long>((num + den - 1) / den));
    }
  }
}

TEST_CASE("entropy form") {
  CHECK(entropy_nats(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(entropy_nats(0.0) == 0.0);
  CHECK(entropy_nats(1.0) == 0.0);
  CHECK_THROWS_AS(entropy_nats(1.5), DomainError);

  const double expected = 20 * (std::log(20.0) - 1) - 100 * h(0.8);
  CHECK(entropy_lower_log(CodeParams(100, 81)) == doctest::Approx(expected).epsilon(1e-12));

  // Never above the exact log of (n - D)! / C(n, D) it estimates.
  for (unsigned n = 3; n <= 30; ++n)
    for (unsigned d = 2; d < n; ++d) {
      const double D = d - 1;
      const double exact = ln_factorial(n - D) - ln_binomial(n, D);
      CHECK(entropy_lower_log(CodeParams(n, d)) <= exact + 1e-9);
    }
}

TEST_CASE("asymptotic constant-c form") {
  CHECK(asymptotic_lower_log(std::exp(1.0), 100) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(asymptotic_lower_log(1.0, 100) == doctest::Approx(-20.0));
  double prev = 0.0;
  for (double n : {10.0, 100.0, 1000.0}) {
    const double v = asymptotic_lower_log(3.0, n);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(asymptotic_lower_log(0.0, 10), DomainError);
}

TEST_CASE("the exact exponent approaches the constant-c form") {
  // a_n = ln((c sqrt n)! / C(n, c sqrt n)) / sqrt n against 2c(ln c - 1) at c = 3.
  const double c = 3.0;
  const double limit = 2 * c * (std::log(c) - 1);
  double prev_err = INFINITY;
  for (double n : {1e2, 1e4, 1e6}) {
    const double m = c * std::sqrt(n);
    const double a = (ln_factorial(m) - ln_binomial(n, m)) / std::sqrt(n);
    const double err = std::abs(a - limit);
    CHECK(err < prev_err);
    prev_err = err;
    CHECK(asymptotic_lower_log(c, n) == doctest::Approx(limit * std::sqrt(n)));
  }
}

TEST_CASE("rate function") {
  CHECK(std::abs(rate_function_I(2.0)) < 1e-12);
  CHECK_THROWS_AS(rate_function_I(1.99), DomainError);
  const double i3 = 2 * 3 * std::log(1.5 + std::sqrt(1.25)) - 2 * std::sqrt(5.0);
  CHECK(rate_function_I(3.0) == doctest::Approx(i3).epsilon(1e-14));
  for (int k = 1; k <= 80; ++k) {
    const double c = 2.0 + 0.1 * k;
    CHECK(rate_function_I(c) > 2 * c * (std::log(c) - 1));
  }
  for (double c = 2.0; c <= 50.0; c += 0.25)
    CHECK(std::abs(rate_function_I(c) - rate_function_I_acosh(c)) < 1e-12);
}

TEST_CASE("Kim tail estimate") {
  const double n = 8000;
  const double expected = -4.0 / 3.0 + (1.0 / (27 * 20) + 5 * std::log(n) / 20);
  CHECK(kim_upper_log(n, 1.0) == doctest::Approx(expected).epsilon(1e-12));
  const double edge = std::cbrt(1000.0) / 20;
  CHECK_NOTHROW(kim_upper_log(1000, edge));
  CHECK_THROWS_AS(kim_upper_log(1000, edge + 1e-9), DomainError);
  CHECK_THROWS_AS(kim_upper_log(1000, 0.0), DomainError);

  // Above the exact tail for every small n.
  for (unsigned m = 2; m <= 9; ++m) {
    const auto dist = lis_distribution_exact(m);
    const double t_max = std::cbrt(static_cast<double>(m)) / 20;
    for (double frac : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const double t = t_max * frac;
      const double threshold = 2 * std::sqrt(static_cast<double>(m)) + t * std::pow(m, 1.0 / 6.0);
      const auto k = static_cast<unsigned>(std::ceil(threshold));
      const double p = k > m ? 0.0 : static_cast<double>(dist.count_at_least(k)) / static_cast<double>(dist.total);
      CHECK(std::exp(kim_upper_log(m, t)) >= p);
    }
  }

  const auto approx = kim_approximate_lower_log(2.04, 1e6);
  CHECK(approx.approximate);
  CHECK(approx.value == doctest::Approx(std::pow(0.04, 1.5) * (38 - 2.04) / 27 * 1000));
  CHECK_THROWS_AS(kim_approximate_lower_log(2.1, 1e6), DomainError);
  CHECK_THROWS_AS(kim_approximate_lower_log(2.0, 1e6), DomainError);
}

TEST_CASE("simple estimate") {
  CHECK(simple_estimate(5, 0) == Rational(1, 120));
  CHECK(simple_estimate(5, 2) == Rational(5, 3)); // 10/6
  CHECK_THROWS_AS(simple_estimate(5, 5), DomainError);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto hist = oracle::lis_histogram(n);
    for (unsigned D = 0; D < n; ++D) {
      std::uint64_t at_least = 0;
      for (unsigned k = n - D; k <= n; ++k)
        at_least += hist[k];
      Rational p(static_cast<unsigned long>(at_least), static_cast<unsigned long>(oracle::factorial(n)));
      p.canonicalize();
      if (D >= 1 && D + 2 <= n)
        CHECK(p < simple_estimate(n, D));
      else
        CHECK(p <= simple_estimate(n, D));
    }
  }
}
