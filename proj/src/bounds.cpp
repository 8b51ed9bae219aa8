#include "ulam/bounds.hpp"

#include <cmath>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

CodeParams::CodeParams(unsigned n, unsigned d) : n_(n), d_(d) {
  if (n < 2)
    throw DomainError("code length n must be at least 2, got " + std::to_string(n));
  if (d < 1 || d > n - 1)
    throw DomainError("minimum distance d must lie in 1.." + std::to_string(n - 1) + " for n=" +
                      std::to_string(n) + ", got " + std::to_string(d));
}

BigInt singleton_upper(const CodeParams &params) { return factorial(params.pattern_length()); }

BigInt gv_lower(const CodeParams &params) {
  return ceil_div(factorial(params.pattern_length()), binomial(params.n(), params.delta()));
}

double entropy_nats(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("entropy argument must lie in [0, 1]");
  auto term = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

double entropy_lower_log(const CodeParams &params) {
  const double n = params.n();
  const double m = n - params.delta();
  return m * (std::log(m) - 1.0) - n * entropy_nats(params.delta() / n);
}

double asymptotic_lower_log(double c, double n) {
  if (!(c > 0.0))
    throw DomainError("asymptotic_lower_log needs c > 0");
  if (!(n > 0.0))
    throw DomainError("asymptotic_lower_log needs n > 0");
  return 2.0 * std::sqrt(n) * c * (std::log(c) - 1.0);
}

double rate_function_I(double c) {
  if (!(c >= 2.0))
    throw DomainError("rate function defined for c >= 2");
  return 2.0 * c * std::log(c / 2.0 + std::sqrt(c * c / 4.0 - 1.0)) - 2.0 * std::sqrt(c * c - 4.0);
}

double rate_function_I_acosh(double c) {
  if (!(c >= 2.0))
    throw DomainError("rate function defined for c >= 2");
  return 2.0 * c * std::acosh(c / 2.0) - 2.0 * std::sqrt(c * c - 4.0);
}

double kim_upper_log(double n, double t) {
  if (!(n >= 1.0))
    throw DomainError("kim_upper_log needs n >= 1");
  const double cbrt_n = std::cbrt(n);
  if (!(t > 0.0) || t > cbrt_n / 20.0)
    throw DomainError("kim_upper_log needs 0 < t <= n^(1/3)/20");
  const double t32 = t * std::sqrt(t);
  const double phi = (t / (27.0 * cbrt_n) + 5.0 * std::log(n) / (std::sqrt(t) * cbrt_n)) * t32;
  return -4.0 / 3.0 * t32 + phi;
}

ApproximateValue kim_approximate_lower_log(double c, double n) {
  if (!(c > 2.0) || c > 2.0 + 1.0 / 20.0)
    throw DomainError("Kim-type estimate applies only for c in (2, 2.05]");
  return {std::pow(c - 2.0, 1.5) * (38.0 - c) / 27.0 * std::sqrt(n)};
}

Rational simple_estimate(unsigned n, unsigned delta) {
  if (n < 1 || delta > n - 1)
    throw DomainError("simple_estimate needs 0 <= delta <= n - 1");
  Rational q(binomial(n, delta), factorial(n - delta));
  q.canonicalize();
  return q;
}

} // namespace ulam
