#pragma once

#include "ulam/combinatorics.hpp"

namespace ulam {

/// Length n and minimum Ulam distance d of a permutation code.
class CodeParams {
public:
  /// Throws DomainError unless n >= 2 and 1 <= d <= n - 1.
  CodeParams(unsigned n, unsigned d);

  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  /// Number of tolerated deletions, d - 1.
  unsigned delta() const { return d_ - 1; }
  /// Length n - d + 1 of the subsequences two codewords may not share.
  unsigned pattern_length() const { return n_ - d_ + 1; }

  friend bool operator==(const CodeParams &, const CodeParams &) = default;

private:
  unsigned n_;
  unsigned d_;
};

/// (n - d + 1)!, exact.
BigInt singleton_upper(const CodeParams &params);

/// ceil((n - d + 1)! / C(n, d - 1)), the raw Gilbert-Varshamov-type value.
BigInt gv_lower(const CodeParams &params);

/// Binary entropy in nats with 0 ln 0 = 0. Throws DomainError outside [0, 1].
double entropy_nats(double p);

/**
 * Log of the closed-form lower estimate
 *   (n - D)(ln(n - D) - 1) - n h(D / n),   D = d - 1,
 * which never exceeds ln((n - D)! / C(n, D)).
 */
double entropy_lower_log(const CodeParams &params);

/// 2 sqrt(n) c (ln c - 1): the log lower bound in the regime D = n - c sqrt(n). Requires c > 0.
double asymptotic_lower_log(double c, double n);

/**
 * Large-deviation rate I(c) = 2c ln(c/2 + sqrt(c^2/4 - 1)) - 2 sqrt(c^2 - 4).
 * Throws DomainError for c < 2.
 */
double rate_function_I(double c);

/// The same rate written with acosh; kept to cross-check the log form.
double rate_function_I_acosh(double c);

/**
 * Log of Kim's tail estimate for P(L_n - 2 sqrt(n) >= t n^(1/6)):
 *   -(4/3) t^(3/2) + phi(t),
 *   phi(t) = (t / (27 n^(1/3)) + 5 ln n / (t^(1/2) n^(1/3))) t^(3/2).
 * Valid for 0 < t <= n^(1/3) / 20; DomainError otherwise.
 */
double kim_upper_log(double n, double t);

/// An estimate that is not a certified bound.
struct ApproximateValue {
  double value;
  bool approximate = true;
};

/**
 * Approximate log lower bound (c - 2)^(3/2) (38 - c) / 27 * sqrt(n) for codes
 * with D = n - c sqrt(n), c in (2, 2 + 1/20]. Flagged approximate; DomainError
 * outside that c range.
 */
ApproximateValue kim_approximate_lower_log(double c, double n);

/// C(n, D) / (n - D)!, an upper estimate of P(L_n >= n - D). Requires D <= n - 1.
Rational simple_estimate(unsigned n, unsigned delta);

} // namespace ulam
