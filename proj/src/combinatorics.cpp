#include "ulam/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ulam {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

double log_big(const BigInt &x) {
  if (sgn(x) <= 0)
    throw std::domain_error("log_big: argument must be positive");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

std::optional<std::uint64_t> to_uint64(const BigInt &x) {
  if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64)
    return std::nullopt;
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, x.get_mpz_t());
  return v;
}

BigInt ceil_div(const BigInt &num, const BigInt &den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt floor_of(const Rational &q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const BigInt &x) { return x.get_str(); }

std::string to_string(const Rational &q) { return q.get_str(); }

} // namespace ulam
