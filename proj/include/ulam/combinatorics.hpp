#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace ulam {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Natural log of a positive integer of any size.
double log_big(const BigInt &x);

/// Value as uint64 when it fits.
std::optional<std::uint64_t> to_uint64(const BigInt &x);

BigInt ceil_div(const BigInt &num, const BigInt &den);
BigInt floor_of(const Rational &q);

std::string to_string(const BigInt &x);
std::string to_string(const Rational &q);

} // namespace ulam
