#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace swb {

/// Exact scalar. GMP keeps mpq values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "num/den", or just "num" when den == 1.
std::string to_string(const Rational& r);
/// Always "num/den"; the CLI's canonical rendering.
std::string to_fraction_string(const Rational& r);
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);
Integer factorial(long n);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace swb
