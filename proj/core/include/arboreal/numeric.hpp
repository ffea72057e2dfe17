#pragma once

// Exact integer/rational scalars shared by every module, plus the error
// hierarchy. Integers and rationals are GMP values; all arithmetic in the
// library is exact unless a header says otherwise (analytic.hpp).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arboreal {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: point not on curve, singular model, malformed string, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// A square class with an unfactored cofactor was fed to an operation that
// needs exact classes.
class InexactClassError : public Error {
 public:
  using Error::Error;
};

// p-adic or real working precision too small for the requested result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

// Parses "p", "-p", "p/q" (whitespace tolerated). Throws DomainError.
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Floor square root of n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

// Nonnegative rational square root when q is a square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

// Height max(|p|, |q|) of p/q in lowest terms.
Integer height(const Rational& q);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace arboreal
