#pragma once

// Sparse polynomials in two variables (x, y) over Q and a small expression
// parser for the curve syntax used on the command line.

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "arboreal/numeric.hpp"
#include "arboreal/poly.hpp"

namespace arboreal {

class BiPoly {
 public:
  using Monomial = std::pair<int, int>;  // (deg x, deg y)

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly x();
  static BiPoly y();
  // p(x) viewed as a polynomial in x only.
  static BiPoly from_x(const Poly& p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree_x() const;
  int degree_y() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Coefficient of y^k as a polynomial in x.
  Poly coeff_y(int k) const;
  Rational operator()(const Rational& x, const Rational& y) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Rational& c);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string(std::string_view xvar = "x", std::string_view yvar = "y") const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

BiPoly pow(const BiPoly& p, unsigned e);

struct ParsedExpression {
  BiPoly poly;
  char xvar = 0;  // letter used for the first variable, 0 if absent
};

// Grammar: sums of products of rational constants, variables and
// parenthesized subexpressions, with '^' for nonnegative integer powers and
// '/' for division by constants. Juxtaposition multiplies ("3x", "2(t+1)").
// 'y' and 'v' name the second variable; any other single letter names the
// first. Throws DomainError.
ParsedExpression parse_expression(std::string_view text);

}  // namespace arboreal
