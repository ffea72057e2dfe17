#pragma once

// Dense univariate polynomials over Q. Coefficients are stored low degree
// first and the representation is kept trimmed, so the zero polynomial has
// no coefficients and degree() == -1.

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arboreal/numeric.hpp"

namespace arboreal {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Coefficient of t^i, zero beyond the degree.
  Rational coeff(int i) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  Poly derivative() const;
  // this(inner(t))
  Poly compose(const Poly& inner) const;
  Poly monic() const;
  bool has_integer_coefficients() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division over Q; throws DomainError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned e);

// Res(a, b) by the Euclidean remainder sequence over Q.
Rational resultant(const Poly& a, const Poly& b);
// (-1)^{d(d-1)/2} Res(p, p') / lc(p). Rejects constant polynomials.
Rational discriminant(const Poly& p);
bool is_separable(const Poly& p);

// Yun decomposition: p = lc * prod_i f_i^i with f_i monic squarefree and
// pairwise coprime. Returned as (f_i, i) for nonconstant f_i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace arboreal
