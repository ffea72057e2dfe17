#pragma once

// Arithmetic in Q(alpha) and Q_p(alpha), alpha^3 + alpha^2 - 1 = 0, with
// formal-group series for y^2 = g3 x^3 + g2 x^2 + g1 x and Strassmann zero
// counting.
//
// p = 3 is inert in Q(alpha), so 1, alpha, alpha^2 is an integral basis at p
// and the valuation of an element is the minimum over its coordinates.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arboreal/numeric.hpp"
#include "arboreal/weierstrass.hpp"

namespace arboreal::padic {

// Exact element c0 + c1 alpha + c2 alpha^2 of Q(alpha).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long n) : c_{Rational(n), 0, 0} {}  // NOLINT: integers embed
  FieldElement(const Rational& q) : c_{q, 0, 0} {}  // NOLINT
  FieldElement(Rational c0, Rational c1, Rational c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {}
  static FieldElement alpha() { return {0, 1, 0}; }

  const std::array<Rational, 3>& coeffs() const { return c_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const { return FieldElement(0) - *this; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string to_string() const;

 private:
  std::array<Rational, 3> c_{0, 0, 0};
};

// Element of Q_p(alpha) known modulo p^prec (absolute precision). The stored
// representative has coordinates in Z[1/p] reduced into [0, p^prec).
class RingElement {
 public:
  RingElement() = default;
  RingElement(const FieldElement& exact, long p, int prec);
  static RingElement zero(long p, int prec) { return RingElement(FieldElement(0), p, prec); }

  long prime() const { return p_; }
  int precision() const { return prec_; }
  // min coordinate valuation; precision() when the element is 0 mod p^prec
  int valuation() const;
  bool is_zero() const { return valuation() >= prec_; }
  const FieldElement& representative() const { return v_; }

  // Coordinates modulo p^k in [0, p^k). Throws PrecisionError when k exceeds
  // the precision or the element is not p-integral.
  std::array<Integer, 3> reduce(int k) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  // Throws PrecisionError when the divisor is 0 to its precision.
  RingElement& operator/=(const RingElement& o);
  // Exact scaling by a rational; precision drops by v_p(q).
  RingElement& operator*=(const Rational& q);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator/(RingElement a, const RingElement& b) { return a /= b; }
  friend RingElement operator*(RingElement a, const Rational& q) { return a *= q; }
  RingElement operator-() const;

  // Equal modulo p^min(prec).
  bool congruent(const RingElement& o) const;
  std::string to_string() const;

 private:
  void normalize();
  long p_ = 3;
  int prec_ = 0;
  FieldElement v_;
};

// Power series sum_{i < size} c_i z^i, everything beyond is O(z^size).
class TruncSeries {
 public:
  TruncSeries(std::vector<RingElement> coeffs) : c_(std::move(coeffs)) {}  // NOLINT
  std::size_t size() const { return c_.size(); }
  const RingElement& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<RingElement>& coeffs() const { return c_; }

  RingElement evaluate(const RingElement& z) const;
  // this(inner(z)); inner must have zero constant term.
  TruncSeries compose(const TruncSeries& inner) const;
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);

 private:
  std::vector<RingElement> c_;
};

struct CurveCoefficients {
  RingElement g1, g2, g3;  // y^2 = g3 x^3 + g2 x^2 + g1 x
};

// prec <= 9: series known to O(z^9).
TruncSeries formal_log(const CurveCoefficients& g, int prec = 9);
TruncSeries formal_exp(const CurveCoefficients& g, int prec = 9);
// 1/x as a series in z = -x/y, to O(z^10).
TruncSeries inverse_x_series(const CurveCoefficients& g);

// Polynomial in n with RingElement coefficients (index = power of n).
using NPoly = std::vector<RingElement>;

NPoly npoly_mul(const NPoly& a, const NPoly& b);
NPoly npoly_add(const NPoly& a, const NPoly& b);
// sum_i s_i z^i with z an NPoly of zero constant term.
NPoly npoly_substitute(const TruncSeries& s, const NPoly& z);

// Coordinate of alpha^i (i = 0, 1, 2) of every n-coefficient, mod p^k.
std::array<std::vector<Integer>, 3> split_mod(const NPoly& f, int k);

// z = -x/y of an exact point; rejects points outside the kernel of
// reduction. The identity maps to 0.
RingElement z_of_point(const curves::GroupPoint<FieldElement>& P, long p, int prec);

struct MultipleExpansion {
  RingElement log_z;  // log(z(Q))
  NPoly z_n;          // z(nQ) = exp(n log z(Q))
  NPoly inv_x_n;      // 1/x(nQ)
  std::array<std::vector<Integer>, 3> z_mod;    // z_n coordinates mod p^k
  std::array<std::vector<Integer>, 3> phi;      // 1/x_n coordinates mod p^k
};

MultipleExpansion x_inverse_of_multiple(const RingElement& zQ, const CurveCoefficients& g, int k);

// x(S + nQ) for S = (x0, y0) via the expansion of x3 in z = z(nQ) to z^5.
NPoly addition_expansion(const RingElement& x0, const RingElement& y0, const CurveCoefficients& g,
                         const NPoly& z_n);

struct StrassmannResult {
  std::optional<int> bound;  // nullopt: no dominant coefficient at this precision
  bool only_known_roots = false;
};

// coeffs[i] is the coefficient of n^i modulo p^k; zero counts as valuation k.
StrassmannResult strassmann_zero_bound(const std::vector<Integer>& coeffs, long p, int k,
                                       int known_root_multiplicity);

}  // namespace arboreal::padic

namespace arboreal::padic {

// y^2 = (1 - alpha) x (x^2 + (alpha + 1) x + (alpha^2 + alpha)), expanded to
// g3 = 1 - alpha, g2 = 1 - alpha^2, g1 = (1 - alpha)(alpha^2 + alpha).
struct ExactCoefficients {
  FieldElement g1, g2, g3;
};
ExactCoefficients reference_curve();

CurveCoefficients to_ring(const ExactCoefficients& g, long p, int prec);

// (X, Y) = (g3 x, g3 y) sends the curve to Y^2 = X^3 + g2 X^2 + g1 g3 X;
// z = -x/y is unchanged.
std::array<FieldElement, 5> monic_model(const ExactCoefficients& g);
curves::GroupPoint<FieldElement> to_monic(const ExactCoefficients& g, const curves::GroupPoint<FieldElement>& P);
curves::GroupPoint<FieldElement> from_monic(const ExactCoefficients& g, const curves::GroupPoint<FieldElement>& P);

}  // namespace arboreal::padic
