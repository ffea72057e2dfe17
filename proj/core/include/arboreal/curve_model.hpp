#pragma once

// Curve models over Q: long Weierstrass, y^2 = h(t) and g(t) y^2 = h(t),
// their points, mod-p counts and quadratic twists.

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arboreal/numeric.hpp"
#include "arboreal/poly.hpp"

namespace arboreal::curves {

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
struct Weierstrass {
  std::array<Rational, 5> a;  // a1, a2, a3, a4, a6

  const Rational& a1() const { return a[0]; }
  const Rational& a2() const { return a[1]; }
  const Rational& a3() const { return a[2]; }
  const Rational& a4() const { return a[3]; }
  const Rational& a6() const { return a[4]; }
  Rational b2() const;
  Rational b4() const;
  Rational b6() const;
  Rational b8() const;
  Rational discriminant() const;
  bool is_nonsingular() const { return discriminant() != 0; }
  // x^3 + a2 x^2 + a4 x + a6
  Poly rhs() const;
  friend bool operator==(const Weierstrass&, const Weierstrass&) = default;
};

struct EvenModel {
  Poly h;  // y^2 = h(t)
  friend bool operator==(const EvenModel&, const EvenModel&) = default;
};

struct TwistedModel {
  Poly g;  // g(t) y^2 = h(t)
  Poly h;
  friend bool operator==(const TwistedModel&, const TwistedModel&) = default;
};

struct CurveModel {
  std::variant<Weierstrass, EvenModel, TwistedModel> shape;
  std::string label;

  bool is_weierstrass() const { return std::holds_alternative<Weierstrass>(shape); }
  const Weierstrass& weierstrass() const;
  // (g, h) with g = 1 for even models. Throws for Weierstrass shape.
  std::pair<Poly, Poly> even_form() const;
};

CurveModel make_weierstrass(std::array<Rational, 5> a, std::string label = {});
CurveModel make_even(Poly h, std::string label = {});
CurveModel make_twisted(Poly g, Poly h, std::string label = {});

enum class Branch { Single, Plus, Minus };

class CurvePoint {
 public:
  static CurvePoint affine(Rational x, Rational y);
  static CurvePoint infinity(Branch b = Branch::Single);

  bool is_infinity() const { return infinite_; }
  const Rational& x() const;
  const Rational& y() const;
  Branch branch() const { return branch_; }
  std::string to_string() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);
  // Height of x, then x, then y; infinity first.
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);

 private:
  bool infinite_ = true;
  Branch branch_ = Branch::Single;
  Rational x_, y_;
};

// Parses "(p/q, r/s)", "inf", "inf+", "inf-".
CurvePoint parse_point(std::string_view text);

// Parses "lhs = rhs" in two variables (see parse_expression). The result is
// Weierstrass when the equation is y^2 + (a1 x + a3) y = monic cubic (up to a
// constant factor), otherwise an even or twisted model.
CurveModel parse_curve(std::string_view text, std::string label = {});

std::string to_string(const CurveModel& m);

// Points at infinity of the smooth model of g y^2 = h, i.e. of Y^2 = g h:
// one for odd degree, two when the degree is even with square leading
// coefficient, none otherwise. Weierstrass models have one.
std::vector<CurvePoint> infinity_points(const CurveModel& m);

bool on_model(const CurveModel& m, const CurvePoint& p);

// Throws DomainError unless p is odd and the model has good reduction at p.
long count_points_mod_p(const CurveModel& m, long p);

// d y^2 = h for even models; Weierstrass models go through the b-invariants.
// d = 1 returns the model unchanged.
CurveModel quadratic_twist(const CurveModel& m, const Integer& d);

}  // namespace arboreal::curves
