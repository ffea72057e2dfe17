#pragma once

// Iteration of f(x) = (x - gamma)^2 + c over Q and symbolically in the
// parameter t (c = t).

#include <vector>

#include "arboreal/numeric.hpp"
#include "arboreal/poly.hpp"

namespace arboreal::dynamics {

// Depth cap for symbolic iterates: degree 2^7 in t.
inline constexpr int kMaxSymbolicDepth = 8;

struct QuadMap {
  Rational gamma;
  Rational c;

  Rational operator()(const Rational& x) const {
    Rational d = x - gamma;
    return d * d + c;
  }
  // f^n(x)
  Rational iterate(const Rational& x, int n) const;
};

// [f(gamma), f^2(gamma), ..., f^n(gamma)]; entry 1 is always c.
std::vector<Rational> critical_orbit(const QuadMap& m, int n);

// f_t^n(gamma) as a polynomial in t, degree 2^{n-1}.
Poly iterate_value_poly(const Rational& gamma, int n);

// f^n(x) as a polynomial in x for fixed (gamma, c).
Poly iterate_poly(const QuadMap& m, int n);

// disc(f^n) == +-disc(f^{n-1})^2 * 2^{2^n} * f^n(gamma), exactly.
bool check_disc_recursion(const QuadMap& m, int n);

}  // namespace arboreal::dynamics
