#pragma once

// Chord-tangent group law on long Weierstrass models, torsion via
// Lutz-Nagell and integral points from a known generator.
//
// The group law is a template over the coefficient field so the same code
// runs over Q and over exact number fields (see padic.hpp).

#include <array>
#include <optional>
#include <vector>

#include "arboreal/curve_model.hpp"

namespace arboreal::curves {

template <class F>
struct AffinePoint {
  F x;
  F y;
};

// nullopt is the identity.
template <class F>
using GroupPoint = std::optional<AffinePoint<F>>;

// a = {a1, a2, a3, a4, a6}
template <class F>
GroupPoint<F> group_negate(const std::array<F, 5>& a, const GroupPoint<F>& P) {
  if (!P) return P;
  F ny = F(0) - P->y - a[0] * P->x - a[2];
  return AffinePoint<F>{P->x, ny};
}

template <class F>
GroupPoint<F> group_add(const std::array<F, 5>& a, const GroupPoint<F>& P, const GroupPoint<F>& Q) {
  if (!P) return Q;
  if (!Q) return P;
  const F& a1 = a[0];
  const F& a2 = a[1];
  const F& a3 = a[2];
  const F& a4 = a[3];
  const F& a6 = a[4];
  const F& x1 = P->x;
  const F& y1 = P->y;
  const F& x2 = Q->x;
  const F& y2 = Q->y;
  F lambda, nu;
  if (x1 == x2) {
    F s = y1 + y2 + a1 * x2 + a3;
    if (s == F(0)) return std::nullopt;
    F den = F(2) * y1 + a1 * x1 + a3;
    lambda = (F(3) * x1 * x1 + F(2) * a2 * x1 + a4 - a1 * y1) / den;
    nu = (F(0) - x1 * x1 * x1 + a4 * x1 + F(2) * a6 - a3 * y1) / den;
  } else {
    F dx = x2 - x1;
    lambda = (y2 - y1) / dx;
    nu = (y1 * x2 - y2 * x1) / dx;
  }
  F x3 = lambda * lambda + a1 * lambda - a2 - x1 - x2;
  F y3 = F(0) - (lambda + a1) * x3 - nu - a3;
  return AffinePoint<F>{x3, y3};
}

template <class F>
GroupPoint<F> group_mul(const std::array<F, 5>& a, long k, const GroupPoint<F>& P) {
  GroupPoint<F> base = k < 0 ? group_negate(a, P) : P;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  GroupPoint<F> acc;
  while (n) {
    if (n & 1) acc = group_add(a, acc, base);
    n >>= 1;
    if (n) base = group_add(a, base, base);
  }
  return acc;
}

// Checked operations on rational points. Throw DomainError when a point is
// not on W or W is singular.
CurvePoint add(const Weierstrass& W, const CurvePoint& P, const CurvePoint& Q);
CurvePoint negate(const Weierstrass& W, const CurvePoint& P);
CurvePoint scalar_mul(const Weierstrass& W, long k, const CurvePoint& P);

// Order of P if it is at most `limit`, else 0.
int point_order(const Weierstrass& W, const CurvePoint& P, int limit = 12);

struct IntegralModel {
  // Y^2 = X^3 + A X^2 + B X + C with X = 4 u^2 x, Y = 4 u^3 (2y + a1 x + a3)
  Integer A, B, C;
  Integer u;
};

IntegralModel integral_model(const Weierstrass& W);

// Rational torsion subgroup, sorted. Checked against #E(F_p) for at least
// three primes of good reduction.
std::vector<CurvePoint> torsion(const Weierstrass& W);

// Points +-k*gen + T (1 <= k <= N, T torsion) with integer coordinates,
// sorted and deduplicated.
std::vector<CurvePoint> integral_points_via_generator(const Weierstrass& W, const CurvePoint& gen, int N);

}  // namespace arboreal::curves
