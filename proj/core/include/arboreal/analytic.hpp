#pragma once

// Real periods, elliptic logarithms and the lattice step that shrinks an
// astronomically large multiplier bound for integral points.
//
// Reals are MPFR numbers with a fixed 200-digit mantissa. The `digits`
// argument (default 80, at most 180) sets the convergence tolerance, not the
// storage precision, so contexts are plain values and safe across threads.

#include <array>
#include <boost/multiprecision/mpfr.hpp>

#include "arboreal/curve_model.hpp"

namespace arboreal::analytic {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<200>,
                                           boost::multiprecision::et_off>;

inline constexpr int kDefaultDigits = 80;
inline constexpr int kMaxDigits = 180;

Real to_real(const Rational& q);
// Nearest integer, ties to even.
Integer round_half_even(const Real& x);
std::string to_string(const Real& x, int digits);

struct EllipticLogContext {
  curves::Weierstrass curve;
  Real omega1;  // real period
  Real e1;      // real root of 4x^3 + b2 x^2 + 2 b4 x + b6
  int digits = kDefaultDigits;
};

// Throws DomainError when the curve is singular or its real locus has two
// components (discriminant > 0).
EllipticLogContext make_context(const curves::Weierstrass& W, int digits = kDefaultDigits);

Real real_period(const curves::Weierstrass& W, int digits = kDefaultDigits);

// psi(P) in [0, omega1). Throws DomainError for points not on the curve.
Real elliptic_log(const EllipticLogContext& ctx, const curves::CurvePoint& P);

// x-coordinate of the point with elliptic logarithm z (z not a multiple of
// omega1): Laurent series of the Weierstrass function plus duplication.
Real exp_x(const EllipticLogContext& ctx, const Real& z);

struct BoundReductionInput {
  Integer C;          // scaling, C >= N0^2
  Integer N0;         // initial multiplier bound
  Real A;             // |m omega + N psi| <= A exp(-B N^2)
  Real B;
  Real omega;
  Real psi;
};

struct BoundReductionResult {
  std::array<std::array<Integer, 2>, 2> X;  // columns (1, [C psi]) and (0, [C omega])
  std::array<std::array<Integer, 2>, 2> Y;  // Lagrange-Gauss reduced columns
  Integer shortest_sq;                      // |shortest column|^2
  Real lower_bound;                         // lower bound on |m omega + N psi|
  long N1 = 0;                              // N > N1 is impossible
};

// Throws DomainError when C < N0^2 or when the reduced lattice is too short
// to give a positive lower bound (raise C).
BoundReductionResult reduce_multiplier_bound(const BoundReductionInput& inp);

// Constant table for the curve y^2 = x^3 - x + 1 with generator (1, 1).
struct BoundConstants {
  double h = 8.841;
  double mu = 2.9356;
  double c1 = 160.07;
  double c2 = 0.099617;
  double c3 = 8;
  double c5 = 35.785;
  double c7 = 0.555;
  double c8 = 24.032;
  double c9 = 3.962;
  double omega1 = 4.767;
  double psi = 3.676;
  double hm = 8.841;
  int n = 2;
  double c10 = 4.074e40;
  double decay = 0.049805;  // coefficient of N^2 in the lower inequality
  double log_shift = 1.377;
};

// (A, B) of the decay inequality: A = c5, B = decay.
std::pair<Real, Real> decay_pair(const BoundConstants& k);

// Largest N with B N^2 - log A <= c10 (log N + s)(log log N + h + s)^2,
// where s = log_shift. Returns log10 of that N.
double david_bound_log10(const BoundConstants& k);

}  // namespace arboreal::analytic
