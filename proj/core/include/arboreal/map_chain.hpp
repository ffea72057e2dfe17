#pragma once

// Birational maps between curve models as chains of rational coordinate
// maps (x, y) -> (X(x, y), Y(x, y)).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arboreal/bipoly.hpp"
#include "arboreal/curve_model.hpp"

namespace arboreal::curves {

struct RationalFunction {
  BiPoly num;
  BiPoly den = BiPoly::constant(1);
};

struct MapStep {
  RationalFunction x;
  RationalFunction y;
  std::string label;
  // When set, every image is asserted to lie on this model.
  std::optional<CurveModel> target;

  // Nonconstant denominators; the step is undefined where one vanishes.
  std::vector<BiPoly> exception_divisor() const;
};

struct RationalMapChain {
  std::string name;
  std::optional<CurveModel> source;
  std::vector<MapStep> steps;
  // All source points over a target point; empty when not provided.
  std::function<std::vector<CurvePoint>(const CurvePoint&)> inverse;
};

struct ChainResult {
  std::optional<CurvePoint> point;
  std::optional<std::size_t> failed_step;  // index of the step whose exception divisor was hit
  std::string reason;
};

// Throws DomainError if the chain has a source and P is not on it. Points at
// infinity are not transported (failed_step = 0).
ChainResult apply_map_chain(const RationalMapChain& chain, const CurvePoint& P);

// (x, y) -> (2(x^2 - y) + a x, x(4x^2 + 2a x - 4y + b)).
MapStep quartic_map_step(const Rational& a, const Rational& b, std::optional<CurveModel> target);

// Preimages of (X, Y) under quartic_map_step(a, b) on y^2 = h, h monic
// quartic: y = x^2 + (a x - X)/2 and x = Y/(2X + b); when 2X + b = 0 the
// x-coordinates are the rational roots of the remaining cubic.
std::vector<CurvePoint> invert_quartic_map(const Poly& h, const Rational& a, const Rational& b,
                                           const CurvePoint& target);

// E2 -> y^2 = (t+1)(t^3+2t^2+t+1) -> W' -> W: y^2 = x^3 - x + 1.
RationalMapChain e2_chain();
// All E2 points over an affine point of y^2 = x^3 - x + 1.
std::vector<CurvePoint> invert_E2_chain(const CurvePoint& Q);

// E1: -y^2 = t^3+2t^2+t+1 -> W1: y^2 = x^3 - 2x^2 + x - 1, (t, y) -> (-t, y).
RationalMapChain e1_chain();

// C3: y^2 = t^4+2t^3+t^2+t -> C3': y^2 = x^3+x^2+2x+1, (t, y) -> (1/t, y/t^2).
RationalMapChain c3_chain();

// gamma = 1: E: y^2 = t^4-2t^3+t^2+t -> E': y^2 - 2xy + 2y = x^3.
RationalMapChain gamma1_chain();

}  // namespace arboreal::curves
