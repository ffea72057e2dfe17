#include "arboreal/map_chain.hpp"

#include <algorithm>

#include "arboreal/catalog.hpp"

namespace arboreal::curves {

std::vector<BiPoly> MapStep::exception_divisor() const {
  std::vector<BiPoly> out;
  if (!x.den.is_constant()) out.push_back(x.den);
  if (!y.den.is_constant() && !(y.den == x.den)) out.push_back(y.den);
  return out;
}

ChainResult apply_map_chain(const RationalMapChain& chain, const CurvePoint& P) {
  if (chain.source && !on_model(*chain.source, P))
    throw DomainError("point " + P.to_string() + " is not on " + chain.source->label);
  ChainResult r;
  if (P.is_infinity()) {
    r.failed_step = 0;
    r.reason = "points at infinity are not transported";
    return r;
  }
  Rational x = P.x(), y = P.y();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const MapStep& s = chain.steps[i];
    const Rational dx = s.x.den(x, y), dy = s.y.den(x, y);
    if (dx == 0 || dy == 0) {
      r.failed_step = i;
      r.reason = "exception divisor of step " + std::to_string(i) + " (" + s.label + ")";
      return r;
    }
    Rational nx = s.x.num(x, y) / dx;
    Rational ny = s.y.num(x, y) / dy;
    x = std::move(nx);
    y = std::move(ny);
    if (s.target && !on_model(*s.target, CurvePoint::affine(x, y)))
      throw Error("map step " + std::to_string(i) + " (" + s.label + ") left its target model");
  }
  r.point = CurvePoint::affine(x, y);
  return r;
}

MapStep quartic_map_step(const Rational& a, const Rational& b, std::optional<CurveModel> target) {
  const BiPoly X = BiPoly::x(), Y = BiPoly::y();
  const BiPoly A = BiPoly::constant(a), B = BiPoly::constant(b);
  MapStep s;
  s.x.num = BiPoly::constant(2) * (X * X - Y) + A * X;
  s.y.num = X * (BiPoly::constant(4) * X * X + BiPoly::constant(2) * A * X - BiPoly::constant(4) * Y + B);
  s.label = "quartic to Weierstrass";
  s.target = std::move(target);
  return s;
}

std::vector<CurvePoint> invert_quartic_map(const Poly& h, const Rational& a, const Rational& b,
                                           const CurvePoint& target) {
  if (h.degree() != 4 || h.leading() != 1) throw DomainError("invert_quartic_map: h must be a monic quartic");
  if (target.is_infinity()) return {};
  const Rational& X = target.x();
  const Rational& Y = target.y();
  auto y_of = [&](const Rational& x) -> Rational { return x * x + (a * x - X) / 2; };
  std::vector<CurvePoint> out;
  const Rational denom = 2 * X + b;
  if (denom != 0) {
    Rational x = Y / denom;
    Rational y = y_of(x);
    if (y * y == h(x)) out.push_back(CurvePoint::affine(x, y));
    return out;
  }
  if (Y != 0) return out;
  // (x^2 + (a x - X)/2)^2 - h(x): the x^4 terms cancel.
  const Poly s{-X / 2, a / 2, 1};
  const Poly residual = s * s - h;
  if (residual.is_zero()) throw DomainError("invert_quartic_map: fiber is not finite");
  for (const auto& x : rational_roots(residual)) out.push_back(CurvePoint::affine(x, y_of(x)));
  return out;
}

namespace {

const Rational kE2a = 3;
const Rational kE2b = make_rational(3, 2);

Poly e2_quartic() { return Poly{1, 1} * Poly{1, 1, 2, 1}; }

}  // namespace

std::vector<CurvePoint> invert_E2_chain(const CurvePoint& Q) {
  if (Q.is_infinity()) return {};
  const CurveModel W = named_curve("W");
  if (!on_model(W, Q)) throw DomainError("point " + Q.to_string() + " is not on y^2 = x^3 - x + 1");
  // undo (x, y) -> (x + 1, y + 3/2 x + 2)
  const Rational x1 = Q.x() - 1;
  const Rational y1 = Q.y() - kE2b * x1 - 2;
  std::vector<CurvePoint> out;
  for (const auto& q : invert_quartic_map(e2_quartic(), kE2a, kE2b, CurvePoint::affine(x1, y1))) {
    const Rational& t = q.x();
    if (t == -1) continue;  // (t+1) y^2 = 1 has no point on t = -1
    out.push_back(CurvePoint::affine(t, q.y() / (t + 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalMapChain e2_chain() {
  const BiPoly X = BiPoly::x(), Y = BiPoly::y();
  RationalMapChain chain;
  chain.name = "E2 -> W";
  chain.source = named_curve("E2");

  MapStep lift;
  lift.x.num = X;
  lift.y.num = Y * (X + BiPoly::constant(1));
  lift.label = "(t, y) -> (t, y(t+1))";
  lift.target = make_even(e2_quartic(), "y^2 = (t+1)(t^3+2t^2+t+1)");
  chain.steps.push_back(std::move(lift));

  chain.steps.push_back(quartic_map_step(kE2a, kE2b, named_curve("W'")));

  MapStep shift;
  shift.x.num = X + BiPoly::constant(1);
  shift.y.num = Y + BiPoly::constant(kE2b) * X + BiPoly::constant(2);
  shift.label = "(x, y) -> (x + 1, y + 3/2 x + 2)";
  shift.target = named_curve("W");
  chain.steps.push_back(std::move(shift));

  chain.inverse = invert_E2_chain;
  return chain;
}

RationalMapChain e1_chain() {
  RationalMapChain chain;
  chain.name = "E1 -> W1";
  chain.source = named_curve("E1");
  MapStep s;
  s.x.num = -BiPoly::x();
  s.y.num = BiPoly::y();
  s.label = "(t, y) -> (-t, y)";
  s.target = named_curve("W1");
  chain.steps.push_back(std::move(s));
  chain.inverse = [](const CurvePoint& Q) -> std::vector<CurvePoint> {
    if (Q.is_infinity()) return {};
    return {CurvePoint::affine(-Q.x(), Q.y())};
  };
  return chain;
}

RationalMapChain c3_chain() {
  const BiPoly X = BiPoly::x();
  RationalMapChain chain;
  chain.name = "C3 -> C3'";
  chain.source = named_curve("C3");
  MapStep s;
  s.x.num = BiPoly::constant(1);
  s.x.den = X;
  s.y.num = BiPoly::y();
  s.y.den = X * X;
  s.label = "(t, y) -> (1/t, y/t^2)";
  s.target = named_curve("C3'");
  chain.steps.push_back(std::move(s));
  chain.inverse = [](const CurvePoint& Q) -> std::vector<CurvePoint> {
    if (Q.is_infinity() || Q.x() == 0) return {};
    const Rational t = 1 / Q.x();
    return {CurvePoint::affine(t, Q.y() * t * t)};
  };
  return chain;
}

RationalMapChain gamma1_chain() {
  RationalMapChain chain;
  chain.name = "E -> E'";
  chain.source = named_curve("E");
  chain.steps.push_back(quartic_map_step(-2, 0, named_curve("E'")));
  chain.inverse = [](const CurvePoint& Q) {
    return invert_quartic_map(named_curve("E").even_form().second, -2, 0, Q);
  };
  return chain;
}

}  // namespace arboreal::curves
