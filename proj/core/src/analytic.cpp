#include "arboreal/analytic.hpp"

#include <cmath>

#include "arboreal/weierstrass.hpp"

namespace arboreal::analytic {

Real to_real(const Rational& q);

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::asin;
using boost::multiprecision::sqrt;

Real tolerance(int digits) {
  if (digits < 10 || digits > kMaxDigits)
    throw DomainError("precision must be between 10 and " + std::to_string(kMaxDigits) + " digits");
  return boost::multiprecision::pow(Real(10), -(digits + 10));
}

Real int_to_real(const Integer& n) {
  Real r;
  mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real pi() { return boost::math::constants::pi<Real>(); }

// Real root of 4x^3 + b2 x^2 + 2 b4 x + b6 (unique when disc < 0).
Real real_root(const curves::Weierstrass& W, const Real& tol) {
  const Real c3 = 4, c2 = to_real(W.b2()), c1 = 2 * to_real(W.b4()), c0 = to_real(W.b6());
  auto f = [&](const Real& x) { return ((c3 * x + c2) * x + c1) * x + c0; };
  auto df = [&](const Real& x) { return (3 * c3 * x + 2 * c2) * x + c1; };
  Real bound = 1 + std::max({abs(c2), abs(c1), abs(c0)}) / c3;
  Real lo = -bound, hi = bound;
  for (int i = 0; i < 100; ++i) {
    Real mid = (lo + hi) / 2;
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real x = (lo + hi) / 2;
  for (int i = 0; i < 50; ++i) {
    Real d = df(x);
    if (d == 0) break;
    Real step = f(x) / d;
    x -= step;
    if (abs(step) <= tol * (1 + abs(x))) break;
  }
  return x;
}

struct AgmSetup {
  Real alpha, beta;
};

AgmSetup agm_setup(const curves::Weierstrass& W, const Real& e1) {
  const Real b2 = to_real(W.b2()), b4 = to_real(W.b4());
  AgmSetup s;
  s.beta = sqrt(3 * e1 * e1 + b2 * e1 / 2 + b4 / 2);
  s.alpha = 3 * e1 + b2 / 4;
  return s;
}

Real agm(Real a, Real b, const Real& tol) {
  for (int i = 0; i < 400 && abs(a - b) > tol * abs(a); ++i) {
    Real na = (a + b) / 2;
    b = sqrt(a * b);
    a = na;
  }
  return a;
}

Integer lattice_dot(const std::array<Integer, 2>& u, const std::array<Integer, 2>& v) {
  return u[0] * v[0] + u[1] * v[1];
}

// Nearest integer to n / d (d > 0), ties toward +infinity.
Integer round_div(const Integer& n, const Integer& d) {
  Integer q;
  Integer num = 2 * n + d, den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Integer round_half_even(const Real& x) {
  Real r;
  mpfr_rint(r.backend().data(), x.backend().data(), MPFR_RNDN);
  Integer n;
  mpfr_get_z(n.get_mpz_t(), r.backend().data(), MPFR_RNDN);
  return n;
}

std::string to_string(const Real& x, int digits) { return x.str(digits); }

EllipticLogContext make_context(const curves::Weierstrass& W, int digits) {
  const Real tol = tolerance(digits);
  const Rational disc = W.discriminant();
  if (disc == 0) throw DomainError("singular Weierstrass model");
  if (disc > 0) throw DomainError("real locus has two components (discriminant > 0); not supported");
  EllipticLogContext ctx;
  ctx.curve = W;
  ctx.digits = digits;
  ctx.e1 = real_root(W, tol);
  const auto s = agm_setup(W, ctx.e1);
  ctx.omega1 = 2 * pi() / agm(2 * sqrt(s.beta), sqrt(2 * s.beta + s.alpha), tol);
  return ctx;
}

Real real_period(const curves::Weierstrass& W, int digits) { return make_context(W, digits).omega1; }

Real elliptic_log(const EllipticLogContext& ctx, const curves::CurvePoint& P) {
  if (P.is_infinity()) return Real(0);
  if (!curves::on_model(curves::CurveModel{ctx.curve, {}}, P))
    throw DomainError("point " + P.to_string() + " is not on the curve");
  const Real tol = tolerance(ctx.digits);
  const Real x = to_real(P.x());
  const Rational eta = 2 * P.y() + ctx.curve.a1() * P.x() + ctx.curve.a3();
  if (eta == 0) return ctx.omega1 / 2;

  const auto s = agm_setup(ctx.curve, ctx.e1);
  Real d = x - ctx.e1;
  if (d <= 0) throw DomainError("point is left of the real root; not a real point");
  Real a = 2 * sqrt(s.beta);
  Real b = sqrt(s.alpha + 2 * s.beta);
  Real c = (d + s.beta) / sqrt(d);
  for (int i = 0; i < 400 && abs(a - b) > tol * abs(a); ++i) {
    Real na = (a + b) / 2;
    Real nb = sqrt(a * b);
    Real nc = (c + sqrt(c * c + b * b - a * a)) / 2;
    a = na;
    b = nb;
    c = nc;
  }
  Real ratio = a / c;
  if (ratio > 1) ratio = 1;
  // asin covers half of the integral from x to infinity only for d >= beta.
  Real z = asin(ratio) / a;
  if (d < s.beta) z = ctx.omega1 / 2 - z;
  if (eta > 0) z = ctx.omega1 - z;
  if (z >= ctx.omega1) z -= ctx.omega1;
  if (z < 0) z += ctx.omega1;
  return z;
}

Real exp_x(const EllipticLogContext& ctx, const Real& z_in) {
  const auto& W = ctx.curve;
  const Real b2 = to_real(W.b2()), b4 = to_real(W.b4()), b6 = to_real(W.b6());
  const Real c4 = b2 * b2 - 24 * b4;
  const Real c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  const Real g2 = c4 / 12, g3 = c6 / 216;

  Real z = z_in - ctx.omega1 * boost::multiprecision::floor(z_in / ctx.omega1 + Real(1) / 2);
  if (z == 0) throw DomainError("exp_x: z is a lattice point");

  int m = 0;
  Real w = abs(z);
  while (w > Real(1) / (1 << 20)) {
    w /= 2;
    ++m;
  }

  // Laurent coefficients of wp: 1/w^2 + sum_{k>=2} c_k w^{2k-2}
  const int K = 80;
  std::vector<Real> ck(K + 1, Real(0));
  ck[2] = g2 / 20;
  ck[3] = g3 / 28;
  for (int k = 4; k <= K; ++k) {
    Real sum = 0;
    for (int j = 2; j <= k - 2; ++j) sum += ck[j] * ck[k - j];
    ck[k] = 3 * sum / ((2 * k + 1) * (k - 3));
  }
  const Real w2 = w * w;
  Real p = 1 / w2;
  Real pw = 1;  // w^{2k-2}
  const Real tol = tolerance(ctx.digits);
  for (int k = 2; k <= K; ++k) {
    pw *= w2;
    Real term = ck[k] * pw;
    p += term;
    if (abs(term) < tol * tol * abs(p)) break;
  }
  for (int i = 0; i < m; ++i) {
    Real dd = 6 * p * p - g2 / 2;
    Real pp2 = 4 * p * p * p - g2 * p - g3;
    p = dd * dd / (4 * pp2) - 2 * p;
  }
  return p - b2 / 12;
}

BoundReductionResult reduce_multiplier_bound(const BoundReductionInput& inp) {
  if (inp.N0 < 0) throw DomainError("N0 must be nonnegative");
  if (inp.C < inp.N0 * inp.N0) throw DomainError("C must be at least N0^2");
  if (inp.A <= 0 || inp.B <= 0) throw DomainError("decay pair (A, B) must be positive");
  BoundReductionResult r;
  const Real C = int_to_real(inp.C);
  const Integer cpsi = round_half_even(C * inp.psi);
  const Integer comega = round_half_even(C * inp.omega);
  r.X = {{{Integer(1), Integer(0)}, {cpsi, comega}}};

  std::array<Integer, 2> u{Integer(1), cpsi}, v{Integer(0), comega};
  if (lattice_dot(u, u) > lattice_dot(v, v)) std::swap(u, v);
  for (int iter = 0; iter < 10000; ++iter) {
    const Integer mu = round_div(lattice_dot(u, v), lattice_dot(u, u));
    v[0] -= mu * u[0];
    v[1] -= mu * u[1];
    if (lattice_dot(v, v) >= lattice_dot(u, u)) break;
    std::swap(u, v);
  }
  r.Y = {{{u[0], v[0]}, {u[1], v[1]}}};
  r.shortest_sq = lattice_dot(u, u);

  const Integer slack = 2 * inp.N0 * inp.N0;
  if (r.shortest_sq <= slack)
    throw DomainError("reduced lattice too short for this N0; raise the scaling C");
  const Real N0 = int_to_real(inp.N0);
  r.lower_bound = (sqrt(int_to_real(Integer(r.shortest_sq - slack))) - (Real(1) / 2 + N0)) / C;
  if (r.lower_bound <= 0) throw DomainError("nonpositive lower bound; raise the scaling C");

  if (inp.N0 == 0 || inp.A <= r.lower_bound) {
    r.N1 = 0;
    return r;
  }
  const Real n = sqrt(boost::multiprecision::log(inp.A / r.lower_bound) / inp.B);
  Integer n1 = round_half_even(boost::multiprecision::floor(n));
  if (n1 > inp.N0) n1 = inp.N0;
  r.N1 = n1.get_si();
  return r;
}

std::pair<Real, Real> decay_pair(const BoundConstants& k) { return {Real(k.c5), Real(k.decay)}; }

double david_bound_log10(const BoundConstants& k) {
  const long double B = k.decay, lnA = std::log(static_cast<long double>(k.c5));
  auto excess = [&](long double L) {  // L = log N
    const long double lhs = B * std::exp(2 * L) - lnA;
    const long double rhs = k.c10 * (L + k.log_shift) * std::pow(std::log(L) + k.h + k.log_shift, 2);
    return lhs - rhs;
  };
  long double lo = 1.5, hi = 400;
  if (excess(lo) > 0) return static_cast<double>(lo / std::log(10.0L));
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    if (excess(mid) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>(lo / std::log(10.0L));
}

}  // namespace arboreal::analytic
