#include "arboreal/weierstrass.hpp"

#include <algorithm>

#include "arboreal/arith.hpp"

namespace arboreal::curves {

namespace {

GroupPoint<Rational> to_group(const CurvePoint& P) {
  if (P.is_infinity()) return std::nullopt;
  return AffinePoint<Rational>{P.x(), P.y()};
}

CurvePoint from_group(const GroupPoint<Rational>& P) {
  if (!P) return CurvePoint::infinity();
  return CurvePoint::affine(P->x, P->y);
}

void check(const Weierstrass& W, const CurvePoint& P) {
  if (P.is_infinity() && P.branch() != Branch::Single) throw DomainError("branch point on a Weierstrass model");
  CurveModel m{W, {}};
  if (!on_model(m, P)) throw DomainError("point " + P.to_string() + " is not on the curve");
}

void check_nonsingular(const Weierstrass& W) {
  if (!W.is_nonsingular()) throw DomainError("singular Weierstrass model");
}

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

CurvePoint add(const Weierstrass& W, const CurvePoint& P, const CurvePoint& Q) {
  check_nonsingular(W);
  check(W, P);
  check(W, Q);
  return from_group(group_add(W.a, to_group(P), to_group(Q)));
}

CurvePoint negate(const Weierstrass& W, const CurvePoint& P) {
  check(W, P);
  return from_group(group_negate(W.a, to_group(P)));
}

CurvePoint scalar_mul(const Weierstrass& W, long k, const CurvePoint& P) {
  check_nonsingular(W);
  check(W, P);
  return from_group(group_mul(W.a, k, to_group(P)));
}

int point_order(const Weierstrass& W, const CurvePoint& P, int limit) {
  check(W, P);
  const auto g = to_group(P);
  GroupPoint<Rational> acc = g;
  for (int k = 1; k <= limit; ++k) {
    if (!acc) return k;
    acc = group_add(W.a, acc, g);
  }
  return 0;
}

IntegralModel integral_model(const Weierstrass& W) {
  const Rational A0 = W.b2(), B0 = 8 * W.b4(), C0 = 16 * W.b6();
  Integer u = lcm_int(lcm_int(A0.get_den(), B0.get_den()), C0.get_den());
  const Rational U(u);
  const Rational u2 = U * U;
  IntegralModel m;
  m.u = u;
  m.A = Integer(A0 * u2);
  m.B = Integer(B0 * u2 * u2);
  m.C = Integer(C0 * u2 * u2 * u2);
  return m;
}

std::vector<CurvePoint> torsion(const Weierstrass& W) {
  check_nonsingular(W);
  const IntegralModel im = integral_model(W);
  const Integer &A = im.A, &B = im.B, &C = im.C;
  const Integer D = -4 * A * A * A * C + A * A * B * B + 18 * A * B * C - 4 * B * B * B - 27 * C * C;
  if (D == 0) throw DomainError("torsion: singular integral model");

  const auto fd = arith::factor(D);
  if (!fd.complete) throw InexactClassError("torsion: discriminant not fully factored");
  std::vector<Integer> ys{1};
  for (const auto& [p, e] : fd.factored_part) {
    const std::size_t base = ys.size();
    Integer pk = 1;
    for (int k = 1; 2 * k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ys.push_back(ys[i] * pk);
    }
  }
  ys.push_back(0);

  const Rational U(im.u);
  const Rational xscale = 4 * U * U, yscale = 4 * U * U * U;
  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (const auto& Y : ys) {
    Poly cubic{Rational(C - Y * Y), Rational(B), Rational(A), 1};
    for (const auto& X : rational_roots(cubic)) {
      if (!is_integral(X)) continue;
      for (int s : {1, -1}) {
        if (Y == 0 && s < 0) continue;
        Rational x = X / xscale;
        Rational eta = Rational(s * Y) / yscale;
        Rational y = (eta - W.a1() * x - W.a3()) / 2;
        auto P = CurvePoint::affine(x, y);
        if (point_order(W, P, 12) > 0) out.push_back(P);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  // |T| must divide #E(F_p) for odd primes of good reduction.
  Integer g = 0;
  int used = 0;
  CurveModel m{W, {}};
  for (long p = 3; used < 5 && p < 1000; p += 2) {
    if (mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0) continue;
    long n;
    try {
      n = count_points_mod_p(m, p);
    } catch (const DomainError&) {
      continue;
    }
    mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(n));
    ++used;
  }
  if (used < 3) throw Error("torsion: fewer than three primes of good reduction below 1000");
  if (mpz_divisible_ui_p(g.get_mpz_t(), out.size()) == 0)
    throw Error("torsion: Lutz-Nagell result inconsistent with #E(F_p)");
  return out;
}

std::vector<CurvePoint> integral_points_via_generator(const Weierstrass& W, const CurvePoint& gen, int N) {
  check_nonsingular(W);
  check(W, gen);
  std::vector<CurvePoint> out;
  if (N <= 0) return out;
  const auto T = torsion(W);
  const auto g = to_group(gen);
  GroupPoint<Rational> kP;
  for (int k = 1; k <= N; ++k) {
    kP = group_add(W.a, kP, g);
    for (const auto& base : {kP, group_negate(W.a, kP)}) {
      for (const auto& t : T) {
        auto Q = group_add(W.a, base, to_group(t));
        if (Q && is_integral(Q->x) && is_integral(Q->y)) out.push_back(from_group(Q));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace arboreal::curves
