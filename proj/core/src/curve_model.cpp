#include "arboreal/curve_model.hpp"

#include <algorithm>
#include <cctype>

#include "arboreal/bipoly.hpp"

namespace arboreal::curves {

Rational Weierstrass::b2() const { return a1() * a1() + 4 * a2(); }
Rational Weierstrass::b4() const { return 2 * a4() + a1() * a3(); }
Rational Weierstrass::b6() const { return a3() * a3() + 4 * a6(); }
Rational Weierstrass::b8() const {
  return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}

Rational Weierstrass::discriminant() const {
  const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

Poly Weierstrass::rhs() const { return Poly{a6(), a4(), a2(), 1}; }

const Weierstrass& CurveModel::weierstrass() const {
  if (const auto* w = std::get_if<Weierstrass>(&shape)) return *w;
  throw DomainError("model '" + label + "' is not in Weierstrass form");
}

std::pair<Poly, Poly> CurveModel::even_form() const {
  if (const auto* e = std::get_if<EvenModel>(&shape)) return {Poly::constant(1), e->h};
  if (const auto* t = std::get_if<TwistedModel>(&shape)) return {t->g, t->h};
  throw DomainError("model '" + label + "' is a Weierstrass model");
}

CurveModel make_weierstrass(std::array<Rational, 5> a, std::string label) {
  return {Weierstrass{std::move(a)}, std::move(label)};
}

CurveModel make_even(Poly h, std::string label) {
  if (h.is_zero()) throw DomainError("even model with h = 0");
  return {EvenModel{std::move(h)}, std::move(label)};
}

CurveModel make_twisted(Poly g, Poly h, std::string label) {
  if (g.is_zero() || h.is_zero()) throw DomainError("twisted model with a zero polynomial");
  return {TwistedModel{std::move(g), std::move(h)}, std::move(label)};
}

CurvePoint CurvePoint::affine(Rational x, Rational y) {
  CurvePoint p;
  p.infinite_ = false;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

CurvePoint CurvePoint::infinity(Branch b) {
  CurvePoint p;
  p.branch_ = b;
  return p;
}

const Rational& CurvePoint::x() const {
  if (infinite_) throw DomainError("point at infinity has no affine x");
  return x_;
}

const Rational& CurvePoint::y() const {
  if (infinite_) throw DomainError("point at infinity has no affine y");
  return y_;
}

std::string CurvePoint::to_string() const {
  if (infinite_) {
    switch (branch_) {
      case Branch::Plus: return "inf+";
      case Branch::Minus: return "inf-";
      case Branch::Single: return "inf";
    }
  }
  return "(" + x_.get_str() + ", " + y_.get_str() + ")";
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinite_ != b.infinite_) return false;
  if (a.infinite_) return a.branch_ == b.branch_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_;
  if (a.infinite_) return a.branch_ < b.branch_;
  const Integer ha = height(a.x_), hb = height(b.x_);
  if (ha != hb) return ha < hb;
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.y_ < b.y_;
}

CurvePoint parse_point(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "inf" || s == "infinity" || s == "O") return CurvePoint::infinity();
  if (s == "inf+") return CurvePoint::infinity(Branch::Plus);
  if (s == "inf-") return CurvePoint::infinity(Branch::Minus);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw DomainError("bad point '" + std::string(text) + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("bad point '" + std::string(text) + "'");
  return CurvePoint::affine(parse_rational(s.substr(1, comma - 1)),
                            parse_rational(s.substr(comma + 1, s.size() - comma - 2)));
}

CurveModel parse_curve(std::string_view text, std::string label) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw DomainError("curve must have exactly one '=': '" + std::string(text) + "'");
  auto lhs = parse_expression(text.substr(0, eq));
  auto rhs = parse_expression(text.substr(eq + 1));
  if (lhs.xvar && rhs.xvar && lhs.xvar != rhs.xvar) throw DomainError("curve uses more than two variables");
  if (label.empty()) label = std::string(text);

  BiPoly F = lhs.poly - rhs.poly;
  if (F.degree_y() != 2) throw DomainError("curve must be quadratic in y: '" + std::string(text) + "'");
  Poly G = F.coeff_y(2), L1 = F.coeff_y(1), F0 = F.coeff_y(0);

  if (G.is_constant()) {
    const Rational g = G.coeff(0);
    Poly cubic = F0 * Rational(-1 / g);
    Poly lin = L1 * Rational(1 / g);
    if (cubic.degree() == 3 && cubic.leading() == 1 && lin.degree() <= 1) {
      return make_weierstrass({lin.coeff(1), cubic.coeff(2), lin.coeff(0), cubic.coeff(1), cubic.coeff(0)},
                              std::move(label));
    }
  }
  if (!L1.is_zero()) throw DomainError("unsupported curve shape (y-linear term): '" + std::string(text) + "'");
  if (G == Poly::constant(1)) return make_even(-F0, std::move(label));
  return make_twisted(G, -F0, std::move(label));
}

std::string to_string(const CurveModel& m) {
  if (const auto* w = std::get_if<Weierstrass>(&m.shape)) {
    BiPoly lhs = BiPoly::y() * BiPoly::y() + BiPoly::constant(w->a1()) * BiPoly::x() * BiPoly::y() +
                 BiPoly::constant(w->a3()) * BiPoly::y();
    return lhs.to_string() + " = " + w->rhs().to_string("x");
  }
  auto [g, h] = m.even_form();
  if (g == Poly::constant(1)) return "y^2 = " + h.to_string();
  if (g == Poly::constant(-1)) return "-y^2 = " + h.to_string();
  return "(" + g.to_string() + ")*y^2 = " + h.to_string();
}

std::vector<CurvePoint> infinity_points(const CurveModel& m) {
  if (m.is_weierstrass()) return {CurvePoint::infinity()};
  auto [g, h] = m.even_form();
  Poly F = g * h;
  if (F.degree() % 2 != 0) return {CurvePoint::infinity()};
  if (rational_sqrt(F.leading())) return {CurvePoint::infinity(Branch::Plus), CurvePoint::infinity(Branch::Minus)};
  return {};
}

bool on_model(const CurveModel& m, const CurvePoint& p) {
  if (p.is_infinity()) {
    auto inf = infinity_points(m);
    return std::find(inf.begin(), inf.end(), p) != inf.end();
  }
  const Rational& x = p.x();
  const Rational& y = p.y();
  if (const auto* w = std::get_if<Weierstrass>(&m.shape)) {
    return y * y + w->a1() * x * y + w->a3() * y == w->rhs()(x);
  }
  auto [g, h] = m.even_form();
  return g(x) * y * y == h(x);
}

namespace {

long reduce_mod(const Rational& q, long p) {
  Integer P = p;
  if (mpz_divisible_p(q.get_den_mpz_t(), P.get_mpz_t()) != 0)
    throw DomainError("bad reduction: denominator divisible by " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), P.get_mpz_t());
  Integer r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
  return r.get_si();
}

std::vector<long> reduce_poly(const Poly& f, long p) {
  std::vector<long> out;
  for (const auto& c : f.coeffs()) out.push_back(reduce_mod(c, p));
  return out;
}

long eval_mod(const std::vector<long>& f, long t, long p) {
  long acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = static_cast<long>((static_cast<__int128>(acc) * t + *it) % p);
  return acc;
}

// chi[v] = Legendre symbol (v / p)
std::vector<int> legendre_table(long p) {
  std::vector<int> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (long v = 1; v < p; ++v) chi[static_cast<std::size_t>(static_cast<__int128>(v) * v % p)] = 1;
  return chi;
}

void require_odd_prime(long p) {
  if (p < 3 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0)
    throw DomainError("count_points_mod_p: p must be an odd prime");
}

}  // namespace

long count_points_mod_p(const CurveModel& m, long p) {
  require_odd_prime(p);
  if (p > 50'000'000) throw DomainError("count_points_mod_p: p too large for enumeration");
  const auto chi = legendre_table(p);
  if (const auto* w = std::get_if<Weierstrass>(&m.shape)) {
    for (const auto& a : w->a) reduce_mod(a, p);
    if (reduce_mod(w->discriminant(), p) == 0)
      throw DomainError("bad reduction at " + std::to_string(p) + " (discriminant)");
    const long a1 = reduce_mod(w->a1(), p), a3 = reduce_mod(w->a3(), p);
    const auto rhs = reduce_poly(w->rhs(), p);
    long count = 1;
    for (long x = 0; x < p; ++x) {
      long lin = (a1 * x + a3) % p;
      long d = static_cast<long>((static_cast<__int128>(lin) * lin + 4 * static_cast<__int128>(eval_mod(rhs, x, p))) % p);
      count += 1 + chi[static_cast<std::size_t>(d)];
    }
    return count;
  }

  auto [g, h] = m.even_form();
  const Poly F = g * h;
  if (F.degree() < 1) throw DomainError("count_points_mod_p: constant model");
  const auto Fp = reduce_poly(F, p);
  reduce_poly(g, p);
  reduce_poly(h, p);
  if (Fp.back() == 0) throw DomainError("bad reduction at " + std::to_string(p) + " (leading coefficient)");
  if (F.degree() >= 2 && reduce_mod(discriminant(F), p) == 0)
    throw DomainError("bad reduction at " + std::to_string(p) + " (discriminant)");

  long count = 0;
  for (long t = 0; t < p; ++t) {
    // Points of Y^2 = g h; a root of g gives the single point Y = 0.
    count += 1 + chi[static_cast<std::size_t>(eval_mod(Fp, t, p))];
  }
  if (F.degree() % 2 != 0) {
    count += 1;
  } else if (chi[static_cast<std::size_t>(Fp.back())] == 1) {
    count += 2;
  }
  return count;
}

CurveModel quadratic_twist(const CurveModel& m, const Integer& d) {
  if (d == 0) throw DomainError("twist by zero");
  if (d == 1) return m;
  const std::string label = m.label + "^(" + d.get_str() + ")";
  const Rational D(d);
  if (const auto* w = std::get_if<Weierstrass>(&m.shape)) {
    return make_weierstrass({0, w->b2() / 4 * D, 0, w->b4() / 2 * D * D, w->b6() / 4 * D * D * D}, label);
  }
  auto [g, h] = m.even_form();
  return make_twisted(g * D, h, label);
}

}  // namespace arboreal::curves
