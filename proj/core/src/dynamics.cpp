#include "arboreal/dynamics.hpp"

namespace arboreal::dynamics {

Rational QuadMap::iterate(const Rational& x, int n) const {
  Rational v = x;
  for (int i = 0; i < n; ++i) v = (*this)(v);
  return v;
}

std::vector<Rational> critical_orbit(const QuadMap& m, int n) {
  if (n < 1) throw DomainError("critical_orbit: depth must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  Rational v = m.gamma;
  for (int i = 0; i < n; ++i) {
    v = m(v);
    out.push_back(v);
  }
  return out;
}

Poly iterate_value_poly(const Rational& gamma, int n) {
  if (n < 1) throw DomainError("iterate_value_poly: depth must be >= 1");
  if (n > kMaxSymbolicDepth) throw DomainError("iterate_value_poly: depth above cap");
  const Poly t = Poly::variable();
  const Poly g = Poly::constant(gamma);
  Poly v = g;
  for (int i = 0; i < n; ++i) {
    Poly d = v - g;
    v = d * d + t;
  }
  return v;
}

Poly iterate_poly(const QuadMap& m, int n) {
  if (n < 1) throw DomainError("iterate_poly: depth must be >= 1");
  if (n > kMaxSymbolicDepth) throw DomainError("iterate_poly: depth above cap");
  const Poly f{m.gamma * m.gamma + m.c, -2 * m.gamma, 1};
  Poly v = f;
  for (int i = 1; i < n; ++i) v = f.compose(v);
  return v;
}

bool check_disc_recursion(const QuadMap& m, int n) {
  if (n < 2) throw DomainError("check_disc_recursion: depth must be >= 2");
  const Rational lhs = discriminant(iterate_poly(m, n));
  const Rational prev = discriminant(iterate_poly(m, n - 1));
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 1ul << n);
  const Rational rhs = prev * prev * Rational(two_pow) * m.iterate(m.gamma, n);
  return lhs == rhs || lhs == -rhs;
}

}  // namespace arboreal::dynamics
