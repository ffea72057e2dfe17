#include "arboreal/padic.hpp"

#include <algorithm>
#include <sstream>

namespace arboreal::padic {

namespace {

constexpr std::size_t kMaxNDegree = 64;

Integer ipow(long p, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

// Strips factors of p from n; returns the count.
int remove_p(Integer& n, long p) {
  if (n == 0) return 0;
  Integer pp(p);
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

int vp(const Rational& q, long p) {
  if (q == 0) return 0;
  Integer num = q.get_num(), den = q.get_den();
  return remove_p(num, p) - remove_p(den, p);
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("element is not invertible modulo p^k");
  return r;
}

// q mod p^prec, allowing a p-power denominator.
Rational reduce_coordinate(const Rational& q, long p, int prec) {
  if (q == 0) return 0;
  Integer num = q.get_num(), den = q.get_den();
  const int e = remove_p(den, p);
  if (prec + e <= 0) return 0;
  const Integer m = ipow(p, prec + e);
  Integer r = mod_nonneg(num * inverse_mod(den, m), m);
  return make_rational(r, ipow(p, e));
}

std::string coord_string(const std::array<Rational, 3>& c) {
  std::ostringstream os;
  bool first = true;
  for (int i = 2; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] < 0 ? " - " : " + ");
    else if (c[i] < 0) os << "-";
    first = false;
    const Rational a = abs(c[i]);
    const bool unit = a == 1 && i > 0;
    if (!unit) os << arboreal::to_string(a);
    if (i == 1) os << (unit ? "" : "*") << "alpha";
    if (i == 2) os << (unit ? "" : "*") << "alpha^2";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

// ----- FieldElement -----

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  std::array<Rational, 5> d{0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i + j] += c_[i] * o.c_[j];
  // alpha^3 = 1 - alpha^2, alpha^4 = alpha + alpha^2 - 1
  c_[0] = d[0] + d[3] - d[4];
  c_[1] = d[1] + d[4];
  c_[2] = d[2] - d[3] + d[4];
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(alpha)");
  // Columns of multiplication by *this on the basis 1, alpha, alpha^2.
  std::array<std::array<Rational, 4>, 3> m;
  FieldElement basis = FieldElement(1);
  for (int col = 0; col < 3; ++col) {
    FieldElement prod = *this * basis;
    for (int row = 0; row < 3; ++row) m[row][col] = prod.c_[row];
    basis *= alpha();
  }
  for (int row = 0; row < 3; ++row) m[row][3] = row == 0 ? 1 : 0;
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (int row = 0; row < 3; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (int k = 0; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return {m[0][3], m[1][3], m[2][3]};
}

std::string FieldElement::to_string() const { return coord_string(c_); }

// ----- RingElement -----

RingElement::RingElement(const FieldElement& exact, long p, int prec) : p_(p), prec_(prec), v_(exact) {
  if (p < 2) throw DomainError("p must be a prime");
  normalize();
}

void RingElement::normalize() {
  const auto& c = v_.coeffs();
  v_ = FieldElement(reduce_coordinate(c[0], p_, prec_), reduce_coordinate(c[1], p_, prec_),
                    reduce_coordinate(c[2], p_, prec_));
}

int RingElement::valuation() const {
  if (v_.is_zero()) return prec_;
  int v = prec_;
  for (const auto& q : v_.coeffs())
    if (q != 0) v = std::min(v, vp(q, p_));
  return v;
}

std::array<Integer, 3> RingElement::reduce(int k) const {
  if (k > prec_)
    throw PrecisionError("requested p^" + std::to_string(k) + " but only p^" + std::to_string(prec_) +
                         " is known");
  const Integer m = ipow(p_, k);
  std::array<Integer, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Rational& q = v_.coeffs()[i];
    if (q == 0) {
      out[i] = 0;
      continue;
    }
    Integer den = q.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
      throw PrecisionError("element is not p-integral");
    out[i] = mod_nonneg(q.get_num() * inverse_mod(den, m), m);
  }
  return out;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  v_ += o.v_;
  prec_ = std::min(prec_, o.prec_);
  normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  v_ -= o.v_;
  prec_ = std::min(prec_, o.prec_);
  normalize();
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  const int va = valuation(), vb = o.valuation();
  prec_ = std::min(prec_ + vb, o.prec_ + va);
  v_ *= o.v_;
  normalize();
  return *this;
}

RingElement& RingElement::operator/=(const RingElement& o) {
  if (o.is_zero()) throw PrecisionError("division by an element that is 0 to its precision");
  const int va = valuation(), vb = o.valuation();
  prec_ = std::min(prec_ - vb, o.prec_ - 2 * vb + va);
  v_ *= o.v_.inverse();
  normalize();
  return *this;
}

RingElement& RingElement::operator*=(const Rational& q) {
  if (q == 0) {
    v_ = FieldElement(0);
    return *this;
  }
  prec_ += vp(q, p_);
  v_ *= FieldElement(q);
  normalize();
  return *this;
}

RingElement RingElement::operator-() const { return RingElement(-v_, p_, prec_); }

bool RingElement::congruent(const RingElement& o) const {
  RingElement d = *this - o;
  return d.is_zero();
}

std::string RingElement::to_string() const {
  return coord_string(v_.coeffs()) + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

// ----- series -----

RingElement TruncSeries::evaluate(const RingElement& z) const {
  if (c_.empty()) return RingElement::zero(z.prime(), z.precision());
  RingElement acc = c_.back();
  for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * z + c_[i];
  // O(z^size) tail; coefficients of index k may carry a denominator up to k
  RingElement zn = RingElement(FieldElement(1), z.prime(), z.precision() + 64);
  for (std::size_t i = 0; i < c_.size(); ++i) zn *= z;
  int log_size = 0;
  for (std::size_t q = static_cast<std::size_t>(z.prime()); q <= c_.size(); q *= static_cast<std::size_t>(z.prime()))
    ++log_size;
  const int tail = zn.valuation() - log_size;
  if (tail < acc.precision()) acc = RingElement(acc.representative(), acc.prime(), tail);
  return acc;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(a[i] + b[i]);
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<std::optional<RingElement>> acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) {
      RingElement t = a[i] * b[j];
      if (acc[i + j]) {
        *acc[i + j] += t;
      } else {
        acc[i + j] = t;
      }
    }
  std::vector<RingElement> out;
  for (auto& e : acc) out.push_back(*e);
  return out;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  if (inner.size() == 0 || !inner[0].is_zero())
    throw DomainError("compose: inner series must have zero constant term");
  const std::size_t n = std::min(size(), inner.size());
  const RingElement& ref = inner[0];
  std::vector<RingElement> one(n, RingElement::zero(ref.prime(), ref.precision()));
  one[0] = RingElement(FieldElement(1), ref.prime(), ref.precision());
  TruncSeries power(one);
  std::vector<RingElement> zeros(n, RingElement::zero(ref.prime(), ref.precision()));
  TruncSeries acc(zeros);
  std::vector<RingElement> trimmed(inner.coeffs().begin(), inner.coeffs().begin() + static_cast<long>(n));
  const TruncSeries in(trimmed);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RingElement> term;
    for (std::size_t j = 0; j < n; ++j) term.push_back(power[j] * c_[i]);
    acc = acc + TruncSeries(term);
    power = power * in;
  }
  return acc;
}

TruncSeries formal_log(const CurveCoefficients& g, int prec) {
  if (prec < 1 || prec > 9) throw DomainError("formal_log: prec must be in [1, 9]");
  const long p = g.g1.prime();
  const int N = std::min({g.g1.precision(), g.g2.precision(), g.g3.precision()});
  const RingElement zero = RingElement::zero(p, N), one(FieldElement(1), p, N);
  const auto& g1 = g.g1;
  const auto& g2 = g.g2;
  const auto& g3 = g.g3;
  std::vector<RingElement> c{zero,
                             one,
                             zero,
                             g2 * make_rational(1, 3),
                             zero,
                             (g2 * g2 + g1 * g3 * Rational(2)) * make_rational(1, 5),
                             zero,
                             (g2 * g2 * g2 + g1 * g2 * g3 * Rational(6)) * make_rational(1, 7),
                             zero};
  c.resize(static_cast<std::size_t>(prec), zero);
  return c;
}

TruncSeries formal_exp(const CurveCoefficients& g, int prec) {
  if (prec < 1 || prec > 9) throw DomainError("formal_exp: prec must be in [1, 9]");
  const long p = g.g1.prime();
  const int N = std::min({g.g1.precision(), g.g2.precision(), g.g3.precision()});
  const RingElement zero = RingElement::zero(p, N), one(FieldElement(1), p, N);
  const auto& g1 = g.g1;
  const auto& g2 = g.g2;
  const auto& g3 = g.g3;
  std::vector<RingElement> c{
      zero,
      one,
      zero,
      -g2 * make_rational(1, 3),
      zero,
      (g2 * g2 * Rational(2) - g1 * g3 * Rational(6)) * make_rational(1, 15),
      zero,
      (g2 * g2 * g2 * Rational(-17) + g1 * g2 * g3 * Rational(66)) * make_rational(1, 315),
      zero};
  c.resize(static_cast<std::size_t>(prec), zero);
  return c;
}

TruncSeries inverse_x_series(const CurveCoefficients& g) {
  const long p = g.g1.prime();
  const int N = std::min({g.g1.precision(), g.g2.precision(), g.g3.precision()});
  const RingElement zero = RingElement::zero(p, N);
  const auto& g1 = g.g1;
  const auto& g2 = g.g2;
  const auto& g3 = g.g3;
  return std::vector<RingElement>{zero,
                                  zero,
                                  g3,
                                  zero,
                                  g2 * g3,
                                  zero,
                                  g1 * g3 * g3 + g3 * g2 * g2,
                                  zero,
                                  g2 * g2 * g2 * g3 + g1 * g3 * g3 * g2 * Rational(3),
                                  zero};
}

// ----- polynomials in n -----

NPoly npoly_add(const NPoly& a, const NPoly& b) {
  NPoly out = a.size() >= b.size() ? a : b;
  const NPoly& other = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < other.size(); ++i) out[i] += other[i];
  return out;
}

NPoly npoly_mul(const NPoly& a, const NPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = std::min(a.size() + b.size() - 1, kMaxNDegree + 1);
  std::vector<std::optional<RingElement>> acc(n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      RingElement t = a[i] * b[j];
      if (acc[i + j]) {
        *acc[i + j] += t;
      } else {
        acc[i + j] = t;
      }
    }
  NPoly out;
  for (auto& e : acc) out.push_back(*e);
  return out;
}

NPoly npoly_substitute(const TruncSeries& s, const NPoly& z) {
  if (z.empty()) throw DomainError("npoly_substitute: empty polynomial");
  if (!z[0].is_zero()) throw DomainError("npoly_substitute: z must have zero constant term");
  NPoly out{s[0]};
  NPoly power{RingElement(FieldElement(1), z[0].prime(), z[0].precision() + 64)};
  for (std::size_t i = 1; i < s.size(); ++i) {
    power = npoly_mul(power, z);
    NPoly term;
    for (const auto& c : power) term.push_back(c * s[i]);
    out = npoly_add(out, term);
  }
  return out;
}

std::array<std::vector<Integer>, 3> split_mod(const NPoly& f, int k) {
  std::array<std::vector<Integer>, 3> out;
  for (const auto& c : f) {
    const auto r = c.reduce(k);
    for (int i = 0; i < 3; ++i) out[i].push_back(r[i]);
  }
  return out;
}

RingElement z_of_point(const curves::GroupPoint<FieldElement>& P, long p, int prec) {
  if (!P) return RingElement::zero(p, prec);
  if (P->y.is_zero()) throw DomainError("point of order 2 is not in the kernel of reduction");
  const FieldElement z = -(P->x / P->y);
  RingElement r(z, p, prec);
  int v = prec;
  for (const auto& q : z.coeffs())
    if (q != 0) v = std::min(v, vp(q, p));
  if (v < 1) throw DomainError("point does not reduce to the identity (v(z) < 1)");
  return r;
}

MultipleExpansion x_inverse_of_multiple(const RingElement& zQ, const CurveCoefficients& g, int k) {
  MultipleExpansion out;
  out.log_z = formal_log(g).evaluate(zQ);
  const TruncSeries ex = formal_exp(g);
  RingElement Lj(FieldElement(1), zQ.prime(), zQ.precision() + 64);
  for (std::size_t j = 0; j < ex.size(); ++j) {
    out.z_n.push_back(ex[j] * Lj);
    Lj *= out.log_z;
  }
  out.inv_x_n = npoly_substitute(inverse_x_series(g), out.z_n);
  // z_n is only known through n^{size-1}
  out.inv_x_n.resize(std::min(out.inv_x_n.size(), out.z_n.size()), out.inv_x_n.front());
  out.z_mod = split_mod(out.z_n, k);
  out.phi = split_mod(out.inv_x_n, k);
  return out;
}

NPoly addition_expansion(const RingElement& x0, const RingElement& y0, const CurveCoefficients& g,
                         const NPoly& z_n) {
  const auto& g1 = g.g1;
  const auto& g2 = g.g2;
  const auto& g3 = g.g3;
  const Rational two(2), three(3), four(4), six(6), eight(8);
  std::vector<RingElement> c{
      x0,
      y0 * two,
      g1 + g2 * x0 * two + g3 * x0 * x0 * three,
      g2 * y0 * two + g3 * x0 * y0 * four,
      g1 * g2 + g1 * g3 * x0 * two + g2 * g2 * x0 * two + g2 * g3 * x0 * x0 * six +
          g3 * g3 * x0 * x0 * x0 * four + g3 * y0 * y0,
      g1 * g3 * y0 * two + g2 * g2 * y0 * two + g2 * g3 * x0 * y0 * eight + g3 * g3 * x0 * x0 * y0 * six};
  return npoly_substitute(TruncSeries(c), z_n);
}

StrassmannResult strassmann_zero_bound(const std::vector<Integer>& coeffs, long p, int k,
                                       int known_root_multiplicity) {
  StrassmannResult r;
  const Integer m = ipow(p, k);
  int best = k, arg = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Integer c = mod_nonneg(coeffs[i], m);
    const int v = c == 0 ? k : remove_p(c, p);
    if (v <= best) {
      best = v;
      arg = static_cast<int>(i);
    }
  }
  if (best >= k) return r;
  r.bound = arg;
  r.only_known_roots = arg == known_root_multiplicity;
  return r;
}

// ----- the reference curve -----

ExactCoefficients reference_curve() {
  const FieldElement a = FieldElement::alpha();
  const FieldElement one(1);
  return {(one - a) * (a * a + a), one - a * a, one - a};
}

CurveCoefficients to_ring(const ExactCoefficients& g, long p, int prec) {
  return {RingElement(g.g1, p, prec), RingElement(g.g2, p, prec), RingElement(g.g3, p, prec)};
}

std::array<FieldElement, 5> monic_model(const ExactCoefficients& g) {
  return {FieldElement(0), g.g2, FieldElement(0), g.g1 * g.g3, FieldElement(0)};
}

curves::GroupPoint<FieldElement> to_monic(const ExactCoefficients& g, const curves::GroupPoint<FieldElement>& P) {
  if (!P) return P;
  return curves::AffinePoint<FieldElement>{g.g3 * P->x, g.g3 * P->y};
}

curves::GroupPoint<FieldElement> from_monic(const ExactCoefficients& g,
                                            const curves::GroupPoint<FieldElement>& P) {
  if (!P) return P;
  const FieldElement inv = g.g3.inverse();
  return curves::AffinePoint<FieldElement>{P->x * inv, P->y * inv};
}

}  // namespace arboreal::padic
