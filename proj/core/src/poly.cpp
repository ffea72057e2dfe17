#include "arboreal/poly.hpp"

#include <algorithm>
#include <sstream>

#include "arboreal/arith.hpp"

namespace arboreal {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  r *= Rational(1) / leading();
  return r;
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integral(c); });
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational lb = b.leading();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lb;
    if (q == 0) continue;
    int shift = i - b.degree();
    quo[static_cast<std::size_t>(shift)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= q * bc[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int da = a.degree(), db = b.degree();
  if (da == 0) return rational_pow(a.leading(), static_cast<unsigned>(db));
  if (db == 0) return rational_pow(b.leading(), static_cast<unsigned>(da));
  // Res(A,B) = (-1)^{da db} lc(B)^{da-dr} Res(B, A mod B)
  Poly r = divmod(a, b).second;
  if (r.is_zero()) return 0;
  int dr = r.degree();
  Rational factor = rational_pow(b.leading(), static_cast<unsigned>(da - dr));
  if ((da * db) % 2 != 0) factor = -factor;
  return factor * resultant(b, r);
}

Rational discriminant(const Poly& p) {
  if (p.degree() < 1) throw DomainError("discriminant of a constant polynomial");
  int d = p.degree();
  Rational r = resultant(p, p.derivative()) / p.leading();
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

bool is_separable(const Poly& p) { return gcd(p, p.derivative()).degree() == 0; }

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = divmod(f, a).first;
  Poly c = divmod(fp, a).first;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;

  // Integer primitive multiple, with the root t=0 split off.
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> a;
  for (const auto& c : p.coeffs()) a.push_back(Integer(c * den));
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  a.erase(a.begin(), a.begin() + static_cast<long>(low));
  if (a.size() == 1) return roots;

  Poly q;
  {
    std::vector<Rational> qc(a.begin(), a.end());
    q = Poly(std::move(qc));
  }
  // Rational root theorem: p | a0, q | an.
  auto fa0 = arith::factor(a.front());
  auto fan = arith::factor(a.back());
  if (!fa0.complete || !fan.complete)
    throw DomainError("rational_roots: coefficient factorization incomplete");
  auto num_divs = arith::divisors(fa0);
  auto den_divs = arith::divisors(fan);

  // Cauchy bound prunes candidates.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    Rational r = Rational(abs(a[i])) / Rational(abs(a.back()));
    if (r > bound) bound = r;
  }
  bound += 1;

  for (const auto& dq : den_divs) {
    for (const auto& dp : num_divs) {
      Rational cand = make_rational(dp, dq);
      if (cand > bound) break;
      if (gcd(dp, dq) != 1) continue;
      for (int s : {1, -1}) {
        Rational t = s * cand;
        if (q(t) == 0) roots.push_back(t);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace arboreal
