#include "arboreal/bipoly.hpp"

#include <cctype>
#include <sstream>

namespace arboreal {

BiPoly BiPoly::constant(const Rational& c) {
  BiPoly p;
  p.add_term({0, 0}, c);
  return p;
}

BiPoly BiPoly::x() {
  BiPoly p;
  p.add_term({1, 0}, 1);
  return p;
}

BiPoly BiPoly::y() {
  BiPoly p;
  p.add_term({0, 1}, 1);
  return p;
}

BiPoly BiPoly::from_x(const Poly& q) {
  BiPoly p;
  for (int i = 0; i <= q.degree(); ++i) p.add_term({i, 0}, q.coeff(i));
  return p;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

Poly BiPoly::coeff_y(int k) const {
  std::vector<Rational> v;
  for (const auto& [m, c] : terms_) {
    if (m.second != k) continue;
    if (static_cast<int>(v.size()) <= m.first) v.resize(static_cast<std::size_t>(m.first) + 1);
    v[static_cast<std::size_t>(m.first)] = c;
  }
  return Poly(std::move(v));
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    acc += c * rational_pow(x, static_cast<unsigned>(m.first)) * rational_pow(y, static_cast<unsigned>(m.second));
  }
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : rhs.terms_) out.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

std::string BiPoly::to_string(std::string_view xvar, std::string_view yvar) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || (m.first == 0 && m.second == 0)) {
      os << a.get_str();
      need_star = true;
    }
    auto var = [&](std::string_view v, int e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      need_star = true;
    };
    var(xvar, m.first);
    var(yvar, m.second);
  }
  return os.str();
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly r = BiPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ParsedExpression run() {
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return {std::move(p), xvar_};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("parse error at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) +
                      "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        BiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a nonconstant or zero expression");
        acc *= Rational(1) / d.terms().begin()->second;
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 256) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  BiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BiPoly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (c == 'y' || c == 'v') return BiPoly::y();
      if (xvar_ != 0 && xvar_ != c) fail("more than two variables");
      xvar_ = c;
      return BiPoly::x();
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char xvar_ = 0;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace arboreal
