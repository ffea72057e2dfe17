#include <algorithm>
#include <sstream>

#include "arboreal/arith.hpp"

namespace arboreal::arith {

namespace {

// Parity of exponents from one factorization, folded into `odd`.
void fold_parity(const FactorResult& f, std::map<Integer, int>& odd) {
  for (const auto& [p, e] : f.factored_part) {
    if (e % 2) odd[p] ^= 1;
  }
}

SquareClass assemble(int sign, const FactorResult& num, const FactorResult& den) {
  std::map<Integer, int> odd;
  fold_parity(num, odd);
  fold_parity(den, odd);
  SquareClass c;
  c.sign = sign;
  for (const auto& [p, bit] : odd) {
    if (!bit) continue;
    if (p == 2) {
      c.two_exponent = 1;
    } else {
      c.odd_support.push_back(p);
    }
  }
  c.unknown_cofactor = num.cofactor * den.cofactor;
  return c;
}

}  // namespace

Integer SquareClass::representative() const {
  Integer r = sign;
  if (two_exponent) r *= 2;
  for (const auto& p : odd_support) r *= p;
  return r * unknown_cofactor;
}

std::string SquareClass::to_string() const {
  std::ostringstream os;
  os << (sign < 0 ? '-' : '+') << " {";
  for (std::size_t i = 0; i < odd_support.size(); ++i) {
    if (i) os << ',';
    os << odd_support[i].get_str();
  }
  os << "} 2^" << two_exponent;
  if (!is_exact()) os << " cofactor=" << unknown_cofactor.get_str();
  return os.str();
}

SquareClass square_class(const Rational& q, const FactorBudget& budget) {
  if (q == 0) throw DomainError("square class of zero");
  return assemble(q < 0 ? -1 : 1, factor(q.get_num(), budget), factor(q.get_den(), budget));
}

SquareClass square_class(const Integer& n, const FactorBudget& budget) {
  return square_class(Rational(n), budget);
}

SquareClass square_class(const Rational& q, const FactorCache& cache) {
  if (q == 0) throw DomainError("square class of zero");
  return assemble(q < 0 ? -1 : 1, cache.factor(q.get_num()), cache.factor(q.get_den()));
}

SquareClass multiply(const SquareClass& a, const SquareClass& b) {
  if (!a.is_exact() || !b.is_exact()) throw InexactClassError("product of inexact square classes");
  SquareClass c;
  c.sign = a.sign * b.sign;
  c.two_exponent = a.two_exponent ^ b.two_exponent;
  std::set_symmetric_difference(a.odd_support.begin(), a.odd_support.end(), b.odd_support.begin(),
                                b.odd_support.end(), std::back_inserter(c.odd_support));
  return c;
}

bool is_rational_square(const Rational& q) {
  if (q == 0) return true;
  return q > 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

ClassVector::ClassVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

bool ClassVector::get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

void ClassVector::flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

ClassVector& ClassVector::operator^=(const ClassVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool ClassVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

ClassBasis::ClassBasis(const std::vector<SquareClass>& classes) {
  for (const auto& c : classes) {
    if (!c.is_exact()) throw InexactClassError("inexact class: " + c.to_string());
    primes_.insert(primes_.end(), c.odd_support.begin(), c.odd_support.end());
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

ClassVector ClassBasis::vectorize(const SquareClass& c) const {
  if (!c.is_exact()) throw InexactClassError("inexact class: " + c.to_string());
  ClassVector v(dimension());
  if (c.sign < 0) v.flip(0);
  if (c.two_exponent) v.flip(1);
  for (const auto& p : c.odd_support) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) throw DomainError("prime outside class basis");
    v.flip(2 + static_cast<std::size_t>(it - primes_.begin()));
  }
  return v;
}

std::optional<std::vector<std::size_t>> span_solve(const SquareClass& target,
                                                   const std::vector<SquareClass>& generators) {
  std::vector<SquareClass> all = generators;
  all.push_back(target);
  ClassBasis basis(all);

  struct Row {
    ClassVector v;
    ClassVector mask;  // generators combined into v
    std::size_t pivot;
  };
  std::vector<Row> rows;
  const std::size_t k = generators.size();

  auto reduce = [&](ClassVector& v, ClassVector& mask) {
    for (const auto& r : rows) {
      if (v.get(r.pivot)) {
        v ^= r.v;
        mask ^= r.mask;
      }
    }
  };

  for (std::size_t i = 0; i < k; ++i) {
    ClassVector v = basis.vectorize(generators[i]);
    ClassVector mask(k);
    mask.flip(i);
    reduce(v, mask);
    if (v.is_zero()) continue;
    std::size_t pivot = 0;
    while (!v.get(pivot)) ++pivot;
    rows.push_back({std::move(v), std::move(mask), pivot});
  }

  ClassVector t = basis.vectorize(target);
  ClassVector mask(k);
  reduce(t, mask);
  if (!t.is_zero()) return std::nullopt;
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < k; ++i) {
    if (mask.get(i)) subset.push_back(i);
  }
  return subset;
}

}  // namespace arboreal::arith
