#pragma once

// Bounded-effort factorization, primality, square classes of rationals and
// F2 linear algebra on them.
//
// factor() never fails: when the budget runs out the unfactored part is
// returned as `cofactor` and `complete` is false. Square classes built from
// incomplete factorizations carry that cofactor in `unknown_cofactor`, and
// span_solve() refuses them.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "arboreal/numeric.hpp"

namespace arboreal::arith {

struct FactorBudget {
  // Trial division by every prime below this bound is guaranteed for any
  // cofactor left unfactored.
  std::uint64_t trial_bound = 1'000'000;
  // Cap on Pollard-Brent iterations per attempt.
  std::uint64_t rho_iterations = 2'000'000;
  // Number of rho restarts (different deterministic seeds) per composite.
  int rho_attempts = 8;
};

struct FactorResult {
  std::map<Integer, int> factored_part;  // prime -> exponent
  Integer cofactor = 1;
  bool complete = true;

  Integer product() const;  // prod p^e * cofactor
  friend bool operator==(const FactorResult&, const FactorResult&) = default;
};

// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases), fixed
// witness set above.
bool is_prime(const Integer& n);

// Factors |n|. n must be nonzero.
FactorResult factor(const Integer& n, const FactorBudget& budget = {});

// All positive divisors of a complete factorization, ascending.
std::vector<Integer> divisors(const FactorResult& f);

struct SquareClass {
  int sign = 1;
  std::vector<Integer> odd_support;  // sorted distinct odd primes
  int two_exponent = 0;              // 0 or 1
  Integer unknown_cofactor = 1;      // 1 when the class is exact

  bool is_exact() const { return unknown_cofactor == 1; }
  bool is_trivial() const {
    return sign == 1 && odd_support.empty() && two_exponent == 0 && is_exact();
  }
  // Squarefree integer representative (including any unknown cofactor).
  Integer representative() const;
  std::string to_string() const;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

SquareClass square_class(const Rational& q, const FactorBudget& budget = {});
SquareClass square_class(const Integer& n, const FactorBudget& budget = {});

// Class of the product of two exact classes.
SquareClass multiply(const SquareClass& a, const SquareClass& b);

// True iff q = r^2 for rational r; zero counts as a square.
bool is_rational_square(const Rational& q);

// Coordinates over F2 indexed by (-1, 2, p1, p2, ...) for a fixed support.
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::size_t bits);
  std::size_t size() const { return bits_; }
  bool get(std::size_t i) const;
  void flip(std::size_t i);
  ClassVector& operator^=(const ClassVector& other);
  bool is_zero() const;
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Support basis shared by a family of exact classes.
class ClassBasis {
 public:
  explicit ClassBasis(const std::vector<SquareClass>& classes);
  std::size_t dimension() const { return 2 + primes_.size(); }
  ClassVector vectorize(const SquareClass& c) const;

 private:
  std::vector<Integer> primes_;
};

// Subset S (indices into `generators`, ascending) with prod S == target mod
// squares, or nullopt. Gaussian elimination over F2. Throws
// InexactClassError if any class is inexact.
std::optional<std::vector<std::size_t>> span_solve(
    const SquareClass& target, const std::vector<SquareClass>& generators);

// Thread-safe memo of factorizations. Readers never block each other;
// writers merge under an exclusive lock.
class FactorCache {
 public:
  FactorCache() = default;
  explicit FactorCache(FactorBudget budget) : budget_(budget) {}

  FactorResult factor(const Integer& n) const;
  std::optional<FactorResult> lookup(const Integer& n) const;
  void insert(const Integer& n, const FactorResult& result) const;
  std::size_t size() const;
  const FactorBudget& budget() const { return budget_; }

  // Line format: `<n> <p1>^<e1> <p2>^<e2> ... [cofactor=<m>]`, ascending n.
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);
  std::string serialize() const;
  void deserialize(const std::string& text);

 private:
  FactorBudget budget_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Integer, FactorResult> entries_;
};

SquareClass square_class(const Rational& q, const FactorCache& cache);

}  // namespace arboreal::arith
