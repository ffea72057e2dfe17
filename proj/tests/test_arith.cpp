#include <gtest/gtest.h>

#include <random>

#include "arboreal/arith.hpp"

using namespace arboreal;
using namespace arboreal::arith;

namespace {

// Reference: trial division up to sqrt(n).
bool slow_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Squarefree part by trial division, sign included.
long slow_squarefree(long n) {
  long sign = n < 0 ? -1 : 1, m = n < 0 ? -n : n, out = 1;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;
}

}  // namespace

TEST(Factor, SmallExamples) {
  auto f = factor(147);
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(f.cofactor, 1);
  EXPECT_EQ(f.factored_part, (std::map<Integer, int>{{3, 1}, {7, 2}}));

  f = factor(2809);
  EXPECT_EQ(f.factored_part, (std::map<Integer, int>{{53, 2}}));
  EXPECT_EQ(isqrt(2809), 53);

  f = factor(-2809);
  EXPECT_EQ(f.factored_part, (std::map<Integer, int>{{53, 2}}));

  f = factor(1);
  EXPECT_TRUE(f.factored_part.empty());
  EXPECT_EQ(f.cofactor, 1);
  EXPECT_TRUE(f.complete);
}

TEST(Factor, SemiprimeNeedsRho) {
  const Integer p("1000000007"), q("998244353");
  const auto f = factor(p * q);
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(f.factored_part, (std::map<Integer, int>{{q, 1}, {p, 1}}));
}

TEST(Factor, ExhaustedBudgetKeepsCofactor) {
  // Two 25-digit primes; rho with a tiny budget cannot split the product.
  const Integer p("1000000000000000000000007"), q("1000000000000000000000049");
  ASSERT_TRUE(is_prime(p));
  ASSERT_TRUE(is_prime(q));
  FactorBudget b;
  b.trial_bound = 1000;
  b.rho_iterations = 100;
  b.rho_attempts = 1;
  const auto f = factor(2 * p * q, b);
  EXPECT_FALSE(f.complete);
  EXPECT_EQ(f.product(), 2 * p * q);
  EXPECT_EQ(f.factored_part.at(2), 1);
  for (Integer d = 2; d < 1000; ++d) EXPECT_NE(f.cofactor % d, 0) << d;
}

TEST(Factor, ProductInvariantRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<unsigned long> dist(1, 1ul << 62);
  for (int i = 0; i < 200; ++i) {
    Integer n(std::to_string(dist(rng)));
    n *= Integer(std::to_string(dist(rng) % 100000 + 1));
    const auto f = factor(n);
    EXPECT_EQ(f.product(), n);
    for (const auto& [p, e] : f.factored_part) {
      EXPECT_TRUE(is_prime(p)) << p;
      EXPECT_GT(e, 0);
    }
    if (f.complete) EXPECT_EQ(f.cofactor, 1);
  }
}

TEST(Primality, AgreesWithTrialDivision) {
  for (long n = -5; n < 20000; ++n) ASSERT_EQ(is_prime(n), slow_prime(n)) << n;
}

TEST(Primality, Carmichael) {
  for (long n : {561L, 1105L, 1729L, 2465L, 2821L, 6601L, 8911L}) EXPECT_FALSE(is_prime(n)) << n;
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));  // strong pseudoprime to bases 2..23
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
}

TEST(SquareClass, Examples) {
  auto c = square_class(Rational(147));
  EXPECT_EQ(c.sign, 1);
  EXPECT_EQ(c.odd_support, std::vector<Integer>{3});
  EXPECT_EQ(c.two_exponent, 0);
  EXPECT_TRUE(c.is_exact());

  c = square_class(Rational(-3));
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.odd_support, std::vector<Integer>{3});

  EXPECT_TRUE(square_class(make_rational(25, 9)).is_trivial());
  EXPECT_EQ(square_class(make_rational(-36, 1)).representative(), -1);
  EXPECT_EQ(square_class(Rational(12)).representative(), 3);
  EXPECT_EQ(square_class(make_rational(8, 45)).representative(), 10);
}

TEST(SquareClass, RepresentativeMatchesTrialDivision) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-200000, 200000), den(1, 3000);
  for (int i = 0; i < 500; ++i) {
    long a = num(rng), b = den(rng);
    if (a == 0) continue;
    // class(a/b) = class(a*b)
    EXPECT_EQ(square_class(make_rational(a, b)).representative(), slow_squarefree(a * b)) << a << "/" << b;
  }
}

TEST(SquareClass, MultiplyIsClassOfProduct) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-5000, 5000);
  for (int i = 0; i < 200; ++i) {
    long a = num(rng), b = num(rng);
    if (a == 0 || b == 0) continue;
    EXPECT_EQ(multiply(square_class(Rational(a)), square_class(Rational(b))), square_class(Rational(a * b)));
  }
}

TEST(RationalSquare, Examples) {
  EXPECT_TRUE(is_rational_square(1764));
  EXPECT_FALSE(is_rational_square(147));
  EXPECT_TRUE(is_rational_square(make_rational(49, 4)));
  EXPECT_FALSE(is_rational_square(-4));
  EXPECT_TRUE(is_rational_square(0));
}

TEST(SpanSolve, Examples) {
  auto s = span_solve(square_class(Rational(147)), {square_class(Rational(-3)), square_class(Rational(12))});
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, std::vector<std::size_t>{1});
  EXPECT_FALSE(span_solve(square_class(Rational(3)), {}));
  s = span_solve(square_class(Rational(1)), {square_class(Rational(-3))});
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->empty());
}

TEST(SpanSolve, RejectsInexactClasses) {
  SquareClass bad = square_class(Rational(5));
  bad.unknown_cofactor = Integer("1000000000000000000000007");
  EXPECT_THROW(span_solve(square_class(Rational(5)), {bad}), InexactClassError);
}

// Brute force over all 2^k subsets against the F2 elimination.
TEST(SpanSolve, AgreesWithSubsetEnumeration) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-300, 300);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 5;
    std::vector<long> gens;
    while (static_cast<int>(gens.size()) < k) {
      long g = num(rng);
      if (g != 0) gens.push_back(g);
    }
    long target = 0;
    while (target == 0) target = num(rng);
    std::vector<SquareClass> classes;
    for (long g : gens) classes.push_back(square_class(Rational(g)));

    bool brute = false;
    for (unsigned mask = 0; mask < (1u << k) && !brute; ++mask) {
      Rational prod = target;
      for (int j = 0; j < k; ++j)
        if (mask >> j & 1) prod *= gens[static_cast<std::size_t>(j)];
      brute = is_rational_square(prod);
    }
    const auto s = span_solve(square_class(Rational(target)), classes);
    ASSERT_EQ(s.has_value(), brute) << "target " << target;
    if (s) {
      Rational prod = target;
      for (auto j : *s) prod *= gens[j];
      EXPECT_TRUE(is_rational_square(prod));
    }
  }
}

TEST(FactorCache, RoundTripAndReuse) {
  FactorCache cache;
  const Integer n("600851475143");
  const auto f = cache.factor(n);
  EXPECT_EQ(f.product(), n);
  EXPECT_EQ(cache.size(), 1u);
  ASSERT_TRUE(cache.lookup(n));

  FactorCache other;
  other.deserialize(cache.serialize());
  EXPECT_EQ(other.size(), 1u);
  EXPECT_EQ(*other.lookup(n), f);
  EXPECT_EQ(other.serialize(), cache.serialize());
}

TEST(FactorCache, SaveLoad) {
  const auto path = std::filesystem::temp_directory_path() / "arboreal_cache_test.txt";
  FactorCache cache;
  for (long n : {147L, 2809L, 1764L, 999999L}) cache.factor(n);
  cache.save(path);
  FactorCache loaded;
  loaded.load(path);
  EXPECT_EQ(loaded.serialize(), cache.serialize());
  std::filesystem::remove(path);
}

TEST(Divisors, OfCompleteFactorization) {
  EXPECT_EQ(divisors(factor(12)), (std::vector<Integer>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(factor(1)), std::vector<Integer>{1});
}
