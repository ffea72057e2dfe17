#include <gtest/gtest.h>

#include <random>

#include "arboreal/dynamics.hpp"

using namespace arboreal;
using dynamics::QuadMap;

namespace {

// Sylvester matrix determinant by fraction-free Bareiss elimination.
Rational sylvester_resultant(const Poly& a, const Poly& b) {
  const int m = a.degree(), n = b.degree();
  const int N = m + n;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.coeff(n - j);
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k] == 0) {
      int r = k + 1;
      while (r < N && M[r][k] == 0) ++r;
      if (r == N) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

Rational oracle_discriminant(const Poly& p) {
  const int d = p.degree();
  const int s = (d * (d - 1) / 2) % 2 ? -1 : 1;
  return s * sylvester_resultant(p, p.derivative()) / p.leading();
}

Poly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Rational> v;
  for (int i = 0; i < deg; ++i) v.push_back(c(rng));
  long lead = 0;
  while (lead == 0) lead = c(rng);
  v.push_back(lead);
  return Poly(v);
}

}  // namespace

TEST(CriticalOrbit, Examples) {
  EXPECT_EQ(dynamics::critical_orbit({0, 3}, 3), (std::vector<Rational>{3, 12, 147}));
  EXPECT_EQ(dynamics::critical_orbit({0, -2}, 3), (std::vector<Rational>{-2, 2, 2}));
  EXPECT_EQ(dynamics::critical_orbit({1, 0}, 3), (std::vector<Rational>{0, 1, 0}));
  EXPECT_EQ(dynamics::critical_orbit({1, 3}, 3), (std::vector<Rational>{3, 7, 39}));
}

TEST(IterateValuePoly, Examples) {
  EXPECT_EQ(dynamics::iterate_value_poly(0, 3), (Poly{0, 1, 1, 2, 1}));
  EXPECT_EQ(dynamics::iterate_value_poly(0, 1), (Poly{0, 1}));
  EXPECT_EQ(dynamics::iterate_value_poly(1, 3)(3), 39);
}

TEST(IterateValuePoly, MatchesPointwiseOrbit) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  for (int i = 0; i < 50; ++i) {
    const Rational gamma = make_rational(num(rng), den(rng));
    const Rational c = make_rational(num(rng), den(rng));
    for (int n = 1; n <= 5; ++n) {
      const QuadMap m{gamma, c};
      EXPECT_EQ(dynamics::iterate_value_poly(gamma, n)(c), m.iterate(gamma, n));
      EXPECT_EQ(dynamics::iterate_value_poly(gamma, n).degree(), 1 << (n - 1));
    }
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(Poly{3, 0, 1}), -12);
  EXPECT_EQ(discriminant(Poly{12, 0, 6, 0, 1}), 27648);
  EXPECT_EQ(discriminant(Poly{-1, 0, 1}), 4);
}

TEST(Discriminant, AgreesWithSylvesterDeterminant) {
  std::mt19937 rng(31);
  for (int i = 0; i < 120; ++i) {
    const Poly p = random_poly(rng, 2 + i % 7);
    EXPECT_EQ(discriminant(p), oracle_discriminant(p)) << p.to_string();
  }
}

TEST(Resultant, AgreesWithSylvesterDeterminant) {
  std::mt19937 rng(37);
  for (int i = 0; i < 120; ++i) {
    const Poly a = random_poly(rng, 1 + i % 5), b = random_poly(rng, 1 + (i / 5) % 5);
    EXPECT_EQ(resultant(a, b), sylvester_resultant(a, b)) << a.to_string() << " , " << b.to_string();
  }
}

TEST(DiscRecursion, Examples) {
  EXPECT_TRUE(dynamics::check_disc_recursion({0, 3}, 2));
  EXPECT_EQ(discriminant(dynamics::iterate_poly({0, 3}, 2)), Rational(12 * 12 * 16 * 12));
  EXPECT_TRUE(dynamics::check_disc_recursion({0, -1}, 2));
  EXPECT_TRUE(dynamics::check_disc_recursion({0, 5}, 3));
  EXPECT_THROW(dynamics::check_disc_recursion({0, 5}, 1), DomainError);
}

TEST(DiscRecursion, RandomMaps) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int i = 0; i < 40; ++i) {
    const QuadMap m{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    for (int n = 2; n <= 4; ++n) {
      if (!is_separable(dynamics::iterate_poly(m, n))) continue;
      EXPECT_TRUE(dynamics::check_disc_recursion(m, n)) << to_string(m.gamma) << " " << to_string(m.c) << " " << n;
    }
  }
}

TEST(Poly, SquarefreeDecompositionReassembles) {
  const Poly f{1, 1}, g{-2, 0, 1}, h{3, 1, 1};
  const Poly p = 5 * f * pow(g, 2) * pow(h, 3);
  Poly back = Poly::constant(p.leading());
  for (const auto& [q, e] : squarefree_decomposition(p)) back *= pow(q, static_cast<unsigned>(e));
  EXPECT_EQ(back, p);
  EXPECT_EQ(rational_roots(Poly{6, -5, 1}), (std::vector<Rational>{2, 3}));
  EXPECT_EQ(gcd(f * g, f * h), f);
}
