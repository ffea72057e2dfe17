#include <gtest/gtest.h>

#include "arboreal/galois.hpp"

using namespace arboreal;
using namespace arboreal::galois;
using dynamics::QuadMap;

namespace {

// Level k is non-maximal iff f^k(gamma) times some product of
// {-c, f^2(gamma), ..., f^{k-1}(gamma)} is a rational square. Zero values are
// degenerate. Only exact square roots, no factoring.
enum class Oracle { Maximal, NonMaximal, Degenerate };

Oracle oracle_level(const QuadMap& m, int k) {
  const auto orbit = dynamics::critical_orbit(m, k);
  for (const auto& v : orbit)
    if (v == 0) return Oracle::Degenerate;
  if (k == 1) return rational_sqrt(-m.c) ? Oracle::NonMaximal : Oracle::Maximal;
  std::vector<Rational> gens{-m.c};
  for (int j = 2; j < k; ++j) gens.push_back(orbit[static_cast<std::size_t>(j - 1)]);
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    Rational prod = orbit.back();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (mask >> j & 1) prod *= gens[j];
    if (rational_sqrt(prod)) return Oracle::NonMaximal;
  }
  return Oracle::Maximal;
}

bool oracle_small(const QuadMap& m, int n) {
  for (int k = 1; k < n; ++k)
    if (oracle_level(m, k) != Oracle::Maximal) return false;
  return oracle_level(m, n) == Oracle::NonMaximal;
}

}  // namespace

TEST(GSet, Examples) {
  EXPECT_EQ(g_set(0, 1), std::vector<Poly>{Poly({0, -1})});
  const Poly t = Poly::variable(), f2{0, 1, 1};
  EXPECT_EQ(g_set(0, 2), (std::vector<Poly>{-t, -t * f2, f2}));
  EXPECT_EQ(g_set(1, 3).size(), 7u);
  EXPECT_EQ(g_set(make_rational(2, 5), 3).size(), 7u);
}

TEST(SubfieldClasses, Examples) {
  auto s = subfield_classes({0, 3}, 2);
  ASSERT_EQ(s.classes.size(), 3u);
  EXPECT_EQ(s.classes[0].representative(), -3);
  EXPECT_EQ(s.classes[1].representative(), -1);
  EXPECT_EQ(s.classes[2].representative(), 3);

  s = subfield_classes({0, -2}, 2);
  ASSERT_EQ(s.classes.size(), 3u);
  EXPECT_EQ(s.classes[0].representative(), 2);
  EXPECT_EQ(s.classes[1].representative(), 1);
  EXPECT_EQ(s.classes[2].representative(), 2);

  EXPECT_TRUE(subfield_classes({0, -4}, 2).degenerate);
}

TEST(LevelStatus, Examples) {
  EXPECT_EQ(level_status({0, 3}, 2).status, LevelStatus::Maximal);

  const auto c3 = level_status({0, 3}, 3);
  EXPECT_EQ(c3.status, LevelStatus::NonMaximal);
  EXPECT_EQ(c3.witness, std::vector<std::size_t>{1});
  ASSERT_TRUE(c3.sqrt);
  EXPECT_EQ(*c3.sqrt, 42);
  EXPECT_EQ(12 * 147, 42 * 42);

  EXPECT_EQ(level_status({0, -2}, 2).status, LevelStatus::NonMaximal);
}

TEST(SmallIterate, Examples) {
  EXPECT_EQ(small_iterate({0, 3}, 3).verdict, Verdict::Yes);
  EXPECT_EQ(small_iterate({0, 5}, 3).verdict, Verdict::No);
  const auto r = small_iterate({0, -2}, 3);
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_EQ(r.trail.back().level, 2);
}

TEST(SmallIterate, WitnessSquareRootIsExact) {
  for (long c = -60; c <= 60; ++c) {
    for (int g : {0, 1}) {
      const QuadMap m{g, c};
      const auto cert = level_status(m, 3);
      if (cert.status != LevelStatus::NonMaximal) continue;
      const auto vals = generator_values(m, 3);
      Rational prod = m.iterate(m.gamma, 3);
      for (auto j : cert.witness) prod *= vals[j];
      ASSERT_TRUE(cert.sqrt);
      EXPECT_EQ(*cert.sqrt * *cert.sqrt, prod) << "gamma " << g << " c " << c;
    }
  }
}

TEST(SmallIterate, AgreesWithSubsetOracleIntegers) {
  for (int g : {0, 1})
    for (long c = -50; c <= 50; ++c)
      for (int n = 2; n <= 3; ++n) {
        const QuadMap m{g, c};
        const auto r = small_iterate(m, n);
        ASSERT_NE(r.verdict, Verdict::Unknown);
        EXPECT_EQ(r.verdict == Verdict::Yes, oracle_small(m, n)) << "gamma " << g << " c " << c << " n " << n;
      }
}

TEST(SmallIterate, AgreesWithSubsetOracleRationals) {
  for (int g : {0, 1})
    for (long p = -12; p <= 12; ++p)
      for (long q = 1; q <= 12; ++q) {
        if (gcd(Integer(p), Integer(q)) != 1) continue;
        const QuadMap m{g, make_rational(p, q)};
        const auto r = small_iterate(m, 3);
        EXPECT_EQ(r.verdict == Verdict::Yes, oracle_small(m, 3)) << "gamma " << g << " c " << p << "/" << q;
      }
}

TEST(SmallIterate, KnownMembersFromCurvePoints) {
  for (const Rational& t : {make_rational(-17, 4), make_rational(-2, 3), make_rational(6, 19), Rational(3)})
    EXPECT_EQ(small_iterate({0, t}, 3).verdict, Verdict::Yes) << to_string(t);
}

TEST(Ramification, Examples) {
  EXPECT_EQ(ramification_support_check({0, 3}, 3), Verdict::Yes);
  EXPECT_EQ(ramification_support_check({0, -2}, 2), Verdict::Yes);
  EXPECT_THROW(ramification_support_check({0, 5}, 3), DomainError);
}
