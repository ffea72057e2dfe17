#include <gtest/gtest.h>

#include <random>

#include "arboreal/catalog.hpp"
#include "arboreal/param.hpp"

using namespace arboreal;
using namespace arboreal::param;
using galois::Verdict;

namespace {

std::vector<std::string> labels(const std::vector<Component>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) out.push_back(c.label);
  return out;
}

bool contains_t(const std::vector<EnumeratedT>& v, const Rational& t) {
  return std::any_of(v.begin(), v.end(), [&](const EnumeratedT& e) { return e.t == t; });
}

}  // namespace

TEST(BuildC, Examples) {
  EXPECT_EQ(build_C_n(0, 3).even_form().second, (Poly{0, 1, 1, 2, 1}));
  const Poly t = Poly::variable();
  const Poly f2 = t * t + t;
  EXPECT_EQ(build_C_n(0, 4).even_form().second, (f2 * f2 + t) * (f2 * f2 + t) + t);
  EXPECT_EQ(build_C_n(0, 4).even_form().second.degree(), 8);  // genus 3
  EXPECT_EQ(build_C_n(1, 3).even_form().second(-1), 3);
  EXPECT_TRUE(curves::on_model(curves::named_curve("C1"), curves::CurvePoint::affine(-1, 3)));
  EXPECT_THROW(build_C_n(0, 7), DomainError);
}

TEST(BuildV, ComponentsGammaZero) {
  const auto v3 = build_V_n(0, 3);
  ASSERT_EQ(v3.size(), 4u);
  EXPECT_EQ(labels(v3), (std::vector<std::string>{"E1", "E2", "C", "C3"}));
  for (const auto& c : v3) {
    const auto expect = curves::named_curve(c.label).even_form();
    const auto [g, h] = c.normalized.even_form();
    EXPECT_EQ(g * h, expect.first * expect.second) << c.label;
  }
  EXPECT_EQ(build_V_n(0, 2).size(), 2u);
  EXPECT_EQ(build_V_n(0, 4).size(), 8u);
  EXPECT_EQ(build_V_n(0, 4).back().label, "C4");
}

TEST(BuildV, ComponentsGammaOne) {
  auto l = labels(build_V_n(1, 3));
  std::sort(l.begin(), l.end());
  EXPECT_EQ(l, (std::vector<std::string>{"C1", "C2", "C3g1", "E"}));
}

TEST(BuildV, RawAndNormalizedAgreeOffTheCancelledLocus) {
  std::mt19937 rng(211);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  for (int gamma : {0, 1}) {
    for (const auto& comp : build_V_n(gamma, 3)) {
      const auto [g, h] = comp.raw.even_form();
      const auto [g2, h2] = comp.normalized.even_form();
      for (int i = 0; i < 20; ++i) {
        const Rational t = make_rational(num(rng), den(rng));
        if (g(t) == 0 || comp.cancelled(t) == 0 || g2(t) == 0) continue;
        // y^2 on the raw model times s(t)^2 is y^2 on the normalized model.
        const Rational s = comp.square_root_factor(t);
        EXPECT_EQ(Rational(h(t) / g(t) * s * s), Rational(h2(t) / g2(t))) << comp.label;
      }
    }
  }
}

TEST(Classify, Examples) {
  auto r = classify(0, 3);
  EXPECT_EQ(r.in_S, Verdict::Yes);
  EXPECT_EQ(r.witness_curve, "E2");
  ASSERT_TRUE(r.y);
  EXPECT_EQ(*r.y, make_rational(7, 2));
  EXPECT_TRUE(curves::on_model(curves::named_curve("E2"), curves::CurvePoint::affine(3, *r.y)));

  r = classify(0, -2);
  EXPECT_EQ(r.in_S, Verdict::No);
  EXPECT_EQ(r.reason, "level 2 non-maximal");
  EXPECT_TRUE(curves::on_model(curves::named_curve("E1"), curves::CurvePoint::affine(-2, 1)));

  r = classify(0, 0);
  EXPECT_EQ(r.in_S, Verdict::No);
  EXPECT_EQ(r.reason.rfind("degenerate", 0), 0u);

  EXPECT_EQ(classify(1, 1).in_S, Verdict::No);
  EXPECT_FALSE(classify(make_rational(1, 2), 3).exact);
}

TEST(Classify, WitnessPointLiesOnTheNamedCurve) {
  for (const Rational& t : {make_rational(-17, 4), make_rational(-2, 3), make_rational(6, 19), make_rational(-4, 5)}) {
    const auto r = classify(0, t);
    ASSERT_EQ(r.in_S, Verdict::Yes) << to_string(t);
    ASSERT_TRUE(r.y);
    EXPECT_TRUE(curves::on_model(curves::named_curve(r.witness_curve), curves::CurvePoint::affine(t, *r.y)))
        << to_string(t) << " on " << r.witness_curve;
  }
}

TEST(Scan, Examples) {
  auto r = scan_integers(0, -10000, 10000);
  ASSERT_EQ(r.members.size(), 1u);
  EXPECT_EQ(r.members[0].c, 3);
  EXPECT_TRUE(r.unknown.empty());
  EXPECT_EQ(r.scanned, 20001);

  r = scan_integers(1, -1000, 1000);
  EXPECT_TRUE(r.members.empty());
  EXPECT_TRUE(r.unknown.empty());

  r = scan_integers(0, 5, 4);
  EXPECT_TRUE(r.members.empty());
  EXPECT_EQ(r.scanned, 0);
}

TEST(Scan, ThreadCountDoesNotChangeOutput) {
  const auto a = scan_integers(0, -3000, 3000, 3, 1);
  const auto b = scan_integers(0, -3000, 3000, 3, 4);
  ASSERT_EQ(a.members.size(), b.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i) EXPECT_EQ(a.members[i].c, b.members[i].c);
}

TEST(Enumerate, GeneratorsProduceMembers) {
  const auto gens = default_generators();
  const auto e1 = enumerate_S_via_generators({gens[0]}, 3);
  EXPECT_TRUE(contains_t(e1, make_rational(-17, 4)));

  const auto e2 = enumerate_S_via_generators({gens[1]}, 3);
  EXPECT_TRUE(contains_t(e2, make_rational(-2, 3)));
  EXPECT_TRUE(contains_t(e2, 3));
  // 6/19 comes from 5 * (1, 1) on W.
  EXPECT_FALSE(contains_t(e2, make_rational(6, 19)));
  EXPECT_TRUE(contains_t(enumerate_S_via_generators({gens[1]}, 5), make_rational(6, 19)));

  for (const auto& e : enumerate_S_via_generators(gens, 6)) EXPECT_EQ(e.certified, Verdict::Yes) << to_string(e.t);
  EXPECT_TRUE(enumerate_S_via_generators(gens, 0).empty());
}

TEST(Surface, FiberAtTwo) {
  const auto f = surface_fiber(2);
  EXPECT_EQ(f.a2, make_rational(144 * 4, 13) - make_rational(294, 13) + make_rational(67, 52));
  EXPECT_THROW(surface_fiber(0), DomainError);
  EXPECT_THROW(surface_fiber(1), DomainError);
}

TEST(Surface, ResidualAgreesWithPointwiseEvaluation) {
  std::mt19937 rng(223);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 11);
  const Poly r = section_residual();
  for (int i = 0; i < 5; ++i) {
    Rational g = make_rational(num(rng), den(rng));
    if (g == 0 || g == 1) continue;
    const auto f = surface_fiber(g);
    const Rational x = -2 * g * g + 2 * g;
    EXPECT_EQ(r(g), x * x * x + f.a2 * x * x + f.a4 * x + f.a6);
  }
}

TEST(Surface, BasePointOnC3Gamma) {
  const Poly v = base_point_value();
  for (long g = -6; g <= 6; ++g) {
    const dynamics::QuadMap m{g, 0};
    const Rational y = Rational(g * g - g);
    EXPECT_EQ(m.iterate(m.gamma, 3), y * y) << g;
    EXPECT_EQ(v(g), y * y);
  }
}
