#pragma once

// The curves C_n: y^2 = f_t^n(gamma) and V_n = C_n plus the twists
// g(t) y^2 = f_t^n(gamma) for g in the Kummer generator set, membership in
// S_gamma^(n) with a witness point, integer scans, and the elliptic surface
// over the gamma-line.

#include <optional>
#include <string>
#include <vector>

#include "arboreal/arith.hpp"
#include "arboreal/curve_model.hpp"
#include "arboreal/galois.hpp"
#include "arboreal/map_chain.hpp"

namespace arboreal::param {

// One component of V_n. The raw model g y^2 = h is normalized by absorbing
// the square part s^2 of g into y and cancelling d = gcd(g / s^2, h):
//   (t, y) -> (t, s(t) y),  valid where d(t) != 0.
struct Component {
  std::vector<std::size_t> generators;  // galois generator indices; empty for C_n
  curves::CurveModel raw;
  curves::CurveModel normalized;
  Poly square_root_factor;  // s
  Poly cancelled;           // d
  std::string label;        // catalog name when recognized, else "V<n>[i,j,...]"

  Rational transport_y(const Rational& t, const Rational& y) const { return square_root_factor(t) * y; }
};

// pre: n <= 6
curves::CurveModel build_C_n(const Rational& gamma, int n);

// 2^{n-1} components: one per nonempty generator subset (by bitmask), then
// C_n. pre: 2 <= n <= 4
std::vector<Component> build_V_n(const Rational& gamma, int n);

struct MembershipRecord {
  Rational gamma;
  Rational c;
  int depth = 3;
  galois::Verdict in_S = galois::Verdict::Unknown;
  std::string witness_curve;  // normalized component label, in_S == Yes only
  std::optional<Rational> y;  // on the normalized witness component
  std::vector<galois::LevelCertificate> trail;
  std::string reason;  // why not in S, or why Unknown
  // False for gamma outside {0, 1} or depth > 3: certificate-only semantics.
  bool exact = true;
};

MembershipRecord classify(const Rational& gamma, const Rational& c, int depth = 3,
                          const arith::FactorCache& cache = galois::default_cache());

struct ScanResult {
  std::vector<MembershipRecord> members;  // in_S == Yes, ascending c
  std::vector<MembershipRecord> unknown;  // factoring budget exhausted
  long scanned = 0;
};

// c in [lo, hi], ordered output independent of the thread count.
ScanResult scan_integers(const Rational& gamma, long lo, long hi, int depth = 3, int threads = 1,
                         const arith::FactorCache& cache = galois::default_cache());

struct GeneratorInput {
  curves::RationalMapChain chain;  // source curve -> Weierstrass model
  curves::CurvePoint point;        // on chain.source
};

struct EnumeratedT {
  Rational t;
  std::string curve;
  long multiple = 0;  // signed k with t coming from k * image(point)
  galois::Verdict certified = galois::Verdict::Unknown;
};

// t-coordinates of the preimages of +-k * image(point), 1 <= k <= N, with
// t not in {0, -2}, each cross-checked by small_iterate(0, t, 3). Sorted by
// height of t, deduplicated per curve.
std::vector<EnumeratedT> enumerate_S_via_generators(const std::vector<GeneratorInput>& gens, int N,
                                                    const arith::FactorCache& cache = galois::default_cache());

// E1 with (-2, 1) and E2 with (-2/3, -5/3), the preimage of (1, 1) on
// y^2 = x^3 - x + 1.
std::vector<GeneratorInput> default_generators();

// y^2 = x^3 + a2 x^2 + a4 x + a6 over Q(gamma).
struct SurfaceFiber {
  Rational gamma;
  Rational a2, a4, a6;
};

// Coefficients as polynomials in gamma.
Poly surface_a2();
Poly surface_a4();
Poly surface_a6();

// pre: gamma not in {0, 1}
SurfaceFiber surface_fiber(const Rational& gamma);

// x^3 + a2 x^2 + a4 x + a6 at x = -2 gamma^2 + 2 gamma, as a polynomial in
// gamma. Zero iff that section lies on the fiber.
Poly section_residual();

// f_{gamma,0}^3(gamma) as a polynomial in gamma; the model C_{3,gamma} at
// t = 0 has the point (0, gamma^2 - gamma).
Poly base_point_value();

}  // namespace arboreal::param
