#include "arboreal/param.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "arboreal/catalog.hpp"
#include "arboreal/dynamics.hpp"
#include "arboreal/weierstrass.hpp"

namespace arboreal::param {

namespace {

Poly generator_poly(const Rational& gamma, std::size_t index) {
  if (index == 0) return Poly{0, -1};
  return dynamics::iterate_value_poly(gamma, static_cast<int>(index) + 1);
}

std::vector<std::string> known_labels(const Rational& gamma, int n) {
  if (gamma == 0 && n == 3) return {"E1", "E2", "C", "C3"};
  if (gamma == 0 && n == 4) return {"C4"};
  if (gamma == 1 && n == 3) return {"C2", "C1", "C3g1", "E"};
  return {};
}

Poly even_product(const curves::CurveModel& m) {
  const auto [g, h] = m.even_form();
  return g * h;
}

std::string subset_label(int n, const std::vector<std::size_t>& gens) {
  std::string s = "V" + std::to_string(n) + "[";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::to_string(gens[i]);
  return s + "]";
}

Component normalize(const Poly& g, const Poly& h, std::vector<std::size_t> gens, const Rational& gamma, int n) {
  Component comp;
  comp.generators = std::move(gens);
  comp.raw = g == Poly::constant(1) ? curves::make_even(h) : curves::make_twisted(g, h);

  Poly s = Poly::constant(1);
  for (const auto& [f, e] : squarefree_decomposition(g))
    for (int i = 0; i < e / 2; ++i) s *= f;
  const Poly g1 = divmod(g, s * s).first;
  const Poly d = gcd(g1, h);  // monic
  const Poly g2 = divmod(g1, d).first;
  const Poly h2 = divmod(h, d).first;
  comp.square_root_factor = s;
  comp.cancelled = d;
  comp.normalized = g2 == Poly::constant(1) ? curves::make_even(h2) : curves::make_twisted(g2, h2);

  comp.label = subset_label(n, comp.generators);
  const Poly prod = g2 * h2;
  for (const auto& name : known_labels(gamma, n)) {
    if (even_product(curves::named_curve(name)) == prod) {
      comp.label = name;
      break;
    }
  }
  comp.raw.label = comp.label + " (raw)";
  comp.normalized.label = comp.label;
  return comp;
}

}  // namespace

curves::CurveModel build_C_n(const Rational& gamma, int n) {
  if (n < 1 || n > 6) throw DomainError("build_C_n: n must be in [1, 6]");
  return curves::make_even(dynamics::iterate_value_poly(gamma, n), "C" + std::to_string(n));
}

std::vector<Component> build_V_n(const Rational& gamma, int n) {
  if (n < 2 || n > 4) throw DomainError("build_V_n: n must be in [2, 4]");
  const Poly h = dynamics::iterate_value_poly(gamma, n);
  const std::size_t k = static_cast<std::size_t>(n - 1);
  std::vector<Component> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> gens;
    Poly g = Poly::constant(1);
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) {
        gens.push_back(j);
        g *= generator_poly(gamma, j);
      }
    }
    out.push_back(normalize(g, h, std::move(gens), gamma, n));
  }
  out.push_back(normalize(Poly::constant(1), h, {}, gamma, n));
  return out;
}

MembershipRecord classify(const Rational& gamma, const Rational& c, int depth, const arith::FactorCache& cache) {
  if (depth < 2 || depth > 4) throw DomainError("classify: depth must be in [2, 4]");
  MembershipRecord rec;
  rec.gamma = gamma;
  rec.c = c;
  rec.depth = depth;

  const dynamics::QuadMap m{gamma, c};
  auto res = galois::small_iterate(m, depth, cache);
  rec.in_S = res.verdict;
  rec.exact = res.exact && (gamma == 0 || gamma == 1);
  rec.trail = std::move(res.trail);
  const auto& last = rec.trail.back();

  if (rec.in_S == galois::Verdict::Unknown) {
    rec.reason = "level " + std::to_string(last.level) + ": " + last.reason;
    return rec;
  }
  if (rec.in_S == galois::Verdict::No) {
    if (last.status == galois::LevelStatus::Reducible) {
      rec.reason = "degenerate: " + last.reason;
    } else if (last.level < depth) {
      rec.reason = "level " + std::to_string(last.level) + " non-maximal";
    } else {
      rec.reason = "level " + std::to_string(depth) + " maximal";
    }
    return rec;
  }

  Poly g = Poly::constant(1);
  for (auto j : last.witness) g *= generator_poly(gamma, j);
  const Rational y_raw = *last.sqrt / abs(g(c));
  for (const auto& comp : build_V_n(gamma, depth)) {
    if (comp.generators != last.witness) continue;
    rec.witness_curve = comp.label;
    rec.y = comp.transport_y(c, y_raw);
    if (!curves::on_model(comp.normalized, curves::CurvePoint::affine(c, *rec.y)))
      throw Error("internal: witness point is not on " + comp.label);
    break;
  }
  return rec;
}

ScanResult scan_integers(const Rational& gamma, long lo, long hi, int depth, int threads,
                         const arith::FactorCache& cache) {
  ScanResult out;
  if (hi < lo) return out;
  if (threads < 1) threads = 1;
  const long count = hi - lo + 1;
  std::vector<std::optional<MembershipRecord>> slots(static_cast<std::size_t>(count));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    constexpr long kChunk = 64;
    for (;;) {
      const long start = next.fetch_add(kChunk);
      if (start >= count) return;
      const long stop = std::min(count, start + kChunk);
      for (long i = start; i < stop; ++i) {
        try {
          auto rec = classify(gamma, Rational(lo + i), depth, cache);
          if (rec.in_S != galois::Verdict::No) slots[static_cast<std::size_t>(i)] = std::move(rec);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  out.scanned = count;
  for (auto& s : slots) {
    if (!s) continue;
    if (s->in_S == galois::Verdict::Yes) {
      out.members.push_back(std::move(*s));
    } else {
      out.unknown.push_back(std::move(*s));
    }
  }
  return out;
}

std::vector<EnumeratedT> enumerate_S_via_generators(const std::vector<GeneratorInput>& gens, int N,
                                                    const arith::FactorCache& cache) {
  std::vector<EnumeratedT> out;
  for (const auto& gen : gens) {
    const auto& chain = gen.chain;
    if (chain.steps.empty() || !chain.steps.back().target || !chain.steps.back().target->is_weierstrass())
      throw DomainError("generator chain must end on a Weierstrass model");
    if (!chain.inverse) throw DomainError("generator chain has no inverse");
    const auto image = curves::apply_map_chain(chain, gen.point);
    if (!image.point) throw DomainError("generator lies on the exception divisor: " + image.reason);
    const auto& W = chain.steps.back().target->weierstrass();
    const std::string curve = chain.source ? chain.source->label : chain.name;

    std::vector<EnumeratedT> found;
    for (long k = 1; k <= N; ++k) {
      for (long sk : {k, -k}) {
        const auto Q = curves::scalar_mul(W, sk, *image.point);
        for (const auto& P : chain.inverse(Q)) {
          const Rational& t = P.x();
          if (t == 0 || t == -2) continue;
          auto dup = std::find_if(found.begin(), found.end(), [&](const EnumeratedT& e) { return e.t == t; });
          if (dup != found.end()) continue;
          EnumeratedT e{t, curve, sk, galois::Verdict::Unknown};
          e.certified = galois::small_iterate(dynamics::QuadMap{0, t}, 3, cache).verdict;
          found.push_back(std::move(e));
        }
      }
    }
    std::stable_sort(found.begin(), found.end(), [](const EnumeratedT& a, const EnumeratedT& b) {
      const Integer ha = height(a.t), hb = height(b.t);
      return ha != hb ? ha < hb : a.t < b.t;
    });
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::vector<GeneratorInput> default_generators() {
  return {{curves::e1_chain(), curves::CurvePoint::affine(-2, 1)},
          {curves::e2_chain(), curves::CurvePoint::affine(make_rational(-2, 3), make_rational(-5, 3))}};
}

Poly surface_a2() { return Poly{make_rational(67, 52), make_rational(-147, 13), make_rational(144, 13)}; }

Poly surface_a4() {
  return Poly{make_rational(6003, 2704), make_rational(-4635, 338), make_rational(8811, 169),
              make_rational(-14112, 169), make_rational(6912, 169)};
}

Poly surface_a6() {
  return Poly{make_rational(169073, 140608), make_rational(-307667, 35152), make_rational(365399, 8788),
              make_rational(-228889, 2197),  make_rational(384336, 2197),   make_rational(-338688, 2197),
              make_rational(110592, 2197)};
}

SurfaceFiber surface_fiber(const Rational& gamma) {
  if (gamma == 0 || gamma == 1) throw DomainError("surface_fiber: gamma must not be 0 or 1");
  return {gamma, surface_a2()(gamma), surface_a4()(gamma), surface_a6()(gamma)};
}

Poly section_residual() {
  const Poly x{0, 2, -2};
  return x * x * x + surface_a2() * x * x + surface_a4() * x + surface_a6();
}

Poly base_point_value() {
  const Poly gamma = Poly::variable();
  Poly v = gamma;
  for (int i = 0; i < 3; ++i) {
    const Poly d = v - gamma;
    v = d * d;
  }
  return v;
}

}  // namespace arboreal::param
