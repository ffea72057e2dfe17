#include "arboreal/galois.hpp"

#include <algorithm>

namespace arboreal::galois {

const char* to_string(LevelStatus s) {
  switch (s) {
    case LevelStatus::Maximal: return "Maximal";
    case LevelStatus::NonMaximal: return "NonMaximal";
    case LevelStatus::Reducible: return "Reducible";
    case LevelStatus::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

const arith::FactorCache& default_cache() {
  static const arith::FactorCache cache;
  return cache;
}

std::vector<Poly> g_set(const Rational& gamma, int m) {
  if (m < 1 || m > 6) throw DomainError("g_set: m must be in [1, 6]");
  std::vector<Poly> out{Poly{0, -1}};
  for (int k = 2; k <= m; ++k) {
    const Poly fk = dynamics::iterate_value_poly(gamma, k);
    const std::size_t prev = out.size();
    for (std::size_t i = 0; i < prev; ++i) out.push_back(fk * out[i]);
    out.push_back(fk);
  }
  return out;
}

SubfieldClasses subfield_classes(const dynamics::QuadMap& m, int k,
                                 const arith::FactorCache& cache) {
  SubfieldClasses out;
  const auto gs = g_set(m.gamma, k);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Rational v = gs[i](m.c);
    if (v == 0) {
      out.zero_generator = i;
      out.degenerate = true;
      out.reason = "generator " + std::to_string(i) + " (" + gs[i].to_string() + ") vanishes at c";
      return out;
    }
    values.push_back(std::move(v));
  }
  if (arith::is_rational_square(-m.c)) {
    out.degenerate = true;
    out.reason = "-c is a rational square (K1 = Q)";
    return out;
  }
  for (const auto& v : values) out.classes.push_back(arith::square_class(v, cache));
  return out;
}

std::vector<Rational> generator_values(const dynamics::QuadMap& m, int n) {
  std::vector<Rational> gens{-m.c};
  if (n >= 3) {
    const auto orbit = dynamics::critical_orbit(m, n - 1);
    gens.insert(gens.end(), orbit.begin() + 1, orbit.end());
  }
  return gens;
}

LevelCertificate level_status(const dynamics::QuadMap& m, int n, const arith::FactorCache& cache) {
  if (n < 1) throw DomainError("level_status: level must be >= 1");
  LevelCertificate cert{m.gamma, m.c, n, LevelStatus::Unknown, {}, std::nullopt, {}};
  const auto orbit = dynamics::critical_orbit(m, n);
  for (std::size_t j = 0; j < orbit.size(); ++j) {
    if (orbit[j] == 0) {
      cert.status = LevelStatus::Reducible;
      cert.reason = "critical orbit hits 0 at depth " + std::to_string(j + 1);
      return cert;
    }
  }

  if (n == 1) {
    if (auto r = rational_sqrt(-m.c)) {
      cert.status = LevelStatus::NonMaximal;
      cert.sqrt = *r;
    } else {
      cert.status = LevelStatus::Maximal;
    }
    return cert;
  }

  const auto gens = generator_values(m, n);
  const Rational& target = orbit.back();
  std::vector<arith::SquareClass> gen_classes;
  for (const auto& g : gens) gen_classes.push_back(arith::square_class(g, cache));
  const auto target_class = arith::square_class(target, cache);

  auto inexact = [](const arith::SquareClass& c) { return !c.is_exact(); };
  if (inexact(target_class) || std::any_of(gen_classes.begin(), gen_classes.end(), inexact)) {
    cert.status = LevelStatus::Unknown;
    cert.reason = "square class with unfactored cofactor";
    return cert;
  }

  auto subset = arith::span_solve(target_class, gen_classes);
  if (!subset) {
    cert.status = LevelStatus::Maximal;
    return cert;
  }
  Rational prod = target;
  for (auto i : *subset) prod *= gens[i];
  auto r = rational_sqrt(prod);
  if (!r) throw Error("internal: span witness is not a square");
  cert.status = LevelStatus::NonMaximal;
  cert.witness = std::move(*subset);
  cert.sqrt = *r;
  return cert;
}

SmallIterateResult small_iterate(const dynamics::QuadMap& m, int n, const arith::FactorCache& cache) {
  if (n < 2 || n > 6) throw DomainError("small_iterate: n must be in [2, 6]");
  SmallIterateResult out;
  out.exact = n <= 3;
  for (int k = 1; k <= n; ++k) {
    out.trail.push_back(level_status(m, k, cache));
    const auto s = out.trail.back().status;
    if (s == LevelStatus::Unknown) {
      out.verdict = Verdict::Unknown;
      return out;
    }
    if (s == LevelStatus::Reducible) {
      out.verdict = Verdict::No;
      return out;
    }
    if (k < n && s == LevelStatus::NonMaximal) {
      out.verdict = Verdict::No;
      return out;
    }
  }
  out.verdict = out.trail.back().status == LevelStatus::NonMaximal ? Verdict::Yes : Verdict::No;
  return out;
}

Verdict ramification_support_check(const dynamics::QuadMap& m, int n, const arith::FactorCache& cache) {
  if (m.gamma != 0) throw DomainError("ramification_support_check: requires gamma = 0");
  if (!is_integral(m.c)) throw DomainError("ramification_support_check: requires integer c");
  const auto cert = level_status(m, n, cache);
  if (cert.status == LevelStatus::Unknown) return Verdict::Unknown;
  if (cert.status != LevelStatus::NonMaximal)
    throw DomainError("ramification_support_check: level " + std::to_string(n) + " is not NonMaximal");

  const auto orbit = dynamics::critical_orbit(m, n);
  const auto d = arith::square_class(orbit.back(), cache);
  if (!d.is_exact()) return Verdict::Unknown;

  Integer allowed = 2;
  for (int j = 0; j + 1 < n; ++j) allowed *= orbit[static_cast<std::size_t>(j)].get_num();
  // 2 always divides `allowed`, so only the odd support needs checking.
  for (const auto& p : d.odd_support) {
    if (mpz_divisible_p(allowed.get_mpz_t(), p.get_mpz_t()) == 0) return Verdict::No;
  }
  return Verdict::Yes;
}

}  // namespace arboreal::galois
