#pragma once

// Level-by-level maximality of Gal(f^n) from square classes of the critical
// orbit.
//
// Generator indexing used by witnesses: index 0 is -c, index j >= 1 is
// f^{j+1}(gamma). So at level n the generators are indices 0..n-2.

#include <optional>
#include <string>
#include <vector>

#include "arboreal/arith.hpp"
#include "arboreal/dynamics.hpp"
#include "arboreal/poly.hpp"

namespace arboreal::galois {

enum class LevelStatus { Maximal, NonMaximal, Reducible, Unknown };

const char* to_string(LevelStatus s);

struct LevelCertificate {
  Rational gamma;
  Rational c;
  int level = 0;
  LevelStatus status = LevelStatus::Unknown;
  std::vector<std::size_t> witness;  // generator indices, NonMaximal only
  std::optional<Rational> sqrt;      // positive square root of f^n * prod(witness)
  std::string reason;                // set for Reducible / Unknown
};

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct SmallIterateResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<LevelCertificate> trail;
  // False for n > 3: no irreducibility criterion backs the answer.
  bool exact = true;
};

// Process-wide factor cache used when none is passed.
const arith::FactorCache& default_cache();

// The set G_m of 2^m - 1 polynomials in t.
std::vector<Poly> g_set(const Rational& gamma, int m);

struct SubfieldClasses {
  std::vector<arith::SquareClass> classes;    // empty when degenerate
  std::optional<std::size_t> zero_generator;  // index into g_set when g(c) = 0
  bool degenerate = false;                    // zero value or -c a square
  std::string reason;
};

SubfieldClasses subfield_classes(const dynamics::QuadMap& m, int k,
                                 const arith::FactorCache& cache = default_cache());

// Values whose classes generate level n: [-c, f^2(gamma), ..., f^{n-1}(gamma)].
std::vector<Rational> generator_values(const dynamics::QuadMap& m, int n);

LevelCertificate level_status(const dynamics::QuadMap& m, int n,
                              const arith::FactorCache& cache = default_cache());

SmallIterateResult small_iterate(const dynamics::QuadMap& m, int n,
                                 const arith::FactorCache& cache = default_cache());

// d = squarefree part of f^n(gamma); Yes iff every prime of d divides
// 2 * prod_{j<n} f^j(0). Requires gamma = 0, integer c and level n
// NonMaximal; throws DomainError otherwise.
Verdict ramification_support_check(const dynamics::QuadMap& m, int n,
                                   const arith::FactorCache& cache = default_cache());

}  // namespace arboreal::galois
