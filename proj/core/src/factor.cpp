#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>

#include "arboreal/arith.hpp"

namespace arboreal::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kDeterministicBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr u64 kExtraWitnesses[] = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Sieve shared by all calls; grows on demand.
class PrimeTable {
 public:
  std::shared_ptr<const std::vector<u64>> upto(u64 bound) {
    std::lock_guard lock(mutex_);
    if (!primes_ || limit_ < bound) {
      limit_ = std::max<u64>(bound, 1000);
      std::vector<bool> composite(limit_ + 1, false);
      auto primes = std::make_shared<std::vector<u64>>();
      for (u64 i = 2; i <= limit_; ++i) {
        if (composite[i]) continue;
        primes->push_back(i);
        for (u64 j = i * i; j <= limit_; j += i) composite[j] = true;
      }
      primes_ = std::move(primes);
    }
    return primes_;
  }

 private:
  std::mutex mutex_;
  u64 limit_ = 0;
  std::shared_ptr<const std::vector<u64>> primes_;
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

bool fits_u64(const Integer& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  u64 v = 0;
  mpz_export(&v, nullptr, -1, sizeof(u64), 0, 0, n.get_mpz_t());
  return v;
}

Integer from_u64(u64 v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &v);
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_round_u64(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kDeterministicBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first 12 prime bases are deterministic for all 64-bit n.
  for (u64 a : kDeterministicBases) {
    if (!mr_round_u64(n, a, d, s)) return false;
  }
  return true;
}

bool mr_round(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pollard rho, Brent's variant with batched gcds. Returns a nontrivial
// factor or 0.
u64 rho_u64(u64 n, u64 seed, u64 max_iter) {
  if (n % 2 == 0) return 2;
  const u64 c = seed;
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  const u64 m = 128;
  u64 r = 1, iter = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += lim;
      iter += lim;
    }
    r <<= 1;
    if (iter > max_iter) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return (g == n) ? 0 : g;
}

Integer rho_big(const Integer& n, unsigned long seed, u64 max_iter) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const Integer c = seed;
  auto f = [&](const Integer& x) -> Integer { return (x * x + c) % n; };
  Integer y = 2, x = 2, ys = 2, q = 1, g = 1;
  const u64 m = 128;
  u64 r = 1, iter = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      g = gcd_int(q, n);
      k += lim;
      iter += lim;
    }
    r <<= 1;
    if (iter > max_iter) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_int(abs(x - ys), n);
    } while (g == 1);
  }
  return (g == n) ? Integer(0) : g;
}

Integer find_factor(const Integer& n, const FactorBudget& budget) {
  for (int attempt = 0; attempt < budget.rho_attempts; ++attempt) {
    const unsigned long seed = 1 + 2 * static_cast<unsigned long>(attempt);
    if (fits_u64(n)) {
      u64 d = rho_u64(to_u64(n), seed, budget.rho_iterations);
      if (d) return from_u64(d);
    } else {
      Integer d = rho_big(n, seed, budget.rho_iterations);
      if (d != 0) return d;
    }
  }
  return 0;
}

// Strips primes in [from, bound] from n.
void trial_divide(Integer& n, std::map<Integer, int>& out, const std::vector<u64>& primes,
                  u64 from, u64 bound) {
  auto it = std::lower_bound(primes.begin(), primes.end(), from);
  for (; it != primes.end() && *it <= bound; ++it) {
    const u64 p = *it;
    if (n == 1) return;
    if (fits_u64(n)) {
      u64 v = to_u64(n);
      if (p * p > v) break;
      if (v % p) continue;
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      out[from_u64(p)] += e;
      n = from_u64(v);
    } else {
      if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out[from_u64(p)] += e;
    }
  }
}

constexpr u64 kQuickTrial = 2000;

}  // namespace

Integer FactorResult::product() const {
  Integer r = cofactor;
  for (const auto& [p, e] : factored_part) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    r *= pe;
  }
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  for (u64 p : kDeterministicBases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (u64 a : kDeterministicBases) {
    if (!mr_round(n, from_u64(a), d, s)) return false;
  }
  static const Integer kDeterministicLimit("3317044064679887385961981", 10);
  if (n < kDeterministicLimit) return true;
  for (u64 a : kExtraWitnesses) {
    if (!mr_round(n, from_u64(a), d, s)) return false;
  }
  return true;
}

FactorResult factor(const Integer& n_in, const FactorBudget& budget) {
  if (n_in == 0) throw DomainError("factor(0)");
  FactorResult result;
  Integer n = abs(n_in);
  const u64 bound = std::max<u64>(budget.trial_bound, 2);
  auto primes = prime_table().upto(std::max(bound, kQuickTrial));

  const u64 quick = std::min(bound, kQuickTrial);
  trial_divide(n, result.factored_part, *primes, 2, quick);
  if (n == 1) return result;
  // After stripping primes <= quick, anything below quick^2 is prime.
  if (n < Integer(quick) * quick || is_prime(n)) {
    result.factored_part[n] += 1;
    return result;
  }

  std::vector<Integer> stack{n};
  std::vector<Integer> stubborn;
  while (!stack.empty()) {
    Integer m = std::move(stack.back());
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      result.factored_part[m] += 1;
      continue;
    }
    if (is_perfect_square(m)) {
      Integer r = isqrt(m);
      stack.push_back(r);
      stack.push_back(r);
      continue;
    }
    Integer d = find_factor(m, budget);
    if (d == 0) {
      stubborn.push_back(m);
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }

  // Rho gave up: finish trial division so the cofactor has no small primes.
  for (auto& m : stubborn) {
    if (bound > quick) trial_divide(m, result.factored_part, *primes, quick + 1, bound);
    if (m == 1) continue;
    if (is_prime(m)) {
      result.factored_part[m] += 1;
      continue;
    }
    result.cofactor *= m;
    result.complete = false;
  }
  return result;
}

std::vector<Integer> divisors(const FactorResult& f) {
  if (!f.complete) throw InexactClassError("divisors of an incomplete factorization");
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f.factored_part) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arboreal::arith
