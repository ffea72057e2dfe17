#include "arboreal/point_search.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

namespace arboreal::curves {

namespace {

// Points above x for one model; appends to out.
class FiberSolver {
 public:
  explicit FiberSolver(const CurveModel& m) : model_(m) {
    if (const auto* w = std::get_if<Weierstrass>(&m.shape)) {
      weier_ = w;
    } else {
      auto [g, h] = m.even_form();
      g_ = std::move(g);
      h_ = std::move(h);
    }
  }

  void solve(const Rational& x, std::vector<CurvePoint>& out) const {
    if (weier_) {
      // y^2 + L y = R  <=>  (2y + L)^2 = L^2 + 4R
      const Rational L = weier_->a1() * x + weier_->a3();
      const Rational disc = L * L + 4 * weier_->rhs()(x);
      if (auto s = rational_sqrt(disc)) {
        out.push_back(CurvePoint::affine(x, (*s - L) / 2));
        if (*s != 0) out.push_back(CurvePoint::affine(x, (-*s - L) / 2));
      }
      return;
    }
    const Rational gx = g_(x), hx = h_(x);
    if (gx == 0) {
      if (hx == 0) throw DomainError("model '" + model_.label + "' contains the line x = " + x.get_str());
      return;
    }
    if (auto s = rational_sqrt(hx / gx)) {
      out.push_back(CurvePoint::affine(x, *s));
      if (*s != 0) out.push_back(CurvePoint::affine(x, -*s));
    }
  }

 private:
  const CurveModel& model_;
  const Weierstrass* weier_ = nullptr;
  Poly g_, h_;
};

}  // namespace

std::vector<CurvePoint> rational_point_search(const CurveModel& m, long H, int threads) {
  if (H < 1) throw DomainError("rational_point_search: H must be >= 1");
  threads = std::max(1, threads);
  const FiberSolver solver(m);
  std::vector<std::vector<CurvePoint>> partial(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));

  auto work = [&](int id) {
    try {
      auto& out = partial[static_cast<std::size_t>(id)];
      for (long q = 1 + id; q <= H; q += threads) {
        for (long p = -H; p <= H; ++p) {
          if (std::gcd(p, q) != 1) continue;
          solver.solve(make_rational(p, q), out);
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(id)] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<CurvePoint> out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arboreal::curves
