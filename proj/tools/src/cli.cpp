#include "arboreal/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "arboreal/analytic.hpp"
#include "arboreal/catalog.hpp"
#include "arboreal/cli/reproduce.hpp"
#include "arboreal/cli/serialize.hpp"
#include "arboreal/dynamics.hpp"
#include "arboreal/galois.hpp"
#include "arboreal/map_chain.hpp"
#include "arboreal/padic.hpp"
#include "arboreal/param.hpp"
#include "arboreal/point_search.hpp"
#include "arboreal/weierstrass.hpp"

namespace arboreal::cli {

namespace {

// Thrown when a result could not be decided under the factoring budget.
struct UnknownResult {
  std::string what;
};

struct Config {
  int threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format;  // empty: the command's default
  int digits = analytic::kDefaultDigits;
  std::string cache_path;
  std::uint64_t trial_bound = arith::FactorBudget{}.trial_bound;
  std::uint64_t rho_iterations = arith::FactorBudget{}.rho_iterations;
};

std::string fmt(const Config& cfg, const char* fallback) { return cfg.format.empty() ? fallback : cfg.format; }

Rational parse_q(const std::string& s) { return parse_rational(s); }

// Accepts plain integers and "1e60" / "10^60".
Integer parse_big(const std::string& s) {
  auto pow10 = [](const std::string& m, const std::string& e) {
    Integer base(m), r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, std::stoul(e));
    return Integer(base * r);
  };
  try {
    if (auto p = s.find_first_of("eE"); p != std::string::npos) return pow10(s.substr(0, p), s.substr(p + 1));
    if (s.rfind("10^", 0) == 0) return pow10("1", s.substr(3));
    return Integer(s);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

curves::CurveModel curve_arg(const std::string& s) {
  if (s.find('=') == std::string::npos) return curves::named_curve(s);
  return curves::parse_curve(s);
}

void print_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << "\n";
}

void emit_points(std::ostream& out, const std::string& format, const std::vector<curves::CurvePoint>& pts) {
  if (format == "json") {
    out << to_json(pts).dump(2) << "\n";
  } else if (format == "csv") {
    out << "x,y\n";
    for (const auto& p : pts) {
      if (p.is_infinity()) continue;
      print_csv_row(out, {to_string(p.x()), to_string(p.y())});
    }
  } else {
    for (const auto& p : pts) out << p.to_string() << "\n";
    out << pts.size() << " points\n";
  }
}

// ----- commands -----

struct OrbitArgs {
  std::string gamma = "0", c;
  int depth = 3;
};

void cmd_orbit(const OrbitArgs& a, const Config& cfg, std::ostream& out) {
  const dynamics::QuadMap m{parse_q(a.gamma), parse_q(a.c)};
  if (a.depth < 1 || a.depth > 64) throw DomainError("depth must be in [1, 64]");
  const auto orbit = dynamics::critical_orbit(m, a.depth);
  const auto f = fmt(cfg, "text");
  if (f == "json") {
    json j{{"gamma", to_json(m.gamma)}, {"c", to_json(m.c)}, {"orbit", json::array()}};
    for (const auto& v : orbit) j["orbit"].push_back(to_json(v));
    out << j.dump(2) << "\n";
  } else if (f == "csv") {
    out << "n,value\n";
    for (std::size_t i = 0; i < orbit.size(); ++i) print_csv_row(out, {std::to_string(i + 1), to_string(orbit[i])});
  } else {
    for (std::size_t i = 0; i < orbit.size(); ++i) out << "f^" << i + 1 << "(gamma) = " << to_string(orbit[i]) << "\n";
  }
}

struct GaloisArgs {
  std::string gamma = "0", c;
  int depth = 3;
};

void cmd_galois(const GaloisArgs& a, const Config& cfg, const arith::FactorCache& cache, std::ostream& out) {
  const dynamics::QuadMap m{parse_q(a.gamma), parse_q(a.c)};
  const auto res = galois::small_iterate(m, a.depth, cache);
  const auto f = fmt(cfg, "json");
  if (f == "json") {
    json trail = json::array();
    for (const auto& c : res.trail) trail.push_back(to_json(c));
    json j{{"gamma", to_json(m.gamma)}, {"c", to_json(m.c)},        {"depth", a.depth},
           {"verdict", galois::to_string(res.verdict)},              {"exact", res.exact},
           {"trail", std::move(trail)}};
    out << j.dump(2) << "\n";
  } else if (f == "csv") {
    out << "level,status,witness,sqrt\n";
    for (const auto& c : res.trail) {
      std::string w;
      for (auto i : c.witness) w += (w.empty() ? "" : " ") + std::to_string(i);
      print_csv_row(out, {std::to_string(c.level), galois::to_string(c.status), w, c.sqrt ? to_string(*c.sqrt) : ""});
    }
  } else {
    for (const auto& c : res.trail) {
      out << "level " << c.level << ": " << galois::to_string(c.status);
      if (!c.witness.empty()) {
        out << " witness";
        for (auto i : c.witness) out << " " << i;
      }
      if (c.sqrt) out << " sqrt " << to_string(*c.sqrt);
      if (!c.reason.empty()) out << " (" << c.reason << ")";
      out << "\n";
    }
    out << "small iterate at depth " << a.depth << ": " << galois::to_string(res.verdict) << "\n";
  }
  if (res.verdict == galois::Verdict::Unknown) throw UnknownResult{"factoring budget exhausted"};
}

struct ScanArgs {
  std::string gamma = "0", integers;
  int depth = 3;
};

void cmd_scan(const ScanArgs& a, const Config& cfg, const arith::FactorCache& cache, std::ostream& out) {
  const auto colon = a.integers.find(':');
  if (colon == std::string::npos) throw DomainError("--integers expects lo:hi");
  long lo, hi;
  try {
    lo = std::stol(a.integers.substr(0, colon));
    hi = std::stol(a.integers.substr(colon + 1));
  } catch (const std::exception&) {
    throw DomainError("--integers expects lo:hi with integer bounds");
  }
  const auto res = param::scan_integers(parse_q(a.gamma), lo, hi, a.depth, cfg.threads, cache);
  const auto f = fmt(cfg, "text");
  if (f == "json") {
    json arr = json::array();
    for (const auto& r : res.members) arr.push_back(to_json(r));
    for (const auto& r : res.unknown) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else if (f == "csv") {
    out << "c,in_S,witness_curve,y\n";
    for (const auto& r : res.members) print_csv_row(out, {to_string(r.c), "true", r.witness_curve, to_string(*r.y)});
    for (const auto& r : res.unknown) print_csv_row(out, {to_string(r.c), "unknown", "", ""});
  } else {
    out << "[";
    for (std::size_t i = 0; i < res.members.size(); ++i) out << (i ? ", " : "") << to_string(res.members[i].c);
    out << "]\n";
    if (!res.unknown.empty()) {
      out << "unknown:";
      for (const auto& r : res.unknown) out << " " << to_string(r.c);
      out << "\n";
    }
  }
  if (!res.unknown.empty()) throw UnknownResult{std::to_string(res.unknown.size()) + " values undecided"};
}

struct PointsArgs {
  std::string curve;
  long height = 100;
};

void cmd_curve_points(const PointsArgs& a, const Config& cfg, std::ostream& out) {
  const auto m = curve_arg(a.curve);
  auto pts = curves::infinity_points(m);
  const auto affine = curves::rational_point_search(m, a.height, cfg.threads);
  pts.insert(pts.end(), affine.begin(), affine.end());
  emit_points(out, fmt(cfg, "text"), pts);
}

struct IntegralArgs {
  std::string curve, gen;
  int max_mult = 40;
};

void cmd_integral_points(const IntegralArgs& a, const Config& cfg, std::ostream& out) {
  const auto m = curve_arg(a.curve);
  if (!m.is_weierstrass()) throw DomainError("integral-points needs a Weierstrass model");
  const auto pts = curves::integral_points_via_generator(m.weierstrass(), curves::parse_point(a.gen), a.max_mult);
  emit_points(out, fmt(cfg, "text"), pts);
}

struct ChainArgs {
  std::string chain, point;
  bool inverse = false;
};

curves::RationalMapChain chain_by_name(const std::string& name) {
  if (name == "e1") return curves::e1_chain();
  if (name == "e2") return curves::e2_chain();
  if (name == "c3") return curves::c3_chain();
  if (name == "gamma1") return curves::gamma1_chain();
  throw DomainError("unknown chain '" + name + "' (e1, e2, c3, gamma1)");
}

void cmd_map_chain(const ChainArgs& a, const Config& cfg, std::ostream& out) {
  const auto chain = chain_by_name(a.chain);
  const auto P = curves::parse_point(a.point);
  std::vector<curves::CurvePoint> pts;
  std::string reason;
  if (a.inverse) {
    const auto& target = chain.steps.back().target;
    if (target && !curves::on_model(*target, P)) throw DomainError("point is not on " + target->label);
    pts = chain.inverse(P);
  } else {
    const auto r = curves::apply_map_chain(chain, P);
    if (r.point) {
      pts.push_back(*r.point);
    } else {
      reason = r.reason;
    }
  }
  const auto f = fmt(cfg, "text");
  if (f == "json") {
    json j{{"chain", chain.name}, {"direction", a.inverse ? "inverse" : "forward"}, {"input", to_json(P)},
           {"points", to_json(pts)}};
    if (!reason.empty()) j["reason"] = reason;
    out << j.dump(2) << "\n";
  } else {
    out << chain.name << (a.inverse ? " (inverse)" : "") << ": " << P.to_string() << " ->";
    for (const auto& q : pts) out << " " << q.to_string();
    if (!reason.empty()) out << " undefined: " << reason;
    out << "\n";
  }
}

struct PadicArgs {
  int k = 4;
};

void cmd_padic(const PadicArgs& a, const Config& cfg, std::ostream& out) {
  using namespace padic;
  if (a.k < 1 || a.k > 12) throw DomainError("--k must be in [1, 12]");
  const long p = 3;
  const int work = a.k + 12;
  const auto G = reference_curve();
  const auto model = monic_model(G);
  const curves::GroupPoint<FieldElement> P0 = curves::AffinePoint<FieldElement>{FieldElement(1), FieldElement(1)};
  const auto Q = from_monic(G, curves::group_mul(model, 3, to_monic(G, P0)));
  const auto zQ = z_of_point(Q, p, work);
  const auto g = to_ring(G, p, work);
  const auto ex = x_inverse_of_multiple(zQ, g, a.k);

  auto poly_json = [](const std::array<std::vector<Integer>, 3>& f) {
    json arr = json::array();
    for (std::size_t j = 0; j < f[0].size(); ++j)
      arr.push_back({f[0][j].get_str(), f[1][j].get_str(), f[2][j].get_str()});
    return arr;
  };
  auto bound_json = [](const StrassmannResult& s) {
    return json{{"bound", s.bound ? json(*s.bound) : json(nullptr)}, {"only_known_roots", s.only_known_roots}};
  };
  const auto zr = zQ.reduce(a.k);
  const auto lr = ex.log_z.reduce(a.k);
  json j{{"p", p},
         {"k", a.k},
         {"z_3P0", {zr[0].get_str(), zr[1].get_str(), zr[2].get_str()}},
         {"log_z", {lr[0].get_str(), lr[1].get_str(), lr[2].get_str()}},
         {"z_n", poly_json(ex.z_mod)},
         {"inv_x_n", poly_json(ex.phi)},
         {"case_a", bound_json(strassmann_zero_bound(ex.phi[2], p, a.k, 2))}};
  const RingElement zero = RingElement::zero(p, work), one(FieldElement(1), p, work);
  const std::vector<std::tuple<std::string, RingElement, RingElement, int>> cases{
      {"case_b", zero, zero, 2}, {"case_c_plus", one, one, 1}, {"case_c_minus", one, -one, 1}};
  for (const auto& [name, x0, y0, known] : cases) {
    const auto split = split_mod(addition_expansion(x0, y0, g, ex.z_n), a.k);
    j[name] = bound_json(strassmann_zero_bound(split[2], p, a.k, known));
    j[name]["expansion"] = poly_json(split);
  }

  if (fmt(cfg, "text") == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  auto show = [&](const std::array<std::vector<Integer>, 3>& f) {
    std::string s;
    for (std::size_t i = 0; i < f[0].size(); ++i) {
      if (f[0][i] == 0 && f[1][i] == 0 && f[2][i] == 0) continue;
      s += (s.empty() ? "" : " + ") + std::string("(") + f[2][i].get_str() + "a^2 + " + f[1][i].get_str() + "a + " +
           f[0][i].get_str() + ")n^" + std::to_string(i);
    }
    return s.empty() ? std::string("0") : s;
  };
  out << "mod 3^" << a.k << ", a^3 + a^2 - 1 = 0, coordinates (1, a, a^2)\n";
  out << "z(3P0)  = " << zQ.to_string() << "\n";
  out << "log z   = " << ex.log_z.to_string() << "\n";
  out << "z_n     = " << show(ex.z_mod) << "\n";
  out << "1/x_n   = " << show(ex.phi) << "\n";
  for (const char* name : {"case_a", "case_b", "case_c_plus", "case_c_minus"}) {
    const auto& b = j[name];
    out << name << ": Strassmann bound " << (b["bound"].is_null() ? "none" : b["bound"].dump())
        << (b["only_known_roots"].get<bool>() ? ", only n = 0" : "") << "\n";
  }
}

struct BoundArgs {
  std::string scaling_c = "1e60", n0 = "1e25";
  std::string curve = "W", gen = "(1,1)";
};

void cmd_bound(const BoundArgs& a, const Config& cfg, std::ostream& out) {
  const auto m = curve_arg(a.curve);
  if (!m.is_weierstrass()) throw DomainError("bound-reduce needs a Weierstrass model");
  const auto ctx = analytic::make_context(m.weierstrass(), cfg.digits);
  const auto psi = analytic::elliptic_log(ctx, curves::parse_point(a.gen));
  const analytic::BoundConstants K;
  const auto [A, B] = analytic::decay_pair(K);
  const auto r = analytic::reduce_multiplier_bound({parse_big(a.scaling_c), parse_big(a.n0), A, B, ctx.omega1, psi});
  const int shown = std::min(cfg.digits, 40);
  json j{{"omega1", analytic::to_string(ctx.omega1, shown)},
         {"psi", analytic::to_string(psi, shown)},
         {"X", {{r.X[0][0].get_str(), r.X[0][1].get_str()}, {r.X[1][0].get_str(), r.X[1][1].get_str()}}},
         {"Y", {{r.Y[0][0].get_str(), r.Y[0][1].get_str()}, {r.Y[1][0].get_str(), r.Y[1][1].get_str()}}},
         {"shortest_sq", r.shortest_sq.get_str()},
         {"lower_bound", analytic::to_string(r.lower_bound, 12)},
         {"N1", r.N1},
         {"david_log10_N0", analytic::david_bound_log10(K)}};
  if (fmt(cfg, "text") == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  out << "omega1       " << j["omega1"].get<std::string>() << "\n";
  out << "psi          " << j["psi"].get<std::string>() << "\n";
  out << "log10 N0     " << std::fixed << std::setprecision(3) << analytic::david_bound_log10(K) << "\n";
  out << "|b1|^2       " << r.shortest_sq.get_str() << "\n";
  out << "lower bound  " << j["lower_bound"].get<std::string>() << "\n";
  out << "N1           " << r.N1 << "\n";
}

struct SurfaceArgs {
  std::string gamma;
};

void cmd_surface(const SurfaceArgs& a, const Config& cfg, std::ostream& out) {
  const Poly res = param::section_residual();
  const Poly base = param::base_point_value();
  json j{{"a2", param::surface_a2().to_string("g")},
         {"a4", param::surface_a4().to_string("g")},
         {"a6", param::surface_a6().to_string("g")},
         {"section", "(-2g^2 + 2g, 0)"},
         {"section_residual", res.to_string("g")},
         {"section_on_model", res.is_zero()},
         {"base_point", "(0, g^2 - g)"},
         {"f3_at_c0", base.to_string("g")}};
  if (!a.gamma.empty()) {
    const auto f = param::surface_fiber(parse_q(a.gamma));
    j["fiber"] = {{"gamma", to_json(f.gamma)}, {"a2", to_json(f.a2)}, {"a4", to_json(f.a4)}, {"a6", to_json(f.a6)},
                  {"section_residual", to_json(res(f.gamma))}};
  }
  if (fmt(cfg, "text") == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const char* k : {"a2", "a4", "a6", "section_residual", "f3_at_c0"}) out << k << " = " << j[k].get<std::string>() << "\n";
  out << "section on model: " << (res.is_zero() ? "yes" : "no") << "\n";
  if (j.contains("fiber")) {
    const auto& fb = j["fiber"];
    out << "fiber at gamma = " << fb["gamma"].get<std::string>() << ": y^2 = x^3 + (" << fb["a2"].get<std::string>()
        << ")x^2 + (" << fb["a4"].get<std::string>() << ")x + (" << fb["a6"].get<std::string>() << ")\n";
  }
}

int cmd_reproduce(const std::string& suite, const Config& cfg, std::ostream& out) {
  const auto rows = run_suite(suite, {cfg.threads, cfg.digits});
  const auto f = fmt(cfg, "text");
  bool all = true;
  json arr = json::array();
  for (const auto& r : rows) {
    all = all && r.pass();
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"observed", c.observed}, {"expected", c.expected}});
    arr.push_back({{"criterion", r.id}, {"suite", r.suite}, {"title", r.title}, {"pass", r.pass()},
                   {"seconds", r.seconds}, {"checks", std::move(checks)}});
  }
  if (f == "json") {
    out << arr.dump(2) << "\n";
  } else if (f == "csv") {
    out << "criterion,suite,check,pass,observed,expected\n";
    for (const auto& r : rows)
      for (const auto& c : r.checks) {
        auto quote = [](std::string s) {
          std::string q = "\"";
          for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        };
        print_csv_row(out, {std::to_string(r.id), r.suite, quote(c.name), c.pass ? "pass" : "FAIL", quote(c.observed),
                            quote(c.expected)});
      }
  } else {
    for (const auto& r : rows) {
      out << (r.pass() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.suite << ": " << r.title << " ("
          << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
      for (const auto& c : r.checks)
        out << "        " << (c.pass ? "ok  " : "FAIL") << " " << c.name << ": " << c.observed << " [expected "
            << c.expected << "]\n";
    }
  }
  return all ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois certificates and curve computations for iterates of (x - gamma)^2 + c", "arboreal"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--threads", cfg.threads, "worker threads for scans and searches")->check(CLI::Range(1, 1024));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision", cfg.digits, "decimal digits for real computations")
      ->check(CLI::Range(10, analytic::kMaxDigits));
  app.add_option("--cache", cfg.cache_path, "factor cache file (default: $ARBOREAL_CACHE)");
  app.add_option("--trial-bound", cfg.trial_bound, "trial division bound for factoring");
  app.add_option("--rho-iterations", cfg.rho_iterations, "Pollard rho iterations per attempt");

  OrbitArgs orbit;
  auto* s_orbit = app.add_subcommand("orbit", "critical orbit f(gamma), ..., f^n(gamma)");
  s_orbit->add_option("--gamma", orbit.gamma);
  s_orbit->add_option("--c", orbit.c)->required();
  s_orbit->add_option("--depth", orbit.depth);

  GaloisArgs gal;
  auto* s_galois = app.add_subcommand("galois", "level-by-level maximality certificate");
  s_galois->add_option("--gamma", gal.gamma);
  s_galois->add_option("--c", gal.c)->required();
  s_galois->add_option("--depth", gal.depth)->check(CLI::Range(2, 6));

  ScanArgs scan;
  auto* s_scan = app.add_subcommand("scan", "integers c with a small n-th iterate");
  s_scan->add_option("--gamma", scan.gamma);
  s_scan->add_option("--integers", scan.integers, "lo:hi")->required();
  s_scan->add_option("--depth", scan.depth)->check(CLI::Range(2, 4));

  PointsArgs pts;
  auto* s_points = app.add_subcommand("curve-points", "rational points of bounded height");
  s_points->add_option("--curve", pts.curve, "equation or catalog name")->required();
  s_points->add_option("--height", pts.height)->check(CLI::Range(1L, 100000L));

  IntegralArgs integ;
  auto* s_integral = app.add_subcommand("integral-points", "integral points among multiples of a generator");
  s_integral->add_option("--curve", integ.curve)->required();
  s_integral->add_option("--gen", integ.gen)->required();
  s_integral->add_option("--max-mult", integ.max_mult)->check(CLI::Range(0, 10000));

  ChainArgs chain;
  auto* s_chain = app.add_subcommand("map-chain", "push a point through a birational map chain");
  s_chain->add_option("--chain", chain.chain, "e1, e2, c3 or gamma1")->required();
  s_chain->add_option("--point", chain.point)->required();
  s_chain->add_flag("--inverse", chain.inverse, "pull back from the target model");

  PadicArgs padic;
  auto* s_padic = app.add_subcommand("padic-verify", "3-adic formal group computation and Strassmann bounds");
  s_padic->add_option("--k", padic.k, "work modulo 3^k");

  BoundArgs bound;
  auto* s_bound = app.add_subcommand("bound-reduce", "elliptic logarithm and multiplier bound reduction");
  s_bound->add_option("--scaling-c", bound.scaling_c);
  s_bound->add_option("--n0", bound.n0);
  s_bound->add_option("--curve", bound.curve);
  s_bound->add_option("--gen", bound.gen);

  SurfaceArgs surf;
  auto* s_surface = app.add_subcommand("surface", "elliptic surface coefficients and section residual");
  s_surface->add_option("--gamma", surf.gamma);

  std::string suite = "all";
  auto* s_repro = app.add_subcommand("reproduce", "run a reproduction suite");
  std::vector<std::string> suites{"all"};
  suites.insert(suites.end(), suite_names().begin(), suite_names().end());
  s_repro->add_option("suite", suite)->check(CLI::IsMember(suites));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (cfg.cache_path.empty()) {
    if (const char* env = std::getenv("ARBOREAL_CACHE")) cfg.cache_path = env;
  }
  arith::FactorBudget budget;
  budget.trial_bound = cfg.trial_bound;
  budget.rho_iterations = cfg.rho_iterations;
  arith::FactorCache cache(budget);

  try {
    if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path)) cache.load(cfg.cache_path);
    int code = kOk;
    if (*s_orbit) {
      cmd_orbit(orbit, cfg, out);
    } else if (*s_galois) {
      cmd_galois(gal, cfg, cache, out);
    } else if (*s_scan) {
      cmd_scan(scan, cfg, cache, out);
    } else if (*s_points) {
      cmd_curve_points(pts, cfg, out);
    } else if (*s_integral) {
      cmd_integral_points(integ, cfg, out);
    } else if (*s_chain) {
      cmd_map_chain(chain, cfg, out);
    } else if (*s_padic) {
      cmd_padic(padic, cfg, out);
    } else if (*s_bound) {
      cmd_bound(bound, cfg, out);
    } else if (*s_surface) {
      cmd_surface(surf, cfg, out);
    } else if (*s_repro) {
      code = cmd_reproduce(suite, cfg, out);
    }
    if (!cfg.cache_path.empty()) cache.save(cfg.cache_path);
    return code;
  } catch (const UnknownResult& u) {
    if (!cfg.cache_path.empty()) cache.save(cfg.cache_path);
    err << "unknown: " << u.what << "\n";
    return kUnknown;
  } catch (const InexactClassError& e) {
    err << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace arboreal::cli
