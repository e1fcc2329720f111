// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and time limits are fixed below.

#include "oracles.hpp"

#include "polyspec/asymptotics.hpp"
#include "polyspec/cli.hpp"
#include "polyspec/equidecomp.hpp"
#include "polyspec/fourier.hpp"
#include "polyspec/hadwiger.hpp"
#include "polyspec/shapes.hpp"
#include "polyspec/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace polyspec;
using oracle::Cx;

namespace {

constexpr double kMassTol = 1e-12;
constexpr double kStokesTol = 1e-10;
constexpr double kClosedFormTol = 1e-12;
constexpr double kSpectrumTol = 1e-9;
constexpr double kMainTermEta = 0.05;
constexpr double kSquareResidualTol = 1e-12;
constexpr double kTrigAtZeroTol = 1e-12;
constexpr double kTrigAlongLineTol = 1e-10;
constexpr double kAlmostPeriodEta = 0.1;
constexpr double kTriangulationTol = 1e-12;

const std::string kData = POLYSPEC_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Point P(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

Rational R(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

/// A floating frequency drawn uniformly from the ball of radius `radius`.
Frequency random_ball_xi(std::mt19937_64& rng, std::size_t d, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  while (true) {
    std::vector<double> x(d);
    double n2 = 0;
    for (auto& c : x) {
      c = u(rng);
      n2 += c * c;
    }
    if (n2 <= radius * radius) return Frequency::floating(x);
  }
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polyspec");
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Outcome cube_invariants() {
  Outcome o;
  for (std::size_t d : {2, 3}) {
    auto prof = invariant_profile(shapes::unit_cube(d));
    if (prof.entries.empty()) o.fail("no flags enumerated for d=" + std::to_string(d));
    for (const auto& e : prof.entries) {
      if (!e.value.is_zero()) o.fail("nonzero invariant at " + e.flag.key());
    }
    o.detail = o.pass ? "all zero over " + std::to_string(prof.entries.size()) + " flags (d=2,3)" : o.detail;
  }
  return o;
}

Outcome triangle_certificate() {
  Outcome o;
  auto prof = invariant_profile(shapes::standard_simplex(2));
  auto nz = prof.nonzero();
  if (nz.size() != 3) o.fail(std::to_string(nz.size()) + " nonzero invariants, expected 3");
  for (const auto& e : nz) {
    if (e.flag.r() != 1) o.fail("nonzero invariant on a non-1-flag");
    if (abs(e.value.rational_part) != 1) o.fail("|rational_part| = " + to_string(abs(e.value.rational_part)));
  }
  const int code = run_cli({"certify", kData + "/triangle.json"});
  if (code != 2) o.fail("certify exited " + std::to_string(code));
  if (o.pass) o.detail = "3 nonzero 1-flag invariants, |rational_part| = 1, certify exit 2";
  return o;
}

Outcome mass_identity() {
  Outcome o;
  std::mt19937_64 rng(2024);
  double worst = 0;
  std::size_t flags = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2 + i % 2;
    auto a = oracle::random_polytope(rng, d);
    for (std::size_t r = 1; r < d; ++r) {
      for (const auto& f : enumerate_flags(a, r)) {
        const double h = hadwiger_invariant(a, f).float_value;
        const double err = std::abs(ft_flag_measure(a, f, Frequency::zero(d)).value() - Cx(h, 0.0));
        worst = std::max(worst, err);
        ++flags;
        if (!(err < kMassTol)) o.fail("mass mismatch " + fmt(err) + " at " + f.key());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(flags) + " flags, max error " + fmt(worst);
  return o;
}

Outcome stokes() {
  Outcome o;
  std::mt19937_64 rng(31);
  double worst = 0;
  int cases = 0;
  while (cases < 200) {
    const std::size_t d = 2 + cases % 2;
    auto a = oracle::random_polytope(rng, d);
    const std::size_t k = 1 + rng() % d;
    std::vector<Flag> flags;
    if (k == d) {
      flags.push_back(Flag::full(d));
    } else {
      flags = enumerate_flags(a, k);
    }
    if (flags.empty()) continue;
    const Flag& f = flags[rng() % flags.size()];
    RationalVector v(d, Rational(0));
    for (const auto& row : f.subspace(k).basis().rows) v = v + scaled(row, oracle::random_rational(rng, -3, 3, 5));
    const Frequency xi = random_ball_xi(rng, d, 10.0);
    const double res = stokes_residual(a, f, v, xi);
    worst = std::max(worst, res);
    if (!(res < kStokesTol)) o.fail("residual " + fmt(res) + " at k=" + std::to_string(k));
    ++cases;
  }
  if (o.pass) o.detail = "200 cases, max residual " + fmt(worst);
  return o;
}

Outcome fourier_oracle() {
  Outcome o;
  std::mt19937_64 rng(5);
  struct Named {
    std::string name;
    Polytope a;
    int subdivisions;
  };
  const std::vector<Named> bodies{{"cube", shapes::unit_cube(3), 4},
                                  {"triangle", shapes::standard_simplex(2), 6},
                                  {"L-tromino", shapes::l_tromino(), 6}};
  double worst_ratio = 0;
  for (const auto& b : bodies) {
    for (int i = 0; i < 50; ++i) {
      const Frequency xi = random_ball_xi(rng, b.a.dim(), 5.0);
      const auto exact = ft_indicator(b.a, xi).value();
      const auto q = quadrature_oracle(b.a, xi, b.subdivisions);
      const double gap = std::abs(exact - q.estimate.value());
      worst_ratio = std::max(worst_ratio, gap / q.error_bound);
      if (!(gap <= q.error_bound)) o.fail(b.name + ": gap " + fmt(gap) + " exceeds bound " + fmt(q.error_bound));
    }
  }
  // Closed form for the cube, with degenerate frequencies mixed in.
  double worst_closed = 0;
  auto cube = shapes::unit_cube(3);
  for (int i = 0; i < 50; ++i) {
    RationalVector x = oracle::random_vector(rng, 3, -5, 5, 7);
    for (auto& c : x) {
      if (rng() % 3 == 0) c = 0;
    }
    const auto got = ft_indicator(cube, Frequency::exact(x)).value();
    const double err = std::abs(got - oracle::box_ft({0, 0, 0}, {1, 1, 1}, x));
    worst_closed = std::max(worst_closed, err);
    if (!(err < kClosedFormTol)) o.fail("cube closed form off by " + fmt(err));
  }
  for (const auto& x : {RationalVector{0, 0, 0}, RationalVector{0, 0, 3}, RationalVector{0, R(1, 2), 0}}) {
    const double err = std::abs(ft_indicator(cube, Frequency::exact(x)).value() - oracle::box_ft({0, 0, 0}, {1, 1, 1}, x));
    worst_closed = std::max(worst_closed, err);
    if (!(err < kClosedFormTol)) o.fail("cube closed form off by " + fmt(err) + " at an axis frequency");
  }
  if (o.pass) {
    o.detail = "max gap/bound " + fmt(worst_ratio) + ", cube closed form max error " + fmt(worst_closed);
  }
  return o;
}

Outcome spectrum_check() {
  Outcome o;
  for (std::size_t d : {2, 3}) {
    std::vector<RationalVector> pts;
    const std::size_t n = d == 2 ? 16 : 64;
    for (std::size_t idx = 0; idx < n; ++idx) {
      RationalVector p;
      std::size_t rest = idx;
      for (std::size_t j = 0; j < d; ++j) {
        p.emplace_back(static_cast<long>(rest % 4));
        rest /= 4;
      }
      pts.push_back(p);
    }
    auto cube = shapes::unit_cube(d);
    auto clean = orthogonality_report(cube, SpectrumCandidate(pts), kSpectrumTol);
    if (!clean.violations.empty()) {
      o.fail(std::to_string(clean.violations.size()) + " violations on the lattice, d=" + std::to_string(d));
    }
    pts[5][0] += R(1, 2);
    auto moved = orthogonality_report(cube, SpectrumCandidate(pts), kSpectrumTol);
    if (moved.violations.empty()) o.fail("perturbed lattice passes, d=" + std::to_string(d));
    if (o.pass && d == 3) {
      o.detail = "lattice clean; perturbed point gives " + std::to_string(moved.violations.size()) + " violations (d=3)";
    }
  }
  return o;
}

Outcome main_term() {
  Outcome o;
  auto check = [&](const std::string& name, const Polytope& a, const Flag& f) {
    auto rep = verify_main_term(a, f, kMainTermEta);
    if (!rep.pass) o.fail(name + " fails, max residual " + fmt(rep.max_residual));
    return rep;
  };
  auto sq = check("square", shapes::unit_cube(2), Flag::standard(2, 1));
  if (!(sq.max_residual < kSquareResidualTol)) o.fail("square residual " + fmt(sq.max_residual));
  auto tri = shapes::standard_simplex(2);
  const auto tri_flags = enumerate_flags(tri, 1);
  for (const auto& f : tri_flags) check("triangle " + f.key(), tri, f);
  auto cube = shapes::unit_cube(3);
  std::size_t cube_flags = 0;
  for (std::size_t r : {1, 2}) {
    for (const auto& f : enumerate_flags(cube, r)) {
      check("cube " + f.key(), cube, f);
      ++cube_flags;
    }
  }
  if (o.pass) {
    o.detail = "square residual " + fmt(sq.max_residual) + "; " + std::to_string(tri_flags.size()) +
               " triangle flags, " + std::to_string(cube_flags) + " cube flags pass at eta 0.05";
  }
  return o;
}

Outcome trig_identities() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ut(-50, 50);
  const Rational delta = R(1, 3);
  std::vector<std::pair<std::string, StandardizedFlag>> cases;
  cases.emplace_back("square", standardize_flag(shapes::unit_cube(2), Flag::standard(2, 1)));
  auto tri = shapes::standard_simplex(2);
  for (const auto& f : enumerate_flags(tri, 1)) cases.emplace_back("triangle " + f.key(), standardize_flag(tri, f));
  std::size_t periods = 0;
  for (const auto& [name, sf] : cases) {
    const auto& a = sf.polytope;
    auto p = trig_poly(a, sf.flag, delta);
    const double h = hadwiger_invariant(a, sf.flag).float_value;
    if (!(std::abs(p.eval(0) - Cx(h, 0.0)) < kTrigAtZeroTol)) o.fail(name + ": p(0) differs from H");
    const RationalVector v{0, 1};
    for (int i = 0; i < 50; ++i) {
      const double t = ut(rng);
      const auto direct = ft_flag_measure(a, sf.flag, Frequency::exact(scaled(v, rational_from_double(t)))).value();
      const double err = std::abs(p.eval(t) - direct);
      if (!(err < kTrigAlongLineTol)) o.fail(name + ": p(t) off by " + fmt(err));
    }
    auto ts = almost_periods(p, kAlmostPeriodEta, 999);
    periods += ts.size();
    for (long t : ts) {
      for (long u : ts) {
        if (!(std::abs(p.eval(static_cast<double>(u - t)) - p.eval(0)) < kAlmostPeriodEta)) {
          o.fail(name + ": pairwise bound fails at " + std::to_string(t) + ", " + std::to_string(u));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " polynomials, " + std::to_string(periods) + " almost periods";
  return o;
}

Outcome equidecomp_verdicts() {
  Outcome o;
  if (!translation_equidecomposable(shapes::l_tromino(), shapes::box({0, 0}, {3, 1})).equidecomposable) {
    o.fail("L-tromino vs 3x1 rectangle judged different");
  }
  // A square of area 1/2 with rational vertices, rotated by 45 degrees.
  Polytope diamond(2, {Simplex({P({0, 0}), Point{R(1, 2), R(1, 2)}, P({0, 1})}),
                       Simplex({P({0, 0}), P({0, 1}), Point{R(-1, 2), R(1, 2)}})});
  auto tri = translation_equidecomposable(shapes::standard_simplex(2), diamond);
  if (tri.volume_a != tri.volume_b) o.fail("triangle and square areas differ");
  if (tri.equidecomposable) o.fail("triangle judged equidecomposable to a square");
  if (tri.witnesses.empty()) o.fail("no witnesses for the triangle");
  std::mt19937_64 rng(77);
  for (int i = 0; i < 6; ++i) {
    const std::size_t d = 2 + i % 2;
    auto a = oracle::random_polytope(rng, d);
    if (!translation_equidecomposable(a, a.translated(oracle::random_vector(rng, d, -9, 9, 13))).equidecomposable) {
      o.fail("A and a translate judged different");
    }
  }
  if (o.pass) o.detail = "tromino true, triangle/square false with " + std::to_string(tri.witnesses.size()) +
                         " witnesses, 6 translates true";
  return o;
}

Outcome triangulation_independence() {
  Outcome o;
  Polytope main_diag(2, {Simplex({P({0, 0}), P({1, 0}), P({1, 1})}), Simplex({P({0, 0}), P({1, 1}), P({0, 1})})});
  Polytope anti_diag(2, {Simplex({P({0, 0}), P({1, 0}), P({0, 1})}), Simplex({P({1, 0}), P({1, 1}), P({0, 1})})});
  auto a = invariant_profile(main_diag);
  auto b = invariant_profile(anti_diag);
  // Profiles are compared as maps from flag to value; a flag missing on one
  // side must carry a zero value on the other.
  auto covered = [&](const InvariantProfile& x, const InvariantProfile& y) {
    for (const auto& e : x.entries) {
      const auto* other = y.find(e.flag);
      const Rational theirs = other ? other->value.rational_part : Rational(0);
      if (theirs != e.value.rational_part) o.fail("profiles differ at " + e.flag.key());
    }
  };
  covered(a, b);
  covered(b, a);
  std::mt19937_64 rng(10);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const Frequency xi = random_ball_xi(rng, 2, 10.0);
    const double err = std::abs(ft_indicator(main_diag, xi).value() - ft_indicator(anti_diag, xi).value());
    worst = std::max(worst, err);
    if (!(err < kTriangulationTol)) o.fail("transforms differ by " + fmt(err));
  }
  if (o.pass) o.detail = "profiles equal, max transform gap " + fmt(worst);
  return o;
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"cube invariants vanish", 1, cube_invariants},
      {"triangle certificate", 1, triangle_certificate},
      {"mass identity", 30, mass_identity},
      {"Stokes identity", 60, stokes},
      {"Fourier oracle equivalence", 120, fourier_oracle},
      {"spectrum check", 30, spectrum_check},
      {"main-term verification", 120, main_term},
      {"trig-poly identities", 30, trig_identities},
      {"equidecomposability verdicts", 10, equidecomp_verdicts},
      {"triangulation independence", 5, triangulation_independence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) o.fail("took " + fmt(secs) + " s, limit " + fmt(c.limit_seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu %-30s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
