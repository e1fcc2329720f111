#include "polyspec/asymptotics.hpp"

#include "polyspec/kernels.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace polyspec {

ConeDomain::ConeDomain(std::size_t r, double alpha, double L, double delta)
    : r_(r), alpha_(alpha), L_(L), delta_(delta) {
  if (!(delta > 0 && 2 * delta < alpha && alpha < 1)) {
    throw std::invalid_argument("cone parameters must satisfy 0 < 2 delta < alpha < 1");
  }
  if (!(L > 0) || !std::isfinite(L)) throw std::invalid_argument("cone parameter L must be positive");
}

bool cone_contains(const ConeDomain& k, const Frequency& xi) {
  const std::size_t d = xi.size();
  const std::size_t r = k.r();
  if (d <= r) return false;
  RationalVector x = xi.to_rational();
  for (auto& c : x) c = abs(c);
  const Rational alpha = rational_from_double(k.alpha());
  const Rational two_delta = 2 * rational_from_double(k.delta());
  for (std::size_t j = 0; j < r; ++j) {
    if (x[j] > alpha * x[r]) return false;
  }
  if (rational_from_double(k.L()) > x[r]) return false;
  for (std::size_t j = r; j + 1 < d; ++j) {
    if (x[j] > two_delta * x[j + 1]) return false;
  }
  return true;
}

std::vector<Frequency> sample_cone(const ConeDomain& k, std::size_t d, std::size_t count, MagnitudeRange range,
                                   std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("sample count must be at least 1");
  if (d <= k.r()) throw std::invalid_argument("cone rank must be below the dimension");
  const double lo = std::max(k.L(), range.lo);
  const double hi = range.hi;
  if (!(hi >= lo) || !std::isfinite(hi)) throw std::invalid_argument("empty feasible magnitude range");

  // Margins keep rounded doubles strictly inside the exact inequalities.
  constexpr double shrink = 1.0 - 0x1p-30;
  constexpr double grow = 1.0 + 0x1p-30;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_sign = [&] { return unit(rng) < 0.5 ? -1.0 : 1.0; };

  std::vector<Frequency> out;
  out.reserve(count);
  const std::size_t r = k.r();
  while (out.size() < count) {
    std::vector<double> x(d, 0.0);
    double m = std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
    m = std::clamp(m, lo, hi);
    x[r] = random_sign() * m;
    for (std::size_t j = 0; j < r; ++j) x[j] = (2 * unit(rng) - 1) * k.alpha() * m * shrink;
    double prev = m;
    for (std::size_t j = r + 1; j < d; ++j) {
      const double base = prev / (2 * k.delta());
      const double mag = base * (1.0 + unit(rng)) * grow;
      x[j] = random_sign() * mag;
      prev = mag;
    }
    Frequency f = Frequency::exact([&] {
      RationalVector q;
      for (double v : x) q.push_back(rational_from_double(v));
      return q;
    }());
    if (cone_contains(k, f)) out.push_back(std::move(f));
  }
  return out;
}

StandardizedFlag standardize_flag(const Polytope& a, const Flag& flag) {
  const std::size_t d = flag.ambient_dim();
  const std::size_t r = flag.r();
  if (a.dim() != d) throw GeometryError("flag and polytope dimensions differ");
  std::vector<RationalVector> columns = flag.subspace(r).basis().rows;
  for (std::size_t j = r; j < d; ++j) columns.push_back(flag.normal_rational(j));
  Matrix inv(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < d; ++i) inv[i][c] = columns[c][i];
  }
  auto m = inverse(inv);
  if (!m) throw GeometryError("flag basis is singular");
  LinearMap map(*m);
  Polytope image = apply_linear(a, map);
  return {map, std::move(image), Flag::standard(d, r)};
}

namespace {

double residual_from(const ComplexValue& indicator, const ComplexValue& measure, const Frequency& xi,
                     std::size_t r) {
  const Quad two_pi = 2 * Quad("3.14159265358979323846264338327950288419716939937510");
  Quad re = indicator.re;
  Quad im = indicator.im;
  const bool exact = xi.is_exact();
  for (std::size_t j = r; j < xi.size(); ++j) {
    const Quad x = exact ? to_real<Quad>(xi.rational()[j]) : Quad(xi.approx()[j]);
    // (re + i im) * (-2 pi i x) = 2 pi x im - i 2 pi x re
    const Quad f = two_pi * x;
    const Quad nre = f * im;
    const Quad nim = -f * re;
    re = nre;
    im = nim;
  }
  const Quad dr = re - measure.re;
  const Quad di = im - measure.im;
  return static_cast<double>(sqrt(dr * dr + di * di));
}

}  // namespace

double main_term_residual(const Polytope& a, const Flag& standard_flag, const Frequency& xi,
                          const Precision& precision) {
  if (!standard_flag.is_standard()) throw GeometryError("flag is not in standard position");
  if (standard_flag.r() >= a.dim()) throw GeometryError("main term needs r < d");
  const auto one = ft_indicator(a, xi, precision);
  const auto mu = ft_flag_measure(a, standard_flag, xi, precision);
  return residual_from(one, mu, xi, standard_flag.r());
}

MainTermSchedule MainTermSchedule::standard() {
  MainTermSchedule s;
  for (int e = 0; e <= 20; ++e) s.c_values.push_back(std::ldexp(1.0, -e));
  s.alphas = {0.25, 0.125, 0.0625, 0.03125};
  return s;
}

MainTermReport verify_main_term(const Polytope& a, const Flag& flag, double eta, const MainTermSchedule& schedule) {
  if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
  const std::size_t d = a.dim();
  const std::size_t r = flag.r();
  if (r >= d) throw GeometryError("main term needs r < d");

  const auto std_flag = standardize_flag(a, flag);
  const auto indicator = MeasurePlan::indicator(std_flag.polytope);
  const auto measure = MeasurePlan::from_measure(flag_measure(std_flag.polytope, std_flag.flag));

  MainTermReport report;
  report.eta = eta;
  for (double alpha : schedule.alphas) {
    for (double c : schedule.c_values) {
      const double delta = c * eta;
      const double L = 1.0 / (c * eta);
      if (!(delta > 0 && 2 * delta < alpha && alpha < 1)) continue;
      const ConeDomain k(r, alpha, L, delta);
      const auto xis = sample_cone(k, d, schedule.samples, {L, L * std::pow(10.0, schedule.decades)}, schedule.seed);
      const auto ones = evaluate_batch(indicator, xis, schedule.precision);
      const auto mus = evaluate_batch(measure, xis, schedule.precision);

      std::size_t worst = 0;
      double max_res = -1;
      for (std::size_t i = 0; i < xis.size(); ++i) {
        const double res = residual_from(ones[i], mus[i], xis[i], r);
        if (res > max_res) {
          max_res = res;
          worst = i;
        }
      }
      ++report.configurations_tried;
      report.alpha_used = alpha;
      report.delta_used = delta;
      report.L_used = L;
      report.samples = xis.size();
      report.max_residual = max_res;
      report.witness = xis[worst];
      if (max_res < eta) {
        report.pass = true;
        report.empirical_c = c;
        return report;
      }
    }
  }
  return report;
}

namespace {

// Fractional part of an exact rational, in [0, 1).
Rational frac(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - fl;
}

double dist_to_integer(const TrigPoly::Term& term, long t) {
  if (term.tau_exact) {
    const Rational f = frac(*term.tau_exact * t);
    const Rational d = f <= Rational(1, 2) ? f : Rational(1) - f;
    return d.get_d();
  }
  const long double x = static_cast<long double>(term.tau) * t;
  return static_cast<double>(std::fabs(x - std::nearbyint(x)));
}

}  // namespace

std::complex<double> TrigPoly::eval(double t) const {
  std::complex<double> sum = 0;
  for (const auto& term : terms) {
    double turns;
    if (term.tau_exact) {
      turns = frac(*term.tau_exact * rational_from_double(t)).get_d();
    } else {
      const long double x = static_cast<long double>(term.tau) * t;
      turns = static_cast<double>(x - std::floor(x));
    }
    const double theta = 2 * std::numbers::pi * turns;
    sum += term.c * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return sum;
}

double TrigPoly::coefficient_mass() const {
  double s = 0;
  for (const auto& t : terms) s += std::abs(t.c);
  return s;
}

TrigPoly trig_poly(const Polytope& a, const Flag& standard_flag, const Rational& delta) {
  const std::size_t d = a.dim();
  const std::size_t r = standard_flag.r();
  if (!standard_flag.is_standard()) throw GeometryError("flag is not in standard position");
  if (r < 1 || r >= d) throw GeometryError("trig_poly needs 1 <= r <= d-1");
  if (sgn(delta) <= 0) throw std::invalid_argument("delta must be positive");

  std::map<Rational, Rational> by_tau;
  for (const auto& [face, coeff] : flag_measure(a, standard_flag).cancelled()) {
    // The face lies in a translate of span(e_1..e_r): its volume is the
    // determinant of the first r edge coordinates, and x_j (j > r) is fixed.
    const Matrix e = face.edge_matrix();
    Matrix head(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) head[i][j] = e[i][j];
    }
    Rational vol = abs(determinant(head));
    for (std::size_t k = 2; k <= r; ++k) vol /= static_cast<long>(k);

    Rational tau = 0;
    Rational power = 1;  // delta^{d-1-j} for 0-based j, filled from the top
    for (std::size_t j = d; j-- > r;) {
      tau -= face.vertex(0)[j] * power;
      power *= delta;
    }
    by_tau[tau] += vol * coeff;
  }

  TrigPoly p;
  for (const auto& [tau, c] : by_tau) {
    if (sgn(c) == 0) continue;
    p.terms.push_back({std::complex<double>(c.get_d(), 0.0), tau.get_d(), c, tau});
  }
  return p;
}

std::vector<long> almost_periods(const TrigPoly& p, double eta, long t_max) {
  if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
  if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");
  std::vector<long> out;
  const double mass = p.coefficient_mass();
  if (mass == 0) {
    for (long t = 0; t <= t_max; ++t) out.push_back(t);
    return out;
  }
  const double bound = eta / (4 * std::numbers::pi * mass);
  for (long t = 0; t <= t_max; ++t) {
    bool ok = true;
    for (const auto& term : p.terms) {
      if (dist_to_integer(term, t) >= bound) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace polyspec
