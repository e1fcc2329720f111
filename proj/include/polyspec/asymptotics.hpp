#pragma once

#include "polyspec/fourier.hpp"
#include "polyspec/hadwiger.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace polyspec {

/// K(r, alpha, L, delta): frequencies whose coordinates beyond r grow
/// geometrically (|xi_j| <= 2 delta |xi_{j+1}|) while the first r stay
/// within alpha |xi_{r+1}|, and |xi_{r+1}| >= L. Coordinates are 1-based in
/// these descriptions.
class ConeDomain {
 public:
  /// Requires 0 < 2 delta < alpha < 1 and L > 0.
  ConeDomain(std::size_t r, double alpha, double L, double delta);
  std::size_t r() const { return r_; }
  double alpha() const { return alpha_; }
  double L() const { return L_; }
  double delta() const { return delta_; }

 private:
  std::size_t r_;
  double alpha_, L_, delta_;
};

/// Exact test of the three defining inequalities (parameters are read as
/// the exact rationals their doubles represent).
bool cone_contains(const ConeDomain& k, const Frequency& xi);

struct MagnitudeRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Deterministic samples inside K, in R^d. |xi_{r+1}| is log-uniform on
/// [max(L, lo), hi] with a random sign; the first r coordinates are uniform
/// in their allowed interval; each later |xi_j| is uniform on
/// [|xi_{j-1}| / (2 delta), 2 |xi_{j-1}| / (2 delta)] with a random sign.
/// Samples are exact frequencies (the generated doubles, read exactly).
std::vector<Frequency> sample_cone(const ConeDomain& k, std::size_t d, std::size_t count, MagnitudeRange range,
                                   std::uint64_t seed);

struct StandardizedFlag {
  LinearMap map;
  Polytope polytope;  // apply_linear(A, map)
  Flag flag;          // Flag::standard(d, r)
};

/// M sends V_j onto span(e_1..e_j) and u_j to e_{j+1}, so the negative side
/// of each step lands on {x_{j+1} > 0} as in the standard flag.
StandardizedFlag standardize_flag(const Polytope& a, const Flag& flag);

/// |1_A^(xi) * prod_{j>r} (-2 pi i xi_j) - mu_r^(xi)| for a standard flag.
double main_term_residual(const Polytope& a, const Flag& standard_flag, const Frequency& xi,
                          const Precision& precision = {});

struct MainTermSchedule {
  std::vector<double> c_values;  // default 1, 1/2, ..., 2^-20
  std::vector<double> alphas;    // default 1/4, 1/8, 1/16, 1/32
  std::size_t samples = 1000;
  double decades = 3.0;          // |xi_{r+1}| in [L, L * 10^decades]
  std::uint64_t seed = 1;
  Precision precision;

  static MainTermSchedule standard();
};

struct MainTermReport {
  double eta = 0.0;
  double alpha_used = 0.0;
  double delta_used = 0.0;
  double L_used = 0.0;
  std::size_t samples = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::optional<double> empirical_c;
  Frequency witness;         // sample with the largest residual
  std::size_t configurations_tried = 0;
};

/// Searches alphas (outer) and c (inner, largest first) with delta = c eta,
/// L = 1 / (c eta) for a configuration whose maximal residual over the
/// samples is below eta. On failure the last configuration tried is reported.
MainTermReport verify_main_term(const Polytope& a, const Flag& flag, double eta,
                                const MainTermSchedule& schedule = MainTermSchedule::standard());

/// p(t) = sum_k c_k exp(2 pi i tau_k t).
struct TrigPoly {
  struct Term {
    std::complex<double> c;
    double tau = 0.0;
    std::optional<Rational> c_exact;    // real coefficient, when known exactly
    std::optional<Rational> tau_exact;
  };
  std::vector<Term> terms;

  std::complex<double> eval(double t) const;
  double coefficient_mass() const;  // sum |c_k|
};

/// mu_r^(t v) with v = sum_{j>r} delta^{d-j} e_j, as an exact exponential
/// sum: each face parallel to V_r sits at fixed coordinates x_j (j > r), so
/// it contributes c = +-Vol_r(face) at tau = -sum_{j>r} x_j delta^{d-j}.
/// Equal taus are merged and zero coefficients dropped.
TrigPoly trig_poly(const Polytope& a, const Flag& standard_flag, const Rational& delta);

/// Integers t in [0, t_max] with dist(tau_k t, Z) < eta / (4 pi sum|c_k|)
/// for every k. Any two such t, t' satisfy |p(t' - t) - p(0)| < eta.
/// With p == 0 every integer in range is returned.
std::vector<long> almost_periods(const TrigPoly& p, double eta, long t_max);

}  // namespace polyspec
