#include "polyspec/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace polyspec {

namespace {

struct NeedsEscalation {};

constexpr double kDegeneracyThreshold = 1e-12;

template <class Real>
Real pi() {
  if constexpr (std::is_same_v<Real, Quad>) {
    static const Quad value("3.14159265358979323846264338327950288419716939937510");
    return value;
  } else {
    return std::numbers::pi_v<Real>;
  }
}

template <class Real>
struct Complex {
  Real re = 0;
  Real im = 0;
};

/// Neumaier-compensated complex accumulator.
template <class Real>
class CompensatedSum {
 public:
  void add(const Complex<Real>& z) {
    add_part(sum_.re, comp_.re, z.re);
    add_part(sum_.im, comp_.im, z.im);
  }
  Complex<Real> value() const { return {sum_.re + comp_.re, sum_.im + comp_.im}; }

 private:
  static void add_part(Real& sum, Real& comp, const Real& x) {
    using std::abs;
    Real t = sum + x;
    if (abs(sum) >= abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  Complex<Real> sum_;
  Complex<Real> comp_;
};

/// exp(-2 pi i q) after exact reduction of q to [-1/2, 1/2).
template <class Real>
Complex<Real> unit_phase(const Rational& q) {
  Integer n;
  Rational shifted = q + Rational(1, 2);
  mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational frac = q - Rational(n);
  using std::cos;
  using std::sin;
  Real angle = -2 * pi<Real>() * to_real<Real>(frac);
  return {cos(angle), sin(angle)};
}

template <class Real>
Complex<Real> unit_phase(const Real& phase) {
  using std::cos;
  using std::round;
  using std::sin;
  Real frac = phase - round(phase);
  Real angle = -2 * pi<Real>() * frac;
  return {cos(angle), sin(angle)};
}

// Face average G for an exact frequency.
template <class Real>
Complex<Real> face_average_exact(const MeasurePlan::Face& face, const RationalVector& xi) {
  const std::size_t n = face.vertices.size();
  std::vector<Rational> phase(n);
  for (std::size_t i = 0; i < n; ++i) phase[i] = dot(xi, face.vertices[i]);

  std::vector<Complex<Real>> g(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < g.size(); ++mask) {
    const auto& sub = face.subsets[mask];
    const std::size_t k = sub.idx.size() - 1;
    if (k == 0) {
      g[mask] = unit_phase<Real>(phase[sub.idx[0]]);
      continue;
    }
    RationalVector b(k);
    bool degenerate = true;
    for (std::size_t m = 1; m <= k; ++m) {
      b[m - 1] = phase[sub.idx[m]] - phase[sub.idx[0]];
      if (sgn(b[m - 1]) != 0) degenerate = false;
    }
    if (degenerate) {
      g[mask] = g[std::size_t{1} << sub.idx[0]];
      continue;
    }
    RationalVector c = sub.gram_inverse * b;
    Rational vsq = dot(c, b);
    Rational c0 = 0;
    for (const auto& x : c) c0 -= x;
    CompensatedSum<Real> acc;
    for (std::size_t m = 0; m <= k; ++m) {
      const Rational& grad = m == 0 ? c0 : c[m - 1];
      if (sgn(grad) == 0) continue;
      Real coef = to_real<Real>(Rational(grad * static_cast<unsigned long>(k)) / vsq);
      const auto& sub_g = g[mask ^ (std::size_t{1} << sub.idx[m])];
      acc.add({coef * sub_g.re, coef * sub_g.im});
    }
    // divide by 2 pi i
    Complex<Real> s = acc.value();
    Real inv = 1 / (2 * pi<Real>());
    g[mask] = {s.im * inv, -s.re * inv};
  }
  return g.back();
}

// Face average G for a floating frequency; throws NeedsEscalation near
// degenerate configurations.
template <class Real>
Complex<Real> face_average_float(const MeasurePlan::Face& face, const std::vector<Real>& xi, const Real& xi_norm) {
  const std::size_t n = face.vertices.size();
  const std::size_t d = xi.size();
  std::vector<std::vector<Real>> x(n, std::vector<Real>(d));
  std::vector<Real> phase(n, Real(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      x[i][c] = to_real<Real>(face.vertices[i][c]);
      phase[i] += xi[c] * x[i][c];
    }
  }
  const bool zero_xi = xi_norm == 0;

  std::vector<Complex<Real>> g(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < g.size(); ++mask) {
    const auto& sub = face.subsets[mask];
    const std::size_t k = sub.idx.size() - 1;
    if (k == 0) {
      g[mask] = unit_phase<Real>(phase[sub.idx[0]]);
      continue;
    }
    if (zero_xi) {
      g[mask] = g[std::size_t{1} << sub.idx[0]];
      continue;
    }
    std::vector<Real> b(k, Real(0));
    for (std::size_t m = 1; m <= k; ++m) {
      for (std::size_t c = 0; c < d; ++c) {
        b[m - 1] += xi[c] * to_real<Real>(face.vertices[sub.idx[m]][c] - face.vertices[sub.idx[0]][c]);
      }
    }
    std::vector<Real> c(k, Real(0));
    Real vsq = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) c[i] += to_real<Real>(sub.gram_inverse[i][j]) * b[j];
      vsq += c[i] * b[i];
    }
    using std::sqrt;
    if (!(vsq > 0) || sqrt(vsq) < kDegeneracyThreshold * xi_norm) throw NeedsEscalation{};
    Real c0 = 0;
    for (const auto& v : c) c0 -= v;
    CompensatedSum<Real> acc;
    for (std::size_t m = 0; m <= k; ++m) {
      Real coef = (m == 0 ? c0 : c[m - 1]) * Real(static_cast<double>(k)) / vsq;
      const auto& sub_g = g[mask ^ (std::size_t{1} << sub.idx[m])];
      acc.add({coef * sub_g.re, coef * sub_g.im});
    }
    Complex<Real> s = acc.value();
    Real inv = 1 / (2 * pi<Real>());
    g[mask] = {s.im * inv, -s.re * inv};
  }
  return g.back();
}

template <class Real>
Real face_volume_real(const MeasurePlan::Face& face) {
  if (face.vertices.size() == 1) return Real(1);
  using std::sqrt;
  return sqrt(to_real<Real>(face.squared_volume));
}

}  // namespace

// ---------------------------------------------------------------- MeasurePlan

void MeasurePlan::add_face(const FaceSimplex& f, int weight) {
  if (dim_ == 0) dim_ = f.ambient_dim();
  if (f.ambient_dim() != dim_) throw GeometryError("face dimension mismatch in measure");
  Face face;
  face.vertices = f.vertices();
  face.weight = weight;
  face.squared_volume = face_volume(f).squared_volume;
  const std::size_t n = face.vertices.size();
  if (n > 16) throw GeometryError("face has too many vertices");
  face.subsets.resize(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < face.subsets.size(); ++mask) {
    Subset& sub = face.subsets[mask];
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.idx.push_back(static_cast<std::uint8_t>(i));
    }
    if (sub.idx.size() < 2) continue;
    Matrix edges(sub.idx.size() - 1, dim_);
    for (std::size_t m = 1; m < sub.idx.size(); ++m) {
      edges[m - 1] = face.vertices[sub.idx[m]] - face.vertices[sub.idx[0]];
    }
    auto inv = inverse(gram(edges));
    if (!inv) throw GeometryError("degenerate face in measure");
    sub.gram_inverse = std::move(*inv);
  }
  faces_.push_back(std::move(face));
}

MeasurePlan MeasurePlan::indicator(const Polytope& a) {
  MeasurePlan p;
  p.dim_ = a.dim();
  for (const auto& s : a.simplices()) p.add_face(s, 1);
  return p;
}

MeasurePlan MeasurePlan::from_measure(const FlagMeasure& m) {
  MeasurePlan p;
  for (const auto& t : m.terms) p.add_face(t.face, t.sign);
  return p;
}

MeasurePlan MeasurePlan::single_face(const FaceSimplex& f, int weight) {
  MeasurePlan p;
  p.add_face(f, weight);
  return p;
}

template <class Real>
ComplexValue MeasurePlan::evaluate_tier(const Frequency& xi, int bits) const {
  CompensatedSum<Real> total;
  if (xi.is_exact()) {
    for (const auto& face : faces_) {
      Complex<Real> g = face_average_exact<Real>(face, xi.rational());
      Real w = face_volume_real<Real>(face) * Real(face.weight);
      total.add({w * g.re, w * g.im});
    }
  } else {
    std::vector<Real> x;
    Real norm2 = 0;
    for (double c : xi.approx()) {
      x.push_back(Real(c));
      norm2 += Real(c) * Real(c);
    }
    using std::sqrt;
    Real norm = sqrt(norm2);
    for (const auto& face : faces_) {
      Complex<Real> g = face_average_float<Real>(face, x, norm);
      Real w = face_volume_real<Real>(face) * Real(face.weight);
      total.add({w * g.re, w * g.im});
    }
  }
  Complex<Real> v = total.value();
  ComplexValue out;
  out.re = Quad(v.re);
  out.im = Quad(v.im);
  out.precision_bits = bits;
  return out;
}

ComplexValue MeasurePlan::evaluate(const Frequency& xi, const Precision& precision) const {
  if (!faces_.empty() && xi.size() != dim_) throw std::invalid_argument("frequency dimension mismatch");
  const int bits = Precision::resolve(precision.bits);
  auto run = [this](const Frequency& f, int tier) {
    switch (tier) {
      case 53:
        return evaluate_tier<double>(f, tier);
      case 64:
        return evaluate_tier<long double>(f, tier);
      default:
        return evaluate_tier<Quad>(f, tier);
    }
  };
  if (faces_.empty()) return ComplexValue{0, 0, bits};
  try {
    return run(xi, bits);
  } catch (const NeedsEscalation&) {
    if (!precision.allow_escalation) {
      throw PrecisionError("frequency is within the instability threshold of a degenerate face");
    }
    return run(Frequency::exact(xi.to_rational()), std::max(bits, Precision::kEscalatedBits));
  }
}

// ------------------------------------------------------------------ wrappers

ComplexValue ft_face_measure(const FaceSimplex& f, const Frequency& xi, const Precision& precision) {
  return MeasurePlan::single_face(f).evaluate(xi, precision);
}

ComplexValue ft_flag_measure(const Polytope& a, const Flag& flag, const Frequency& xi, const Precision& precision) {
  if (flag.ambient_dim() != a.dim()) throw GeometryError("flag and polytope dimensions differ");
  MeasurePlan plan = MeasurePlan::from_measure(flag_measure(a, flag));
  if (plan.face_count() == 0) return ComplexValue{0, 0, Precision::resolve(precision.bits)};
  return plan.evaluate(xi, precision);
}

ComplexValue ft_indicator(const Polytope& a, const Frequency& xi, const Precision& precision) {
  return MeasurePlan::indicator(a).evaluate(xi, precision);
}

// ------------------------------------------------------------ Stokes residual

double stokes_residual(const Polytope& a, const Flag& flag, const RationalVector& v, const Frequency& xi,
                       const Precision& precision) {
  const std::size_t k = flag.r();
  if (k == 0) throw GeometryError("Stokes identity needs a k-flag with k >= 1");
  if (v.size() != a.dim() || !flag.subspace(k).contains(v)) throw GeometryError("v must lie in V_k");

  // Group the facets of all flag-parallel k-faces by direction space; each
  // group defines one (k-1)-flag.
  std::vector<Flag> lower;
  std::map<std::string, std::size_t> by_direction;
  for (const auto& s : a.simplices()) {
    for (const auto& chain : face_chains(s, flag)) {
      for (const auto& facet : simplex_faces(chain.bottom(), k - 1)) {
        Subspace w = direction_subspace(facet);
        if (by_direction.emplace(w.key(), lower.size()).second) lower.push_back(flag.extended_below(w));
      }
    }
  }

  const Frequency xq = xi.is_exact() ? xi : Frequency::exact(xi.to_rational());
  const Quad two_pi = 2 * pi<Quad>();
  const Quad xi_v = to_real<Quad>(dot(xq.rational(), v));

  ComplexValue mu = ft_flag_measure(a, flag, xi, precision);
  // -2 pi i <xi,v> * mu
  Quad lhs_re = two_pi * xi_v * mu.im;
  Quad lhs_im = -two_pi * xi_v * mu.re;

  Quad rhs_re = 0;
  Quad rhs_im = 0;
  for (const auto& sub : lower) {
    RationalVector u = sub.normal_rational(k - 1);
    Quad sigma_v = to_real<Quad>(dot(u, v)) / sqrt(to_real<Quad>(dot(u, u)));
    if (sigma_v == 0) continue;
    ComplexValue m = ft_flag_measure(a, sub, xi, precision);
    rhs_re += sigma_v * m.re;
    rhs_im += sigma_v * m.im;
  }
  Quad dre = lhs_re - rhs_re;
  Quad dim_ = lhs_im - rhs_im;
  return static_cast<double>(sqrt(dre * dre + dim_ * dim_));
}

// ----------------------------------------------------------------- quadrature

namespace {

using Weights = std::vector<double>;           // barycentric weights over parent vertices
using ChildTemplate = std::vector<Weights>;     // d+1 vertices of one child

// Edgewise (Freudenthal) refinement: map the simplex onto
// {2 >= y_1 >= ... >= y_d >= 0}, which unit Kuhn simplices tile with 2^d pieces.
std::vector<ChildTemplate> refinement_template(std::size_t d) {
  std::vector<ChildTemplate> children;
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  for (std::size_t cell = 0; cell < (std::size_t{1} << d); ++cell) {
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::vector<double>> ys;
      std::vector<double> y(d);
      for (std::size_t i = 0; i < d; ++i) y[i] = (cell >> i) & 1u;
      ys.push_back(y);
      for (std::size_t m = 0; m < d; ++m) {
        y[perm[m]] += 1;
        ys.push_back(y);
      }
      std::vector<double> c(d, 0.0);
      for (const auto& p : ys) {
        for (std::size_t i = 0; i < d; ++i) c[i] += p[i] / static_cast<double>(d + 1);
      }
      bool inside = c[0] < 2 && c[d - 1] > 0;
      for (std::size_t i = 0; i + 1 < d; ++i) inside = inside && c[i] > c[i + 1];
      if (!inside) continue;
      ChildTemplate child;
      for (const auto& p : ys) {
        Weights w(d + 1);
        w[0] = 1 - p[0] / 2;
        for (std::size_t m = 1; m <= d; ++m) w[m] = (p[m - 1] - (m < d ? p[m] : 0.0)) / 2;
        child.push_back(std::move(w));
      }
      children.push_back(std::move(child));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (children.size() != (std::size_t{1} << d)) throw std::logic_error("refinement template is incomplete");
  return children;
}

double simplex_volume_double(const std::vector<std::vector<double>>& v) {
  const std::size_t d = v.size() - 1;
  std::vector<std::vector<double>> m(d, std::vector<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = v[i + 1][j] - v[0][j];
  }
  double det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < d; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    }
    if (m[p][c] == 0) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < d; ++i) {
      double f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  double fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<double>(i);
  return std::abs(det) / fact;
}

struct QuadratureState {
  const std::vector<ChildTemplate>* tmpl;
  std::vector<double> xi;
  double xi_norm;
  CompensatedSum<double> sum;
  double bound = 0;
  double volume = 0;
  std::size_t cells = 0;

  void visit(const std::vector<std::vector<double>>& v, int depth) {
    const std::size_t d = xi.size();
    if (depth == 0) {
      std::vector<double> c(d, 0.0);
      for (const auto& p : v) {
        for (std::size_t i = 0; i < d; ++i) c[i] += p[i] / static_cast<double>(d + 1);
      }
      double radius = 0;
      for (const auto& p : v) {
        double r2 = 0;
        for (std::size_t i = 0; i < d; ++i) r2 += (p[i] - c[i]) * (p[i] - c[i]);
        radius = std::max(radius, std::sqrt(r2));
      }
      double vol = simplex_volume_double(v);
      double phase = 0;
      for (std::size_t i = 0; i < d; ++i) phase += xi[i] * c[i];
      Complex<double> e = unit_phase<double>(phase);
      sum.add({vol * e.re, vol * e.im});
      const double g = 2 * std::numbers::pi * xi_norm * radius;
      bound += vol * std::min(g, 0.5 * g * g);
      volume += vol;
      ++cells;
      return;
    }
    for (const auto& child : *tmpl) {
      std::vector<std::vector<double>> cv;
      cv.reserve(d + 1);
      for (const auto& w : child) {
        std::vector<double> p(d, 0.0);
        for (std::size_t m = 0; m <= d; ++m) {
          if (w[m] == 0) continue;
          for (std::size_t i = 0; i < d; ++i) p[i] += w[m] * v[m][i];
        }
        cv.push_back(std::move(p));
      }
      visit(cv, depth - 1);
    }
  }
};

}  // namespace

QuadratureEstimate quadrature_oracle(const Polytope& a, const Frequency& xi, int subdivisions) {
  if (subdivisions < 1) throw std::invalid_argument("subdivisions must be >= 1");
  if (xi.size() != a.dim()) throw std::invalid_argument("frequency dimension mismatch");
  const auto tmpl = refinement_template(a.dim());
  QuadratureState st{&tmpl, xi.to_doubles(), xi.norm(), {}};
  for (const auto& s : a.simplices()) {
    std::vector<std::vector<double>> v;
    for (const auto& p : s.vertices()) v.push_back(Frequency::exact(p).to_doubles());
    st.visit(v, subdivisions);
  }
  QuadratureEstimate q;
  auto total = st.sum.value();
  q.estimate.re = total.re;
  q.estimate.im = total.im;
  q.estimate.precision_bits = 53;
  q.cells = st.cells;
  q.error_bound = st.bound + 64 * std::numeric_limits<double>::epsilon() * st.volume *
                                 (1 + std::log2(static_cast<double>(st.cells)));
  return q;
}

}  // namespace polyspec
