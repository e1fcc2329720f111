#pragma once

#include "polyspec/geometry.hpp"
#include "polyspec/hadwiger.hpp"
#include "polyspec/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polyspec {

/// Frequency-independent data for evaluating
///   sum_i w_i * integral over face_i of exp(-2 pi i <xi, x>) dVol
/// over a weighted collection of simplicial faces.
///
/// Each face is evaluated by the divergence-theorem recursion over its
/// subfaces. With lambda_m the barycentric coordinates of a k-face f and
/// v the projection of xi onto its direction space,
///   -2 pi i <xi,v> FT(f) = sum_facets <n, v> FT(facet)
/// becomes, for the face average G = FT / Vol,
///   G(f) = k / (2 pi i |v|^2) * sum_m <grad lambda_m, xi> G(f \ x_m),
/// and |v|^2 = sum_m <grad lambda_m, xi> <x_m - x_0, xi>. Every coefficient
/// is rational for rational xi, so only the vertex exponentials are rounded.
/// When xi is orthogonal to the face, G(f) = exp(-2 pi i <xi, x_0>).
class MeasurePlan {
 public:
  MeasurePlan() = default;

  static MeasurePlan indicator(const Polytope& a);
  static MeasurePlan from_measure(const FlagMeasure& m);
  static MeasurePlan single_face(const FaceSimplex& f, int weight = 1);

  void add_face(const FaceSimplex& f, int weight);

  std::size_t face_count() const { return faces_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Exact frequencies are evaluated at the requested tier with exact
  /// degeneracy decisions. Floating frequencies whose projection onto some
  /// face satisfies |proj| / |xi| < 1e-12 are re-evaluated exactly at 113
  /// bits, or raise PrecisionError if escalation is disabled.
  ComplexValue evaluate(const Frequency& xi, const Precision& precision = {}) const;

  struct Subset {
    std::vector<std::uint8_t> idx;  // local vertex indices, ascending
    Matrix gram_inverse;            // of edges x_idx[m] - x_idx[0]
  };
  struct Face {
    std::vector<Point> vertices;
    Rational squared_volume;
    int weight = 1;
    std::vector<Subset> subsets;  // indexed by vertex bitmask
  };

 private:
  template <class Real>
  ComplexValue evaluate_tier(const Frequency& xi, int bits) const;

  std::size_t dim_ = 0;
  std::vector<Face> faces_;
};

/// Integral of exp(-2 pi i <xi, x>) against k-volume on the face.
ComplexValue ft_face_measure(const FaceSimplex& f, const Frequency& xi, const Precision& precision = {});

ComplexValue ft_flag_measure(const Polytope& a, const Flag& flag, const Frequency& xi,
                             const Precision& precision = {});

/// Fourier transform of the indicator function of A.
ComplexValue ft_indicator(const Polytope& a, const Frequency& xi, const Precision& precision = {});

/// |LHS - RHS| of the Stokes-type identity for a k-flag (1 <= k <= d):
///   -2 pi i <xi, v> mu_k^(xi) = sum_l <sigma_l, v> mu_{k-1, l}^(xi),
/// where the (k-1)-flags extend the k-flag by the direction spaces of the
/// facets of the flag-parallel k-faces, and sigma_l is the unit normal
/// pointing into the negative half-space. v must lie in V_k.
double stokes_residual(const Polytope& a, const Flag& flag, const RationalVector& v, const Frequency& xi,
                       const Precision& precision = {});

struct QuadratureEstimate {
  ComplexValue estimate;
  double error_bound = 0.0;
  std::size_t cells = 0;
};

/// Centroid-rule quadrature over a regular (edge-midpoint) refinement of
/// every simplex, `subdivisions` levels deep, so each cell has 2^-d of its
/// parent's volume. The bound sums, per cell, Vol * min(2 pi |xi| R,
/// 2 pi^2 |xi|^2 R^2) with R the largest centroid-to-vertex distance, plus
/// a rounding allowance.
QuadratureEstimate quadrature_oracle(const Polytope& a, const Frequency& xi, int subdivisions);

}  // namespace polyspec
