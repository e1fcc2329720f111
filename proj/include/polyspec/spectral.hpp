#pragma once

#include "polyspec/fourier.hpp"
#include "polyspec/hadwiger.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyspec {

/// Finite window of a candidate spectrum. Points must be pairwise distinct.
class SpectrumCandidate {
 public:
  SpectrumCandidate() = default;
  explicit SpectrumCandidate(std::vector<RationalVector> points);
  const std::vector<RationalVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<RationalVector> points_;
};

struct OrthogonalityViolation {
  std::size_t i = 0;  // index of lambda
  std::size_t j = 0;  // index of lambda', i < j
  double modulus = 0.0;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityViolation> violations;  // lexicographic (i, j)
  std::optional<double> min_separation;            // none for fewer than two points
  std::size_t checked_pairs = 0;
  double tol = 0.0;
};

/// |1_A^(lambda' - lambda)| over all pairs i < j; pairs at or above tol are
/// violations. Pair evaluations run in parallel.
OrthogonalityReport orthogonality_report(const Polytope& a, const SpectrumCandidate& lambda, double tol = 1e-9,
                                         const Precision& precision = {});

enum class CertificateStatement { not_spectral, not_translational_tile };

std::string to_string(CertificateStatement s);

struct Certificate {
  Flag flag;
  HadwigerValue value;  // rational_part != 0
  CertificateStatement statement = CertificateStatement::not_spectral;
};

/// First flag of invariant_profile(a) with a nonzero invariant, or nothing
/// when every invariant vanishes (which proves nothing either way).
std::optional<Certificate> non_spectrality_certificate(const Polytope& a);

/// Same flag, restated: a polytope with a nonzero invariant cannot tile by
/// translations either.
std::optional<Certificate> non_tiling_certificate(const Polytope& a);

struct CentralSymmetryReport {
  bool body_symmetric = false;
  std::optional<Point> center;             // set when body_symmetric
  std::optional<bool> facets_symmetric;    // none: not computed (d > 3)
  std::size_t facet_count = 0;
};

/// Vertices are assumed to be the vertex set of a convex polytope. For
/// d <= 3 this is checked exactly (full dimension, convex position) and the
/// facets are found by supporting hyperplanes.
CentralSymmetryReport central_symmetry_report(const std::vector<Point>& vertices, std::size_t d);

/// Facets of conv(vertices) as vertex index lists, d <= 3 only.
std::vector<std::vector<std::size_t>> convex_facets(const std::vector<Point>& vertices, std::size_t d);

}  // namespace polyspec
