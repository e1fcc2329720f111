#pragma once

#include "polyspec/linalg.hpp"
#include "polyspec/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyspec {

/// Invalid geometric input: degenerate simplices, overlapping interiors,
/// dimension mismatches, singular maps, malformed flags.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Point = RationalVector;

/// Convex hull of r+1 affinely independent points in R^d. A full simplex of
/// a polytope is a FaceSimplex with r == d.
class FaceSimplex {
 public:
  FaceSimplex() = default;
  /// Throws GeometryError if the points do not span an r-dimensional affine hull.
  explicit FaceSimplex(std::vector<Point> vertices);

  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t ambient_dim() const { return vertices_.front().size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }

  /// Rows x_i - x_0, i = 1..r.
  Matrix edge_matrix() const;
  Point centroid() const;

  /// Vertex-set key independent of vertex order; equal keys mean equal faces.
  std::string key() const;

  FaceSimplex translated(const RationalVector& t) const;

  friend bool operator==(const FaceSimplex&, const FaceSimplex&) = default;

 private:
  struct Unchecked {};
  FaceSimplex(std::vector<Point> vertices, Unchecked) : vertices_(std::move(vertices)) {}
  friend std::vector<FaceSimplex> simplex_faces(const FaceSimplex&, std::size_t);
  friend class Polytope;

  std::vector<Point> vertices_;
};

using Simplex = FaceSimplex;

struct FaceVolume {
  Rational squared_volume;
  double volume = 0.0;
};

/// All (j+1)-vertex subsets in lexicographic index order; C(dim+1, j+1) faces.
std::vector<FaceSimplex> simplex_faces(const FaceSimplex& s, std::size_t j);

/// det(Gram(edges)) / (r!)^2 exactly, plus its square root. A vertex has volume 1.
FaceVolume face_volume(const FaceSimplex& f);

/// Signed d-volume of a full simplex: det(edges) / d!.
Rational signed_volume(const Simplex& s);

/// Linear subspace of Q^d in canonical reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given rows (need not be independent).
  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient, const std::vector<RationalVector>& rows);
  static Subspace whole(std::size_t ambient);
  /// {x : <n, x> = 0 for every n in normals}.
  static Subspace orthogonal_complement(std::size_t ambient, const std::vector<RationalVector>& normals);
  /// Span of the first j coordinate axes.
  static Subspace coordinate(std::size_t ambient, std::size_t j);

  std::size_t dim() const { return basis_.row_count(); }
  std::size_t ambient_dim() const { return basis_.cols; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& x) const;
  bool contains(const Subspace& other) const;

  /// det(B B^T) for the canonical basis B; the square root is the factor by
  /// which r-volumes exceed their projections onto the pivot coordinates.
  Rational projection_scale_squared() const;

  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Direction space of the affine hull of f, spanned by its edge vectors.
Subspace direction_subspace(const FaceSimplex& f);

/// Nested subspaces V_r < ... < V_{d-1} < R^d with a primitive integer
/// normal u_j in V_{j+1}, orthogonal to V_j, for each j. u_j points into the
/// negative half-space of V_{j+1} determined by V_j. A d-flag has no normals.
class Flag {
 public:
  Flag() = default;

  /// normals are given top-down: u_{d-1}, ..., u_r (the JSON order).
  /// Each is rescaled to a primitive integer vector, keeping its direction.
  static Flag from_normals(std::size_t d, std::size_t r, const std::vector<RationalVector>& normals_top_down);
  /// subspaces bottom-up: V_r, ..., V_{d-1}. Canonical orientation: each u_j
  /// has its first nonzero entry positive.
  static Flag from_subspaces(std::size_t d, std::vector<Subspace> subspaces);
  static Flag standard(std::size_t d, std::size_t r);
  static Flag full(std::size_t d) { return standard(d, d); }

  std::size_t r() const { return r_; }
  std::size_t ambient_dim() const { return d_; }

  /// V_j for r <= j <= d (V_d is the whole space).
  const Subspace& subspace(std::size_t j) const { return subspaces_.at(j - r_); }
  /// u_j for r <= j <= d-1.
  const std::vector<Integer>& normal(std::size_t j) const { return normals_.at(j - r_); }
  RationalVector normal_rational(std::size_t j) const { return to_rational(normal(j)); }

  /// Copy with u_j negated.
  Flag with_flipped(std::size_t j) const;
  /// A (r-1)-flag extending this one by a new bottom subspace w inside V_r,
  /// canonically oriented.
  Flag extended_below(const Subspace& w) const;

  bool is_standard() const;
  /// Same subspace sequence, ignoring orientation.
  bool same_subspaces(const Flag& other) const;
  /// Subspaces plus orientation; used for deduplication and ordering.
  std::string key() const;

  friend bool operator==(const Flag& a, const Flag& b) {
    return a.r_ == b.r_ && a.d_ == b.d_ && a.subspaces_ == b.subspaces_ && a.normals_ == b.normals_;
  }

 private:
  void validate() const;

  std::size_t d_ = 0;
  std::size_t r_ = 0;
  std::vector<Subspace> subspaces_;           // V_r .. V_d
  std::vector<std::vector<Integer>> normals_;  // u_r .. u_{d-1}
};

/// Invertible d x d rational matrix acting on column vectors.
class LinearMap {
 public:
  explicit LinearMap(Matrix m);
  static LinearMap identity(std::size_t d) { return LinearMap(Matrix::identity(d)); }
  const Matrix& matrix() const { return m_; }
  const Rational& det() const { return det_; }
  Point apply(const Point& x) const { return m_ * x; }

 private:
  Matrix m_;
  Rational det_;
};

struct ValidationOptions {
  std::uint64_t seed = 0x5eedULL;
  int samples_per_pair = 1000;
};

/// Finite union of d-simplices with pairwise disjoint interiors.
class Polytope {
 public:
  /// Validates every simplex and pairwise interior disjointness (exact for
  /// d <= 3, sampled for d > 3).
  Polytope(std::size_t dim, std::vector<Simplex> simplices, const ValidationOptions& opts = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  Rational volume() const;

  Polytope translated(const RationalVector& t) const;

 private:
  struct Trusted {};
  Polytope(std::size_t dim, std::vector<Simplex> simplices, Trusted)
      : dim_(dim), simplices_(std::move(simplices)) {}
  friend Polytope apply_linear(const Polytope&, const LinearMap&);

  std::size_t dim_ = 0;
  std::vector<Simplex> simplices_;
};

/// Image of A under x -> Mx. Volume scales by |det M|.
Polytope apply_linear(const Polytope& a, const LinearMap& m);

/// True when the interiors of two full simplices meet. Exact for d <= 3.
bool interiors_overlap(const Simplex& a, const Simplex& b, const ValidationOptions& opts = {});

}  // namespace polyspec
