#include "polyspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace polyspec {

namespace {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

std::string vector_key(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s + ")";
}

// Primitive integer vector in `outer` orthogonal to `inner`, where
// dim outer = dim inner + 1.
std::vector<Integer> normal_within(const Subspace& outer, const Subspace& inner) {
  const Matrix& b = outer.basis();
  Matrix cbt(inner.dim(), b.row_count());
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    for (std::size_t j = 0; j < b.row_count(); ++j) cbt[i][j] = dot(inner.basis()[i], b[j]);
  }
  auto ns = null_space(cbt);
  if (ns.size() != 1) throw GeometryError("subspaces are not nested with codimension 1");
  RationalVector x(outer.ambient_dim(), Rational(0));
  for (std::size_t j = 0; j < b.row_count(); ++j) x = x + scaled(b[j], ns[0][j]);
  return primitive_integer(x);
}

}  // namespace

// ---------------------------------------------------------------- FaceSimplex

FaceSimplex::FaceSimplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw GeometryError("simplex without vertices");
  const std::size_t d = vertices_.front().size();
  for (const auto& v : vertices_) {
    if (v.size() != d) throw GeometryError("vertex dimension mismatch");
  }
  if (vertices_.size() > d + 1) throw GeometryError("too many vertices for a simplex in R^" + std::to_string(d));
  if (rank(edge_matrix()) != vertices_.size() - 1) throw GeometryError("degenerate simplex");
}

Matrix FaceSimplex::edge_matrix() const {
  const std::size_t d = ambient_dim();
  Matrix e(vertices_.size() - 1, d);
  for (std::size_t i = 1; i < vertices_.size(); ++i) e[i - 1] = vertices_[i] - vertices_[0];
  return e;
}

Point FaceSimplex::centroid() const {
  Point c(ambient_dim(), Rational(0));
  for (const auto& v : vertices_) c = c + v;
  return scaled(c, Rational(1, static_cast<unsigned long>(vertices_.size())));
}

std::string FaceSimplex::key() const {
  std::vector<std::string> keys;
  keys.reserve(vertices_.size());
  for (const auto& v : vertices_) keys.push_back(vector_key(v));
  std::sort(keys.begin(), keys.end());
  std::string s;
  for (const auto& k : keys) s += k;
  return s;
}

FaceSimplex FaceSimplex::translated(const RationalVector& t) const {
  std::vector<Point> vs;
  vs.reserve(vertices_.size());
  for (const auto& v : vertices_) vs.push_back(v + t);
  return FaceSimplex(std::move(vs), Unchecked{});
}

std::vector<FaceSimplex> simplex_faces(const FaceSimplex& s, std::size_t j) {
  const std::size_t n = s.vertices().size();
  if (j + 1 > n) throw std::out_of_range("face dimension exceeds simplex dimension");
  std::vector<FaceSimplex> faces;
  std::vector<std::size_t> idx(j + 1);
  for (std::size_t i = 0; i <= j; ++i) idx[i] = i;
  while (true) {
    std::vector<Point> vs;
    vs.reserve(j + 1);
    for (auto i : idx) vs.push_back(s.vertex(i));
    faces.push_back(FaceSimplex(std::move(vs), FaceSimplex::Unchecked{}));
    std::size_t pos = j + 1;
    while (pos > 0 && idx[pos - 1] == n - (j + 1) + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k <= j; ++k) idx[k] = idx[k - 1] + 1;
  }
  return faces;
}

FaceVolume face_volume(const FaceSimplex& f) {
  const std::size_t r = f.dim();
  if (r == 0) return {Rational(1), 1.0};
  Integer fact = factorial(r);
  Rational sq = determinant(gram(f.edge_matrix())) / Rational(fact * fact);
  return {sq, std::sqrt(sq.get_d())};
}

Rational signed_volume(const Simplex& s) {
  if (s.dim() != s.ambient_dim()) throw GeometryError("signed volume needs a full simplex");
  return determinant(s.edge_matrix()) / Rational(factorial(s.dim()));
}

// ------------------------------------------------------------------- Subspace

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  EchelonForm e = rref(rows);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RationalVector>& rows) {
  return span(Matrix(rows, ambient));
}

Subspace Subspace::whole(std::size_t ambient) { return span(Matrix::identity(ambient)); }

Subspace Subspace::orthogonal_complement(std::size_t ambient, const std::vector<RationalVector>& normals) {
  return span(ambient, null_space(Matrix(normals, ambient)));
}

Subspace Subspace::coordinate(std::size_t ambient, std::size_t j) {
  Matrix m(j, ambient);
  for (std::size_t i = 0; i < j; ++i) m[i][i] = 1;
  return span(m);
}

bool Subspace::contains(const RationalVector& x) const {
  RationalVector residual = x;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational f = residual[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= f * basis_[i][j];
  }
  return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.basis_.rows) {
    if (!contains(row)) return false;
  }
  return true;
}

Rational Subspace::projection_scale_squared() const { return determinant(gram(basis_)); }

std::string Subspace::key() const {
  std::string s = "[";
  for (const auto& row : basis_.rows) s += vector_key(row);
  return s + "]";
}

Subspace direction_subspace(const FaceSimplex& f) { return Subspace::span(f.edge_matrix()); }

// ----------------------------------------------------------------------- Flag

Flag Flag::from_normals(std::size_t d, std::size_t r, const std::vector<RationalVector>& normals_top_down) {
  if (r > d) throw GeometryError("flag r exceeds dimension");
  if (normals_top_down.size() != d - r) {
    throw GeometryError("flag with r=" + std::to_string(r) + " in R^" + std::to_string(d) + " needs " +
                        std::to_string(d - r) + " normals");
  }
  Flag f;
  f.d_ = d;
  f.r_ = r;
  f.normals_.resize(d - r);
  f.subspaces_.resize(d - r + 1);
  f.subspaces_[d - r] = Subspace::whole(d);
  std::vector<RationalVector> accumulated;
  for (std::size_t k = 0; k < normals_top_down.size(); ++k) {
    const auto& n = normals_top_down[k];
    if (n.size() != d) throw GeometryError("flag normal has wrong dimension");
    if (is_zero(n)) throw GeometryError("flag normal is zero");
    const std::size_t j = d - 1 - k;
    f.normals_[j - r] = primitive_integer(n);
    accumulated.push_back(n);
    f.subspaces_[j - r] = Subspace::orthogonal_complement(d, accumulated);
  }
  f.validate();
  return f;
}

Flag Flag::from_subspaces(std::size_t d, std::vector<Subspace> subspaces) {
  Flag f;
  f.d_ = d;
  if (subspaces.size() > d) throw GeometryError("too many subspaces for a flag");
  f.r_ = d - subspaces.size();
  subspaces.push_back(Subspace::whole(d));
  f.subspaces_ = std::move(subspaces);
  for (std::size_t j = f.r_; j < d; ++j) {
    if (f.subspace(j).dim() != j) throw GeometryError("flag subspace V_j must have dimension j");
    auto u = normal_within(f.subspace(j + 1), f.subspace(j));
    canonicalize_sign(u);
    f.normals_.push_back(std::move(u));
  }
  f.validate();
  return f;
}

Flag Flag::standard(std::size_t d, std::size_t r) {
  if (r > d) throw GeometryError("flag r exceeds dimension");
  Flag f;
  f.d_ = d;
  f.r_ = r;
  for (std::size_t j = r; j <= d; ++j) f.subspaces_.push_back(Subspace::coordinate(d, j));
  for (std::size_t j = r; j < d; ++j) {
    std::vector<Integer> u(d, Integer(0));
    u[j] = 1;
    f.normals_.push_back(std::move(u));
  }
  return f;
}

Flag Flag::with_flipped(std::size_t j) const {
  Flag f = *this;
  for (auto& x : f.normals_.at(j - r_)) x = -x;
  return f;
}

Flag Flag::extended_below(const Subspace& w) const {
  if (r_ == 0) throw GeometryError("cannot extend a 0-flag");
  if (w.dim() + 1 != r_ || !subspace(r_).contains(w)) {
    throw GeometryError("new bottom subspace must be a hyperplane of V_r");
  }
  Flag f = *this;
  auto u = normal_within(subspace(r_), w);
  canonicalize_sign(u);
  f.r_ = r_ - 1;
  f.subspaces_.insert(f.subspaces_.begin(), w);
  f.normals_.insert(f.normals_.begin(), std::move(u));
  return f;
}

bool Flag::is_standard() const { return *this == standard(d_, r_); }

bool Flag::same_subspaces(const Flag& other) const {
  return d_ == other.d_ && r_ == other.r_ && subspaces_ == other.subspaces_;
}

std::string Flag::key() const {
  std::string s = std::to_string(r_) + "|";
  for (const auto& v : subspaces_) s += v.key();
  s += "|";
  for (const auto& u : normals_) {
    s += "(";
    for (const auto& x : u) s += x.get_str() + ",";
    s += ")";
  }
  return s;
}

void Flag::validate() const {
  for (std::size_t j = r_; j < d_; ++j) {
    const Subspace& vj = subspace(j);
    const Subspace& vj1 = subspace(j + 1);
    if (vj.dim() != j) throw GeometryError("flag normals are not linearly independent");
    if (!vj1.contains(vj)) throw GeometryError("flag subspaces are not nested");
    RationalVector u = normal_rational(j);
    if (is_zero(u) || !vj1.contains(u)) throw GeometryError("flag normal u_j must lie in V_{j+1}");
    for (const auto& w : vj.basis().rows) {
      if (sgn(dot(u, w)) != 0) throw GeometryError("flag normal u_j must be orthogonal to V_j");
    }
  }
}

// ------------------------------------------------------------------ LinearMap

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.row_count() != m_.cols) throw GeometryError("linear map must be square");
  det_ = determinant(m_);
  if (sgn(det_) == 0) throw GeometryError("singular linear map");
}

// ------------------------------------------------------------------- Polytope

namespace {

std::pair<Rational, Rational> projection_range(const Simplex& s, const RationalVector& axis) {
  Rational lo = dot(axis, s.vertex(0));
  Rational hi = lo;
  for (std::size_t i = 1; i < s.vertices().size(); ++i) {
    Rational p = dot(axis, s.vertex(i));
    if (p < lo) lo = p;
    if (p > hi) hi = p;
  }
  return {lo, hi};
}

bool separated_along(const Simplex& a, const Simplex& b, const RationalVector& axis) {
  if (is_zero(axis)) return false;
  auto [alo, ahi] = projection_range(a, axis);
  auto [blo, bhi] = projection_range(b, axis);
  return ahi <= blo || bhi <= alo;
}

void facet_normals(const Simplex& s, std::vector<RationalVector>& out) {
  for (const auto& facet : simplex_faces(s, s.dim() - 1)) {
    auto ns = null_space(facet.edge_matrix());
    if (ns.size() == 1) out.push_back(ns[0]);
  }
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Barycentric coordinates of x with respect to s, in floating point.
std::vector<double> barycentric(const Simplex& s, const std::vector<double>& x) {
  const std::size_t d = s.ambient_dim();
  std::vector<std::vector<double>> a(d, std::vector<double>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = Rational(s.vertex(j + 1)[i] - s.vertex(0)[i]).get_d();
    a[i][d] = x[i] - s.vertex(0)[i].get_d();
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < d; ++i) {
      if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
    }
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c) continue;
      double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<double> lambda(d + 1);
  double sum = 0;
  for (std::size_t i = 0; i < d; ++i) {
    lambda[i + 1] = a[i][d] / a[i][i];
    sum += lambda[i + 1];
  }
  lambda[0] = 1 - sum;
  return lambda;
}

bool sampled_overlap(const Simplex& a, const Simplex& b, const ValidationOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::exponential_distribution<double> expo(1.0);
  const std::size_t d = a.ambient_dim();
  for (int pass = 0; pass < 2; ++pass) {
    const Simplex& from = pass == 0 ? a : b;
    const Simplex& into = pass == 0 ? b : a;
    for (int k = 0; k < opts.samples_per_pair / 2; ++k) {
      std::vector<double> w(d + 1);
      double total = 0;
      for (auto& x : w) total += (x = expo(rng));
      std::vector<double> p(d, 0.0);
      for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t c = 0; c < d; ++c) p[c] += w[i] / total * from.vertex(i)[c].get_d();
      }
      auto lambda = barycentric(into, p);
      if (std::all_of(lambda.begin(), lambda.end(), [](double l) { return l > 1e-12; })) return true;
    }
  }
  return false;
}

}  // namespace

bool interiors_overlap(const Simplex& a, const Simplex& b, const ValidationOptions& opts) {
  const std::size_t d = a.ambient_dim();
  if (d > 3) {
    for (std::size_t c = 0; c < d; ++c) {
      RationalVector axis(d, Rational(0));
      axis[c] = 1;
      if (separated_along(a, b, axis)) return false;
    }
    return sampled_overlap(a, b, opts);
  }
  // Separating-axis test: two convex polytopes have disjoint interiors iff
  // some facet normal of either, or (in R^3) some edge-edge cross product,
  // weakly separates them.
  std::vector<RationalVector> axes;
  facet_normals(a, axes);
  facet_normals(b, axes);
  if (d == 3) {
    auto ea = simplex_faces(a, 1);
    auto eb = simplex_faces(b, 1);
    for (const auto& e1 : ea) {
      for (const auto& e2 : eb) axes.push_back(cross(e1.vertex(1) - e1.vertex(0), e2.vertex(1) - e2.vertex(0)));
    }
  }
  for (const auto& axis : axes) {
    if (separated_along(a, b, axis)) return false;
  }
  return true;
}

Polytope::Polytope(std::size_t dim, std::vector<Simplex> simplices, const ValidationOptions& opts)
    : dim_(dim), simplices_(std::move(simplices)) {
  if (dim == 0) throw GeometryError("polytope dimension must be positive");
  if (simplices_.empty()) throw GeometryError("polytope has no simplices");
  for (const auto& s : simplices_) {
    if (s.ambient_dim() != dim || s.dim() != dim) throw GeometryError("simplex dimension mismatch");
  }
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    for (std::size_t j = i + 1; j < simplices_.size(); ++j) {
      if (interiors_overlap(simplices_[i], simplices_[j], opts)) {
        throw GeometryError("interiors of simplices " + std::to_string(i) + " and " + std::to_string(j) +
                            " overlap");
      }
    }
  }
}

Rational Polytope::volume() const {
  Rational v = 0;
  for (const auto& s : simplices_) v += abs(signed_volume(s));
  return v;
}

Polytope Polytope::translated(const RationalVector& t) const {
  if (t.size() != dim_) throw GeometryError("translation dimension mismatch");
  std::vector<Simplex> out;
  out.reserve(simplices_.size());
  for (const auto& s : simplices_) out.push_back(s.translated(t));
  return Polytope(dim_, std::move(out), Trusted{});
}

Polytope apply_linear(const Polytope& a, const LinearMap& m) {
  if (m.matrix().cols != a.dim()) throw GeometryError("linear map dimension mismatch");
  std::vector<Simplex> out;
  out.reserve(a.simplices().size());
  for (const auto& s : a.simplices()) {
    std::vector<Point> vs;
    for (const auto& v : s.vertices()) vs.push_back(m.apply(v));
    out.push_back(Simplex(std::move(vs)));
  }
  Polytope image(a.dim(), std::move(out), Polytope::Trusted{});
  if (image.volume() != abs(m.det()) * a.volume()) throw std::logic_error("volume did not scale by |det M|");
  return image;
}

}  // namespace polyspec
