#include "polyspec/spectral.hpp"

#include "polyspec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace polyspec {

SpectrumCandidate::SpectrumCandidate(std::vector<RationalVector> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  const std::size_t d = points_.front().size();
  for (const auto& p : points_) {
    if (p.size() != d) throw std::invalid_argument("spectrum points have mixed dimensions");
  }
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("spectrum points must be pairwise distinct");
  }
}

OrthogonalityReport orthogonality_report(const Polytope& a, const SpectrumCandidate& lambda, double tol,
                                         const Precision& precision) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const auto& pts = lambda.points();
  for (const auto& p : pts) {
    if (p.size() != a.dim()) throw GeometryError("spectrum point dimension differs from the polytope");
  }

  OrthogonalityReport report;
  report.tol = tol;
  std::vector<Frequency> diffs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<Rational> min_sq;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      RationalVector diff = pts[j] - pts[i];
      Rational sq = dot(diff, diff);
      if (!min_sq || sq < *min_sq) min_sq = sq;
      diffs.push_back(Frequency::exact(std::move(diff)));
      pairs.emplace_back(i, j);
    }
  }
  report.checked_pairs = pairs.size();
  if (min_sq) report.min_separation = std::sqrt(min_sq->get_d());

  const auto values = evaluate_batch(MeasurePlan::indicator(a), diffs, precision);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double m = values[k].abs();
    if (m >= tol) report.violations.push_back({pairs[k].first, pairs[k].second, m});
  }
  return report;
}

std::string to_string(CertificateStatement s) {
  return s == CertificateStatement::not_spectral ? "not_spectral" : "not_translational_tile";
}

std::optional<Certificate> non_spectrality_certificate(const Polytope& a) {
  const auto profile = invariant_profile(a);
  for (const auto& e : profile.entries) {
    if (!e.value.is_zero()) return Certificate{e.flag, e.value, CertificateStatement::not_spectral};
  }
  return std::nullopt;
}

std::optional<Certificate> non_tiling_certificate(const Polytope& a) {
  auto cert = non_spectrality_certificate(a);
  if (cert) cert->statement = CertificateStatement::not_translational_tile;
  return cert;
}

namespace {

Matrix edges_from(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
  Matrix e(0, pts.front().size());
  for (std::size_t m = 1; m < idx.size(); ++m) e.rows.push_back(pts[idx[m]] - pts[idx[0]]);
  return e;
}

// p in conv of the affinely independent points idx.
bool in_simplex(const std::vector<Point>& pts, const std::vector<std::size_t>& idx, const Point& p) {
  const Point rel = p - pts[idx[0]];
  if (idx.size() == 1) return is_zero(rel);
  Matrix e = edges_from(pts, idx);
  auto ginv = inverse(gram(e));
  if (!ginv) return false;
  RationalVector lam = *ginv * (e * rel);
  RationalVector back(p.size(), Rational(0));
  Rational total = 0;
  for (std::size_t m = 0; m < lam.size(); ++m) {
    if (sgn(lam[m]) < 0) return false;
    total += lam[m];
    back = back + scaled(e[m], lam[m]);
  }
  return total <= 1 && back == rel;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t m = i; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
}

void check_convex_position(const std::vector<Point>& vs, std::size_t d) {
  Matrix all(0, d);
  for (std::size_t i = 1; i < vs.size(); ++i) all.rows.push_back(vs[i] - vs[0]);
  if (rank(all) != d) throw GeometryError("vertices do not span a full-dimensional polytope");

  for (std::size_t v = 0; v < vs.size(); ++v) {
    std::vector<Point> others;
    for (std::size_t w = 0; w < vs.size(); ++w) {
      if (w != v) others.push_back(vs[w]);
    }
    bool inside = false;
    // Caratheodory: enough to test affinely independent subsets of size <= d+1.
    for (std::size_t k = 1; k <= d + 1 && !inside; ++k) {
      for_each_subset(others.size(), k, [&](const std::vector<std::size_t>& idx) {
        if (inside) return;
        if (rank(edges_from(others, idx)) != k - 1) return;
        inside = in_simplex(others, idx, vs[v]);
      });
    }
    if (inside) throw GeometryError("vertices are not in convex position");
  }
}

bool multiset_symmetric(const std::vector<Point>& pts, Point* center_out) {
  const std::size_t d = pts.front().size();
  Point c(d, Rational(0));
  for (const auto& p : pts) c = c + p;
  c = scaled(c, Rational(1, static_cast<long>(pts.size())));
  std::vector<Point> a = pts;
  std::vector<Point> b;
  for (const auto& p : pts) b.push_back(scaled(c, Rational(2)) - p);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (center_out) *center_out = c;
  return a == b;
}

}  // namespace

std::vector<std::vector<std::size_t>> convex_facets(const std::vector<Point>& vs, std::size_t d) {
  if (d == 0 || d > 3) throw std::invalid_argument("facet enumeration is implemented for 1 <= d <= 3");
  std::set<std::vector<std::size_t>> found;
  for_each_subset(vs.size(), d, [&](const std::vector<std::size_t>& idx) {
    Matrix e = edges_from(vs, idx);
    if (rank(e) != d - 1) return;
    RationalVector n;
    if (d == 1) {
      n = RationalVector{Rational(1)};
    } else {
      n = null_space(e).front();
    }
    int side = 0;
    std::vector<std::size_t> on;
    for (std::size_t w = 0; w < vs.size(); ++w) {
      const int s = sgn(dot(n, vs[w] - vs[idx[0]]));
      if (s == 0) {
        on.push_back(w);
      } else if (side == 0) {
        side = s;
      } else if (s != side) {
        return;
      }
    }
    found.insert(on);
  });
  return {found.begin(), found.end()};
}

CentralSymmetryReport central_symmetry_report(const std::vector<Point>& vertices, std::size_t d) {
  if (vertices.size() < d + 1) throw GeometryError("need at least d+1 vertices");
  for (const auto& v : vertices) {
    if (v.size() != d) throw GeometryError("vertex dimension mismatch");
  }
  if (d >= 1 && d <= 3) check_convex_position(vertices, d);

  CentralSymmetryReport report;
  Point c;
  report.body_symmetric = multiset_symmetric(vertices, &c);
  if (report.body_symmetric) report.center = c;

  if (d >= 1 && d <= 3) {
    const auto facets = convex_facets(vertices, d);
    report.facet_count = facets.size();
    bool all = true;
    for (const auto& f : facets) {
      std::vector<Point> pts;
      for (std::size_t i : f) pts.push_back(vertices[i]);
      if (!multiset_symmetric(pts, nullptr)) all = false;
    }
    report.facets_symmetric = all;
  }
  return report;
}

}  // namespace polyspec
