#include "polyspec/shapes.hpp"

#include <algorithm>
#include <numeric>

namespace polyspec::shapes {

namespace {

std::vector<Simplex> kuhn_simplices(const RationalVector& lo, const RationalVector& size) {
  const std::size_t d = lo.size();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Simplex> out;
  do {
    std::vector<Point> vs{lo};
    Point p = lo;
    for (std::size_t axis : perm) {
      p[axis] += size[axis];
      vs.push_back(p);
    }
    out.emplace_back(std::move(vs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Polytope box(const RationalVector& lo, const RationalVector& size) {
  if (lo.size() != size.size()) throw GeometryError("box corner and size dimensions differ");
  return Polytope(lo.size(), kuhn_simplices(lo, size));
}

Polytope unit_cube(std::size_t d) { return box(RationalVector(d, Rational(0)), RationalVector(d, Rational(1))); }

Polytope standard_simplex(std::size_t d) {
  std::vector<Point> vs{Point(d, Rational(0))};
  for (std::size_t i = 0; i < d; ++i) {
    Point e(d, Rational(0));
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return Polytope(d, {Simplex(std::move(vs))});
}

Polytope unit_cells(std::size_t d, const std::vector<std::vector<long>>& corners) {
  std::vector<Simplex> all;
  for (const auto& c : corners) {
    if (c.size() != d) throw GeometryError("cell corner has wrong dimension");
    RationalVector lo;
    for (long x : c) lo.emplace_back(x);
    auto part = kuhn_simplices(lo, RationalVector(d, Rational(1)));
    all.insert(all.end(), part.begin(), part.end());
  }
  return Polytope(d, std::move(all));
}

Polytope l_tromino() { return unit_cells(2, {{0, 0}, {1, 0}, {0, 1}}); }

}  // namespace polyspec::shapes
