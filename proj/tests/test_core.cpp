#include "oracles.hpp"

#include "polyspec/geometry.hpp"
#include "polyspec/io.hpp"
#include "polyspec/linalg.hpp"
#include "polyspec/rational.hpp"
#include "polyspec/shapes.hpp"

#include <doctest.h>

#include <set>

using namespace polyspec;

namespace {

Point P(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

Matrix rows_of(std::size_t cols, std::initializer_list<Point> rows) { return Matrix(std::vector<RationalVector>(rows), cols); }

Json poly_doc(const char* text) { return Json::parse(text); }

}  // namespace

TEST_CASE("rationals parse exactly from fractions and decimals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("3e-2") == Rational(3, 100));
  CHECK(parse_rational("2.5E1") == 25);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_shortest_decimal(0.1) == Rational(1, 10));
}

TEST_CASE("primitive integer vectors") {
  auto v = primitive_integer({Rational(2, 3), Rational(-4, 3), Rational(0)});
  CHECK(v == std::vector<Integer>{1, -2, 0});
  canonicalize_sign(v);
  CHECK(v.front() == 1);
  auto w = primitive_integer({Rational(0), Rational(-6)});
  canonicalize_sign(w);
  CHECK(w == std::vector<Integer>{0, 1});
}

TEST_CASE("rref is canonical and idempotent") {
  Matrix m = rows_of(3, {P({2, 4, 6}), P({1, 1, 1}), P({3, 5, 7})});
  auto e = rref(m);
  CHECK(e.rows.row_count() == 2);
  CHECK(rref(e.rows).rows == e.rows);
  // Another spanning set of the same row space gives the same form.
  Matrix m2 = rows_of(3, {P({1, 1, 1}), P({0, 1, 2})});
  CHECK(rref(m2).rows == e.rows);
  CHECK(rank(m) == 2);
}

TEST_CASE("determinant, inverse and null space") {
  Matrix m = rows_of(3, {P({2, 0, 1}), P({1, 3, 2}), P({1, 1, 1})});
  // 2(3-2) - 0 + 1(1-3) = 0
  CHECK(determinant(m) == 0);
  CHECK_FALSE(inverse(m).has_value());
  auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));

  Matrix a = rows_of(2, {P({2, 1}), P({5, 3})});
  CHECK(determinant(a) == 1);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2));
}

TEST_CASE("simplex faces are all vertex subsets") {
  Simplex tri({P({0, 0}), P({1, 0}), P({0, 1})});
  CHECK(simplex_faces(tri, 1).size() == 3);
  Simplex tet({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})});
  CHECK(simplex_faces(tet, 0).size() == 4);
  CHECK(simplex_faces(tet, 2).size() == 4);
  CHECK(simplex_faces(tet, 1).size() == 6);
  CHECK(simplex_faces(tet, 3).size() == 1);
  CHECK_THROWS(simplex_faces(tet, 4));
  std::set<std::string> keys;
  for (const auto& f : simplex_faces(tet, 1)) keys.insert(f.key());
  CHECK(keys.size() == 6);
}

TEST_CASE("face volumes") {
  Simplex tet({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})});
  CHECK(face_volume(tet).squared_volume == Rational(1, 36));
  CHECK(face_volume(tet).volume == doctest::Approx(1.0 / 6).epsilon(1e-15));

  FaceSimplex seg({P({0, 0}), P({3, 4})});
  CHECK(face_volume(seg).squared_volume == 25);
  CHECK(face_volume(seg).volume == 5.0);

  FaceSimplex vertex({P({2, 3})});
  CHECK(face_volume(vertex).squared_volume == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Point a = oracle::random_vector(rng, 3, -3, 3, 7);
    Point b = oracle::random_vector(rng, 3, -3, 3, 7);
    Point c = oracle::random_vector(rng, 3, -3, 3, 7);
    const Rational expect = oracle::cross_area_squared(a, b, c);
    if (sgn(expect) == 0) continue;
    CHECK(face_volume(FaceSimplex({a, b, c})).squared_volume == expect);
  }
}

TEST_CASE("degenerate simplices are rejected") {
  CHECK_THROWS_AS(Simplex({P({0, 0}), P({1, 0}), P({2, 0})}), GeometryError);
  CHECK_THROWS_AS(Simplex({P({0, 0}), P({0, 0})}), GeometryError);
  CHECK_THROWS_AS(Simplex({P({0, 0}), P({1, 0, 0})}), GeometryError);
}

TEST_CASE("direction subspaces") {
  auto h = direction_subspace(FaceSimplex({P({1, 1}), P({3, 1})}));
  CHECK(h == Subspace::span(2, {P({1, 0})}));

  auto d1 = direction_subspace(FaceSimplex({P({0, 0}), P({2, 2})}));
  auto d2 = direction_subspace(FaceSimplex({P({5, 0}), P({6, 1})}));
  CHECK(d1 == d2);

  auto plane = direction_subspace(FaceSimplex({P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})}));
  CHECK(plane.basis() == rows_of(3, {P({1, 0, -1}), P({0, 1, -1})}));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto vs = oracle::random_simplex_in_cell(rng, 3, 0);
    vs.pop_back();
    FaceSimplex f(vs);
    auto t = oracle::random_vector(rng, 3, -10, 10, 9);
    CHECK(direction_subspace(f).key() == direction_subspace(f.translated(t)).key());
  }
}

TEST_CASE("flags: nesting, orthogonality, canonical orientation") {
  auto f = Flag::from_normals(3, 1, {P({1, 1, 1}), P({1, -1, 0})});
  CHECK(f.r() == 1);
  for (std::size_t j = 1; j < 3; ++j) {
    CHECK(f.subspace(j + 1).contains(f.subspace(j)));
    CHECK(f.subspace(j).dim() == j);
    CHECK(f.subspace(j + 1).contains(f.normal_rational(j)));
    for (const auto& w : f.subspace(j).basis().rows) CHECK(sgn(dot(w, f.normal_rational(j))) == 0);
  }
  CHECK(sgn(dot(f.normal_rational(1), f.normal_rational(2))) == 0);

  // Normals are rescaled to primitive integers, keeping direction.
  auto g = Flag::from_normals(2, 1, {{Rational(0), Rational(-3, 2)}});
  CHECK(g.normal(1) == std::vector<Integer>{0, -1});

  // A normal outside V_{j+1} or not orthogonal to V_j is rejected.
  CHECK_THROWS_AS(Flag::from_normals(3, 1, {P({0, 0, 1}), P({1, 0, 1})}), GeometryError);
  CHECK_THROWS_AS(Flag::from_normals(2, 1, {P({0, 0})}), GeometryError);

  auto s = Flag::standard(3, 1);
  CHECK(s.is_standard());
  CHECK(s.normal(1) == std::vector<Integer>{0, 1, 0});
  CHECK(s.normal(2) == std::vector<Integer>{0, 0, 1});
  CHECK_FALSE(s.with_flipped(1).is_standard());
  CHECK(s.with_flipped(1).same_subspaces(s));
}

TEST_CASE("apply_linear scales volume by |det|") {
  auto sq = shapes::unit_cube(2);
  auto same = apply_linear(sq, LinearMap::identity(2));
  CHECK(same.simplices() == sq.simplices());

  auto rect = apply_linear(sq, LinearMap(rows_of(2, {P({2, 0}), P({0, 1})})));
  CHECK(rect.volume() == 2);

  auto tri = shapes::standard_simplex(2);
  CHECK(apply_linear(tri, LinearMap(rows_of(2, {P({0, -1}), P({1, 0})}))).volume() == tri.volume());

  CHECK_THROWS_AS(LinearMap(rows_of(2, {P({1, 2}), P({2, 4})})), GeometryError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto a = oracle::random_polytope(rng, d);
    Matrix m(d, d);
    for (auto& row : m.rows) row = oracle::random_vector(rng, d, -3, 3, 4);
    if (sgn(determinant(m)) == 0) continue;
    LinearMap map(m);
    CHECK(apply_linear(a, map).volume() == abs(map.det()) * a.volume());
  }
}

TEST_CASE("polytope documents") {
  auto sq = parse_polytope(poly_doc(
      R"({"dim":2,"vertices":[["0","0"],["1","0"],["1","1"],["0","1"]],"simplices":[[0,1,2],[0,2,3]]})"));
  CHECK(sq.volume() == 1);

  CHECK_THROWS_AS(parse_polytope(poly_doc(
                      R"({"dim":2,"vertices":[["0","0"],["1","0"],["2","0"]],"simplices":[[0,1,2]]})")),
                  GeometryError);
  CHECK_THROWS_AS(parse_polytope(poly_doc(
                      R"({"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]],"simplices":[[0,1,2],[2,1,0]]})")),
                  GeometryError);
  CHECK_THROWS_AS(parse_polytope(poly_doc(
                      R"({"dim":2,"vertices":[["0","x"],["1","0"],["0","1"]],"simplices":[[0,1,2]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_polytope(poly_doc(
                      R"({"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]],"simplices":[[0,1]]})")),
                  GeometryError);
  // Duplicate entries in the vertex table are fine; a repeated vertex inside a simplex is not.
  CHECK_NOTHROW(parse_polytope(poly_doc(
      R"({"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["0","0"]],"simplices":[[3,1,2]]})")));
  CHECK_THROWS_AS(parse_polytope(poly_doc(
                      R"({"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["0","0"]],"simplices":[[0,3,2]]})")),
                  GeometryError);
  CHECK_THROWS_AS(parse_polytope(poly_doc(R"({"dim":2,"vertices":[]})")), ParseError);

  auto back = parse_polytope(polytope_to_json(sq));
  CHECK(back.simplices() == sq.simplices());
}

TEST_CASE("interior overlap detection") {
  Simplex a({P({0, 0}), P({1, 0}), P({0, 1})});
  Simplex touching({P({1, 0}), P({0, 1}), P({1, 1})});
  Simplex corner({P({1, 0}), P({2, 0}), P({1, 1})});
  Simplex crossing({P({0, 0}), P({1, 1}), P({0, 1})});
  CHECK_FALSE(interiors_overlap(a, touching));
  CHECK_FALSE(interiors_overlap(a, corner));
  CHECK(interiors_overlap(a, crossing));
  CHECK(interiors_overlap(a, a));

  Simplex t1({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})});
  Simplex t2({P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 1, 1})});
  Simplex t3({P({0, 0, 0}), P({1, 1, 0}), P({0, 1, 0}), P({0, 0, 1})});
  CHECK_FALSE(interiors_overlap(t1, t2));
  CHECK(interiors_overlap(t1, t3));

  // Edge-edge crossing with no vertex inside the other simplex.
  Simplex s1({P({0, 0, 0}), P({4, 0, 0}), P({2, 1, 0}), P({2, 0, 1})});
  Simplex s2({P({2, -1, 1}), P({2, 3, 1}), P({1, 1, -3}), P({3, 1, -3})});
  CHECK(interiors_overlap(s1, s2) == interiors_overlap(s2, s1));

  // Sampled test in R^4.
  auto c4 = shapes::unit_cube(4);
  CHECK(c4.simplices().size() == 24);
  CHECK(c4.volume() == 1);
  CHECK(interiors_overlap(c4.simplices()[0], c4.simplices()[0]));
}
