#include "oracles.hpp"

#include "polyspec/equidecomp.hpp"
#include "polyspec/shapes.hpp"
#include "polyspec/spectral.hpp"

#include <doctest.h>

using namespace polyspec;

namespace {

Point P(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("verdicts on the standard shapes") {
  auto sq = shapes::unit_cube(2);
  auto moved = translation_equidecomposable(sq, sq.translated({5, 7}));
  CHECK(moved.equidecomposable);
  CHECK(moved.witnesses.empty());

  auto half_square = shapes::box({0, 0}, {1, Rational(1, 2)});
  auto tri = shapes::standard_simplex(2);
  auto v = translation_equidecomposable(tri, half_square);
  CHECK(v.volume_a == v.volume_b);
  CHECK_FALSE(v.equidecomposable);
  CHECK(v.witnesses.size() == 3);
  for (const auto& w : v.witnesses) {
    CHECK_FALSE(w.value_a.is_zero());
    CHECK(w.value_b.is_zero());
  }

  auto rect = shapes::box({0, 0}, {3, 1});
  auto l = translation_equidecomposable(shapes::l_tromino(), rect);
  CHECK(l.equidecomposable);
  CHECK(l.volume_a == 3);

  auto vol = translation_equidecomposable(sq, shapes::box({0, 0}, {2, 1}));
  CHECK_FALSE(vol.equidecomposable);
  CHECK(vol.witnesses.empty());

  CHECK_THROWS_AS(translation_equidecomposable(sq, shapes::unit_cube(3)), GeometryError);
}

TEST_CASE("comparison with a cube") {
  CHECK(equidecomposable_to_cube(shapes::unit_cube(3)).equidecomposable);
  CHECK(equidecomposable_to_cube(shapes::l_tromino()).equidecomposable);
  // Volume 2 is not a square of a rational; the cube is abstract.
  CHECK(equidecomposable_to_cube(shapes::box({0, 0}, {2, 1})).equidecomposable);
  auto tri = equidecomposable_to_cube(shapes::standard_simplex(2));
  CHECK_FALSE(tri.equidecomposable);
  CHECK(tri.witnesses.size() == 3);
  CHECK(tri.volume_b == Rational(1, 2));
}

TEST_CASE("reflexivity, symmetry and agreement with certificates") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto a = oracle::random_polytope(rng, d);
    auto b = oracle::random_polytope(rng, d);
    CHECK(translation_equidecomposable(a, a).equidecomposable);
    auto ab = translation_equidecomposable(a, b);
    auto ba = translation_equidecomposable(b, a);
    CHECK(ab.equidecomposable == ba.equidecomposable);
    REQUIRE(ab.witnesses.size() == ba.witnesses.size());
    for (std::size_t k = 0; k < ab.witnesses.size(); ++k) {
      CHECK(ab.witnesses[k].flag == ba.witnesses[k].flag);
      CHECK(ab.witnesses[k].value_a.rational_part == ba.witnesses[k].value_b.rational_part);
      CHECK(ab.witnesses[k].value_b.rational_part == ba.witnesses[k].value_a.rational_part);
    }
    CHECK(non_spectrality_certificate(a).has_value() == !equidecomposable_to_cube(a).equidecomposable);
  }
  CHECK(non_spectrality_certificate(shapes::l_tromino()).has_value() ==
        !equidecomposable_to_cube(shapes::l_tromino()).equidecomposable);
}

TEST_CASE("pieces of a box reassemble to the box") {
  // Cut [0,2]x[0,1] along the segment (1/2,0)-(3/2,1) and re-triangulate each part.
  Polytope left(2, {Simplex({P({0, 0}), {Rational(1, 2), 0}, P({0, 1})}),
                    Simplex({{Rational(1, 2), 0}, {Rational(3, 2), 1}, P({0, 1})})});
  Polytope right(2, {Simplex({{Rational(1, 2), 0}, P({2, 0}), {Rational(3, 2), 1}}),
                     Simplex({P({2, 0}), P({2, 1}), {Rational(3, 2), 1}})});
  std::vector<Simplex> all = left.simplices();
  all.insert(all.end(), right.simplices().begin(), right.simplices().end());
  Polytope whole(2, all);
  CHECK(translation_equidecomposable(whole, shapes::box({0, 0}, {2, 1})).equidecomposable);
  // The trapezoid-like halves are not tiles on their own.
  CHECK_FALSE(equidecomposable_to_cube(left).equidecomposable);

  // The same in R^3: a cube split into its six Kuhn simplices, grouped in halves.
  auto cube = shapes::unit_cube(3);
  std::vector<Simplex> h1(cube.simplices().begin(), cube.simplices().begin() + 3);
  std::vector<Simplex> h2(cube.simplices().begin() + 3, cube.simplices().end());
  std::vector<Simplex> joined = h1;
  joined.insert(joined.end(), h2.begin(), h2.end());
  CHECK(translation_equidecomposable(Polytope(3, joined), shapes::box({0, 0, 0}, {1, 1, 1})).equidecomposable);
}
