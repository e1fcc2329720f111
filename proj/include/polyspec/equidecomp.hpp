#pragma once

#include "polyspec/hadwiger.hpp"

#include <vector>

namespace polyspec {

struct EquidecompWitness {
  Flag flag;
  HadwigerValue value_a;
  HadwigerValue value_b;
};

struct EquidecompVerdict {
  bool equidecomposable = false;
  Rational volume_a;
  Rational volume_b;
  std::vector<EquidecompWitness> witnesses;  // ordered by flag key
};

/// Equal volume and equal Hadwiger invariants on every r-flag, 1 <= r <= d-1,
/// that either polytope carries. By the completeness of the invariants for
/// translations this decides equidecomposability; no pieces are built.
/// Values on a common V_r share one irrational scale, so comparing the
/// rational parts is exact.
EquidecompVerdict translation_equidecomposable(const Polytope& a, const Polytope& b);

/// Against an abstract cube of the same volume, whose invariants all vanish.
/// Witnesses are the nonzero flags of A, with value_b zero.
EquidecompVerdict equidecomposable_to_cube(const Polytope& a);

}  // namespace polyspec
