#pragma once

#include "polyspec/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polyspec {

/// F_r < F_{r+1} < ... < F_d of one simplex, each F_j parallel to V_j of a
/// flag, with the adjacency signs eps_r .. eps_{d-1}.
struct FaceChain {
  std::vector<FaceSimplex> faces;  // F_r .. F_d
  std::vector<int> signs;          // eps_r .. eps_{d-1}

  const FaceSimplex& bottom() const { return faces.front(); }
  int sign_product() const;
};

/// All chains of faces of s parallel to the flag. eps_j = +1 iff
/// <u_j, centroid(F_{j+1}) - p> < 0 for a vertex p of F_j.
std::vector<FaceChain> face_chains(const Simplex& s, const Flag& flag);

/// H = scale * rational_part, where rational_part sums signed volumes of the
/// bottom faces projected onto the pivot coordinates of V_r. Zero-testing
/// and comparison of values on the same V_r are exact.
struct HadwigerValue {
  Rational rational_part;
  Rational scale_squared = 1;
  double scale = 1.0;
  double float_value = 0.0;

  bool is_zero() const { return sgn(rational_part) == 0; }
};

HadwigerValue hadwiger_invariant(const Polytope& a, const Flag& flag);

struct FlagMeasureTerm {
  FaceSimplex face;  // r-dimensional; a single vertex when r == 0
  int sign = 1;
  std::size_t simplex_index = 0;
};

/// Signed sum of r-volume measures on the bottom faces of parallel chains.
struct FlagMeasure {
  std::size_t r = 0;
  std::vector<FlagMeasureTerm> terms;

  /// Total signed mass in floating point (Dirac masses count 1).
  double total_mass() const;
  /// Terms with identical faces merged and zero coefficients dropped. The
  /// merged coefficient can exceed 1 in absolute value.
  std::vector<std::pair<FaceSimplex, int>> cancelled() const;
};

FlagMeasure flag_measure(const Polytope& a, const Flag& flag);

/// Canonically oriented r-flags that carry a nonzero flag measure once
/// identical faces from neighbouring simplices cancel. Includes every flag
/// with a nonzero invariant. Order follows first appearance.
std::vector<Flag> enumerate_flags(const Polytope& a, std::size_t r);

struct InvariantProfile {
  struct Entry {
    Flag flag;
    HadwigerValue value;
  };
  std::vector<Entry> entries;

  bool all_zero() const;
  std::vector<Entry> nonzero() const;
  const Entry* find(const Flag& flag) const;
};

/// Invariants over enumerate_flags(a, r) for every 1 <= r <= d-1.
InvariantProfile invariant_profile(const Polytope& a);

}  // namespace polyspec
