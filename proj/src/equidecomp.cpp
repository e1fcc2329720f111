#include "polyspec/equidecomp.hpp"

#include <map>

namespace polyspec {

EquidecompVerdict translation_equidecomposable(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw GeometryError("polytopes live in different dimensions");
  EquidecompVerdict v;
  v.volume_a = a.volume();
  v.volume_b = b.volume();

  std::map<std::string, Flag> flags;
  for (std::size_t r = 1; r < a.dim(); ++r) {
    for (const auto& f : enumerate_flags(a, r)) flags.emplace(f.key(), f);
    for (const auto& f : enumerate_flags(b, r)) flags.emplace(f.key(), f);
  }
  for (const auto& [key, flag] : flags) {
    auto ha = hadwiger_invariant(a, flag);
    auto hb = hadwiger_invariant(b, flag);
    if (ha.rational_part != hb.rational_part) v.witnesses.push_back({flag, std::move(ha), std::move(hb)});
  }
  v.equidecomposable = v.volume_a == v.volume_b && v.witnesses.empty();
  return v;
}

EquidecompVerdict equidecomposable_to_cube(const Polytope& a) {
  EquidecompVerdict v;
  v.volume_a = a.volume();
  v.volume_b = v.volume_a;
  for (const auto& e : invariant_profile(a).nonzero()) {
    HadwigerValue zero;
    zero.rational_part = 0;
    zero.scale_squared = e.value.scale_squared;
    zero.scale = e.value.scale;
    zero.float_value = 0.0;
    v.witnesses.push_back({e.flag, e.value, zero});
  }
  v.equidecomposable = v.witnesses.empty();
  return v;
}

}  // namespace polyspec
