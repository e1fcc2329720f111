#include "polyspec/hadwiger.hpp"

#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace polyspec {

namespace {

FaceSimplex subface(const FaceSimplex& f, std::size_t drop) {
  std::vector<Point> vs;
  for (std::size_t i = 0; i < f.vertices().size(); ++i) {
    if (i != drop) vs.push_back(f.vertex(i));
  }
  return FaceSimplex(std::move(vs));
}

void descend(const FaceSimplex& current, std::size_t j, const Flag& flag, std::vector<FaceSimplex>& faces,
             std::vector<int>& signs, std::vector<FaceChain>& out) {
  if (j == flag.r()) {
    FaceChain chain;
    chain.faces.assign(faces.rbegin(), faces.rend());
    chain.signs.assign(signs.rbegin(), signs.rend());
    out.push_back(std::move(chain));
    return;
  }
  // Candidate F_{j-1}: drop one vertex of F_j; parallel to V_{j-1} iff all
  // its vertices share the same value of <u_{j-1}, .>.
  const RationalVector u = flag.normal_rational(j - 1);
  const Point centroid = current.centroid();
  for (std::size_t drop = 0; drop < current.vertices().size(); ++drop) {
    FaceSimplex next = subface(current, drop);
    const Rational level = dot(u, next.vertex(0));
    bool parallel = true;
    for (std::size_t i = 1; i < next.vertices().size() && parallel; ++i) {
      parallel = dot(u, next.vertex(i)) == level;
    }
    if (!parallel) continue;
    const int side = sgn(dot(u, centroid) - level);
    faces.push_back(next);
    signs.push_back(side < 0 ? +1 : -1);
    descend(next, j - 1, flag, faces, signs, out);
    faces.pop_back();
    signs.pop_back();
  }
}

Rational projected_volume(const FaceSimplex& f, const std::vector<std::size_t>& pivots) {
  const std::size_t r = f.dim();
  if (r == 0) return 1;
  Matrix m(r, r);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t c = 0; c < r; ++c) m[i - 1][c] = f.vertex(i)[pivots[c]] - f.vertex(0)[pivots[c]];
  }
  Integer fact = 1;
  for (std::size_t i = 2; i <= r; ++i) fact *= static_cast<unsigned long>(i);
  return abs(determinant(m)) / Rational(fact);
}

}  // namespace

int FaceChain::sign_product() const {
  int p = 1;
  for (int s : signs) p *= s;
  return p;
}

std::vector<FaceChain> face_chains(const Simplex& s, const Flag& flag) {
  if (flag.ambient_dim() != s.ambient_dim() || s.dim() != s.ambient_dim()) {
    throw GeometryError("flag and simplex dimensions differ");
  }
  std::vector<FaceChain> out;
  std::vector<FaceSimplex> faces{s};
  std::vector<int> signs;
  descend(s, s.dim(), flag, faces, signs, out);
  return out;
}

HadwigerValue hadwiger_invariant(const Polytope& a, const Flag& flag) {
  if (flag.r() == 0) throw GeometryError("Hadwiger functionals are defined for 1 <= r <= d");
  HadwigerValue h;
  if (flag.r() == a.dim()) {
    h.rational_part = a.volume();
  } else {
    const Subspace& vr = flag.subspace(flag.r());
    for (const auto& s : a.simplices()) {
      for (const auto& chain : face_chains(s, flag)) {
        h.rational_part += chain.sign_product() * projected_volume(chain.bottom(), vr.pivots());
      }
    }
    h.scale_squared = vr.projection_scale_squared();
  }
  h.scale = std::sqrt(h.scale_squared.get_d());
  h.float_value = h.scale * h.rational_part.get_d();
  return h;
}

double FlagMeasure::total_mass() const {
  double m = 0;
  for (const auto& t : terms) m += t.sign * face_volume(t.face).volume;
  return m;
}

std::vector<std::pair<FaceSimplex, int>> FlagMeasure::cancelled() const {
  std::vector<std::pair<FaceSimplex, int>> merged;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& t : terms) {
    auto [it, inserted] = index.emplace(t.face.key(), merged.size());
    if (inserted) {
      merged.emplace_back(t.face, t.sign);
    } else {
      merged[it->second].second += t.sign;
    }
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  return merged;
}

FlagMeasure flag_measure(const Polytope& a, const Flag& flag) {
  FlagMeasure m;
  m.r = flag.r();
  for (std::size_t i = 0; i < a.simplices().size(); ++i) {
    for (auto& chain : face_chains(a.simplices()[i], flag)) {
      m.terms.push_back({std::move(chain.faces.front()), chain.sign_product(), i});
    }
  }
  return m;
}

std::vector<Flag> enumerate_flags(const Polytope& a, std::size_t r) {
  const std::size_t d = a.dim();
  if (r >= d) throw std::out_of_range("enumerate_flags needs 0 <= r <= d-1");
  std::vector<Flag> candidates;
  std::unordered_set<std::string> seen;

  // Walk every descending chain of vertex subsets; each determines the
  // subspace sequence it is parallel to.
  struct Walker {
    std::size_t r;
    std::size_t d;
    std::vector<Subspace> stack;  // V_{d-1}, V_{d-2}, ...
    std::vector<Flag>* out;
    std::unordered_set<std::string>* seen;

    void walk(const FaceSimplex& f) {
      if (f.dim() == r) {
        std::vector<Subspace> bottom_up(stack.rbegin(), stack.rend());
        std::string key;
        for (const auto& v : bottom_up) key += v.key();
        if (seen->insert(key).second) out->push_back(Flag::from_subspaces(d, std::move(bottom_up)));
        return;
      }
      for (std::size_t drop = 0; drop < f.vertices().size(); ++drop) {
        FaceSimplex next = subface(f, drop);
        stack.push_back(direction_subspace(next));
        walk(next);
        stack.pop_back();
      }
    }
  } walker{r, d, {}, &candidates, &seen};

  for (const auto& s : a.simplices()) walker.walk(s);

  std::vector<Flag> flags;
  for (auto& f : candidates) {
    if (!flag_measure(a, f).cancelled().empty()) flags.push_back(std::move(f));
  }
  return flags;
}

bool InvariantProfile::all_zero() const {
  for (const auto& e : entries) {
    if (!e.value.is_zero()) return false;
  }
  return true;
}

std::vector<InvariantProfile::Entry> InvariantProfile::nonzero() const {
  std::vector<Entry> out;
  for (const auto& e : entries) {
    if (!e.value.is_zero()) out.push_back(e);
  }
  return out;
}

const InvariantProfile::Entry* InvariantProfile::find(const Flag& flag) const {
  for (const auto& e : entries) {
    if (e.flag == flag) return &e;
  }
  return nullptr;
}

InvariantProfile invariant_profile(const Polytope& a) {
  InvariantProfile p;
  for (std::size_t r = 1; r < a.dim(); ++r) {
    for (auto& f : enumerate_flags(a, r)) {
      HadwigerValue h = hadwiger_invariant(a, f);
      p.entries.push_back({std::move(f), std::move(h)});
    }
  }
  return p;
}

}  // namespace polyspec
