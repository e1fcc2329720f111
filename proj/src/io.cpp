#include "polyspec/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace polyspec {

namespace {

Rational coordinate(const Json& x, bool allow_float) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) {
    std::ostringstream os;
    if (x.is_number_unsigned()) {
      os << x.get<std::uint64_t>();
    } else {
      os << x.get<std::int64_t>();
    }
    return Rational(os.str());
  }
  if (x.is_number_float() && allow_float) return rational_from_shortest_decimal(x.get<double>());
  throw ParseError("expected a rational given as a string");
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t count_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + name + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Polytope parse_polytope(const Json& doc, const ValidationOptions& opts) {
  const std::size_t d = count_field(doc, "dim");
  if (d == 0) throw ParseError("dim must be at least 1");
  const Json& verts = field(doc, "vertices");
  const Json& simps = field(doc, "simplices");
  if (!verts.is_array() || !simps.is_array()) throw ParseError("vertices and simplices must be arrays");

  std::vector<Point> table;
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != d) throw GeometryError("vertex has wrong dimension");
    Point p;
    for (const auto& x : v) p.push_back(coordinate(x, false));
    table.push_back(std::move(p));
  }
  if (simps.empty()) throw GeometryError("polytope has no simplices");

  std::vector<Simplex> simplices;
  for (const auto& s : simps) {
    if (!s.is_array() || s.size() != d + 1) throw GeometryError("simplex must list dim+1 vertex indices");
    std::vector<Point> pts;
    std::set<std::size_t> seen;
    std::set<Point> seen_pts;
    for (const auto& i : s) {
      if (!i.is_number_integer() || i.get<long long>() < 0) throw ParseError("vertex index must be a non-negative integer");
      const auto k = i.get<std::size_t>();
      if (k >= table.size()) throw GeometryError("vertex index out of range");
      if (!seen.insert(k).second || !seen_pts.insert(table[k]).second) {
        throw GeometryError("simplex repeats a vertex");
      }
      pts.push_back(table[k]);
    }
    simplices.emplace_back(std::move(pts));
  }
  return Polytope(d, std::move(simplices), opts);
}

Json polytope_to_json(const Polytope& a) {
  std::map<Point, std::size_t> index;
  Json verts = Json::array();
  Json simps = Json::array();
  for (const auto& s : a.simplices()) {
    Json ids = Json::array();
    for (const auto& v : s.vertices()) {
      auto [it, fresh] = index.emplace(v, index.size());
      if (fresh) verts.push_back(vector_to_json(v));
      ids.push_back(it->second);
    }
    simps.push_back(std::move(ids));
  }
  return Json{{"dim", a.dim()}, {"vertices", std::move(verts)}, {"simplices", std::move(simps)}};
}

Flag parse_flag(const Json& doc, std::size_t d) {
  const std::size_t r = count_field(doc, "r");
  if (r > d) throw GeometryError("flag rank exceeds the dimension");
  const Json& ns = field(doc, "normals");
  if (!ns.is_array() || ns.size() != d - r) throw GeometryError("flag needs d - r normals");
  std::vector<RationalVector> normals;
  for (const auto& n : ns) {
    if (!n.is_array() || n.size() != d) throw GeometryError("flag normal has wrong dimension");
    RationalVector u;
    for (const auto& x : n) u.push_back(coordinate(x, false));
    normals.push_back(std::move(u));
  }
  return Flag::from_normals(d, r, normals);
}

Json flag_to_json(const Flag& f) {
  Json normals = Json::array();
  for (std::size_t j = f.ambient_dim(); j-- > f.r();) {
    Json u = Json::array();
    for (const auto& z : f.normal(j)) u.push_back(z.get_str());
    normals.push_back(std::move(u));
  }
  return Json{{"r", f.r()}, {"normals", std::move(normals)}};
}

SpectrumCandidate parse_spectrum(const Json& doc) {
  const Json& pts = field(doc, "points");
  if (!pts.is_array()) throw ParseError("points must be an array");
  std::vector<RationalVector> out;
  for (const auto& p : pts) {
    if (!p.is_array() || p.empty()) throw ParseError("each point must be a non-empty array");
    RationalVector v;
    for (const auto& x : p) v.push_back(coordinate(x, true));
    out.push_back(std::move(v));
  }
  try {
    return SpectrumCandidate(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const HadwigerValue& v) {
  return Json{{"rational_part", rational_json(v.rational_part)},
              {"scale_squared", rational_json(v.scale_squared)},
              {"value", format_double(v.float_value)}};
}

Json to_json(const InvariantProfile& p) {
  Json entries = Json::array();
  for (const auto& e : p.entries) {
    entries.push_back(Json{{"flag", flag_to_json(e.flag)}, {"value", to_json(e.value)}, {"zero", e.value.is_zero()}});
  }
  return Json{{"all_zero", p.all_zero()}, {"entries", std::move(entries)}};
}

Json to_json(const ComplexValue& v) {
  return Json{{"re", v.re_string()}, {"im", v.im_string()}, {"precision_bits", v.precision_bits}};
}

Json to_json(const OrthogonalityReport& r, const SpectrumCandidate& lambda) {
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back(Json{{"lambda", vector_to_json(lambda.points()[v.i])},
                      {"lambda_prime", vector_to_json(lambda.points()[v.j])},
                      {"modulus", format_double(v.modulus)}});
  }
  return Json{{"checked_pairs", r.checked_pairs},
              {"min_separation", r.min_separation ? Json(format_double(*r.min_separation)) : Json(nullptr)},
              {"tol", format_double(r.tol)},
              {"violations", std::move(vs)}};
}

Json to_json(const Certificate& c) {
  return Json{{"flag", flag_to_json(c.flag)}, {"value", to_json(c.value)}, {"statement", to_string(c.statement)}};
}

Json to_json(const EquidecompVerdict& v) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    ws.push_back(Json{{"flag", flag_to_json(w.flag)}, {"value_a", to_json(w.value_a)}, {"value_b", to_json(w.value_b)}});
  }
  auto volume = [](const Rational& q) {
    return Json{{"exact", rational_json(q)}, {"approx", format_double(q.get_d())}};
  };
  return Json{{"equidecomposable", v.equidecomposable},
              {"volume_a", volume(v.volume_a)},
              {"volume_b", volume(v.volume_b)},
              {"witnesses", std::move(ws)}};
}

Json to_json(const MainTermReport& r) {
  Json witness = r.configurations_tried > 0 ? vector_to_json(r.witness.to_rational()) : Json(nullptr);
  return Json{{"eta", format_double(r.eta)},
              {"alpha_used", format_double(r.alpha_used)},
              {"delta_used", format_double(r.delta_used)},
              {"L_used", format_double(r.L_used)},
              {"samples", r.samples},
              {"max_residual", format_double(r.max_residual)},
              {"pass", r.pass},
              {"empirical_c", r.empirical_c ? Json(format_double(*r.empirical_c)) : Json(nullptr)},
              {"witness", std::move(witness)},
              {"configurations_tried", r.configurations_tried}};
}

Json to_json(const CentralSymmetryReport& r) {
  return Json{{"body_symmetric", r.body_symmetric},
              {"center", r.center ? vector_to_json(*r.center) : Json(nullptr)},
              {"facets_symmetric", r.facets_symmetric ? Json(*r.facets_symmetric) : Json("not_computed")},
              {"facet_count", r.facet_count}};
}

}  // namespace polyspec
