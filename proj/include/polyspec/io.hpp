#pragma once

#include "polyspec/asymptotics.hpp"
#include "polyspec/equidecomp.hpp"
#include "polyspec/geometry.hpp"
#include "polyspec/hadwiger.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/spectral.hpp"

#include <json.hpp>

#include <string>

namespace polyspec {

using Json = nlohmann::json;

/// {"dim": d, "vertices": [["p/q", ...], ...], "simplices": [[i0, ..., id], ...]}
/// with 0-based indices. Coordinates are strings (integers as JSON numbers
/// are also accepted). Throws ParseError on malformed documents and
/// GeometryError on invalid geometry.
Polytope parse_polytope(const Json& doc, const ValidationOptions& opts = {});
Json polytope_to_json(const Polytope& a);

/// {"r": r, "normals": [u_{d-1}, ..., u_r]}, entries integers or strings.
Flag parse_flag(const Json& doc, std::size_t d);
Json flag_to_json(const Flag& f);

/// {"points": [[...], ...]}. Strings are read exactly; JSON numbers are read
/// through their shortest round-trip decimal text.
SpectrumCandidate parse_spectrum(const Json& doc);

/// Reads a file and parses it as JSON; ParseError on failure.
Json read_json_file(const std::string& path);

Json to_json(const HadwigerValue& v);
Json to_json(const InvariantProfile& p);
Json to_json(const ComplexValue& v);
Json to_json(const OrthogonalityReport& r, const SpectrumCandidate& lambda);
Json to_json(const Certificate& c);
Json to_json(const EquidecompVerdict& v);
Json to_json(const MainTermReport& r);
Json to_json(const CentralSymmetryReport& r);

Json vector_to_json(const RationalVector& v);

}  // namespace polyspec
