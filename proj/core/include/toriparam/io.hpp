#pragma once

// JSON forms of the main records. Ray and facet indices in JSON are 1-based
// so they match the names x1, x2, ...

#include <nlohmann/json.hpp>

#include "toriparam/quotient_group.hpp"
#include "toriparam/decomposition.hpp"
#include "toriparam/fan.hpp"
#include "toriparam/parametrization.hpp"
#include "toriparam/polytope.hpp"
#include "toriparam/resolution.hpp"

namespace toriparam::io {

using nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
json to_json(const Integer& v);
json to_json(const IntVec& v);
Integer integer_from_json(const json& j);
IntVec intvec_from_json(const json& j);
json to_json(const Rational& r);  // "p/q" or "p"
Rational rational_from_json(const json& j);

// {"dim": n, "vertices": [...]} or with "facets": [{"normal": [...], "offset": a}].
// Supplied facets keep their order; otherwise facets are sorted by normal.
LatticePolytope polytope_from_json(const json& j);
json to_json(const LatticePolytope& p);

json to_json(const Cone& c);
json to_json(const Fan& f);
json to_json(const SmoothnessReport& r);
json to_json(const PrimitiveCollection& c);

json to_json(const SubtorusDescription& g, const std::vector<std::string>& names);

json to_json(const ResolvedFan& rf, const std::vector<VirtualFacet>& offsets);

// {"resolved": bool?, "polytope": {...}?, "monomials": [[m], ...]} or
// {"components": [{"coefficients": [{"m": [...], "a": "p/q"}]}]}. A
// supplied polytope must equal p. Resolved systems use the virtual facets
// of the minimal resolution of p's normal fan.
struct LoadedSystem {
  ParamSystem system;
  Fan fan;  // the fan whose rays index the facet variables
  bool resolved = false;
};
LoadedSystem system_from_json(const json& j, const LatticePolytope& p);
json to_json(const ParamSystem& s);

json to_json(const DecompositionResult& d);

}  // namespace toriparam::io
