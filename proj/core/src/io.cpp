#include "toriparam/io.hpp"

#include "toriparam/error.hpp"
#include "toriparam/poly_text.hpp"

namespace toriparam::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

std::string poly_text(const MultiPoly& p) { return render(p, VarKind::Param); }

}  // namespace

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json to_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("malformed integer '" + j.get<std::string>() + "'");
    return v;
  }
  bad("expected an integer, got " + j.dump());
}

IntVec intvec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty integer array, got " + j.dump());
  IntVec out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

json to_json(const Rational& r) { return json(r.get_str()); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational, got " + j.dump());
}

LatticePolytope polytope_from_json(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<long>() <= 0) bad("'dim' must be a positive integer");
  std::size_t dim = d.get<std::size_t>();
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("'vertices' must be an array");
  std::vector<IntVec> vertices;
  for (const auto& v : vs) vertices.push_back(intvec_from_json(v));
  if (!j.contains("facets")) return polytope_from_vertices(dim, vertices);
  std::vector<Facet> facets;
  for (const auto& f : j.at("facets")) {
    facets.push_back(Facet{intvec_from_json(field(f, "normal")), integer_from_json(field(f, "offset"))});
  }
  return LatticePolytope::from_h_representation(dim, vertices, facets);
}

json to_json(const LatticePolytope& p) {
  json vs = json::array(), fs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  for (const auto& f : p.facets()) fs.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  return {{"dim", p.dim()}, {"vertices", vs}, {"facets", fs}};
}

json to_json(const Cone& c) { return one_based(c.ray_indices); }

json to_json(const PrimitiveCollection& c) { return one_based(c.ray_indices); }

json to_json(const Fan& f) {
  json rays = json::array(), cones = json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  for (const auto& c : f.max_cones) cones.push_back(to_json(c));
  return {{"dim", f.dim}, {"rays", rays}, {"max_cones", cones}};
}

json to_json(const SmoothnessReport& r) {
  json sing = json::array();
  for (const auto& s : r.singular) {
    sing.push_back({{"cone", to_json(s.cone)}, {"multiplicity", to_json(s.multiplicity)}});
  }
  return {{"smooth", r.smooth}, {"singular_cones", sing}};
}

json to_json(const SubtorusDescription& g, const std::vector<std::string>& names) {
  json cols = json::array();
  for (const auto& c : g.exponent_matrix.columns()) cols.push_back(to_json(c));
  json tors = json::array();
  for (const auto& t : g.torsion) {
    tors.push_back({{"exponents", to_json(t.exponents)}, {"order", to_json(t.order)}});
  }
  return {{"ambient_dimension", g.r},
          {"dimension", g.dimension()},
          {"parameters", names},
          {"exponent_columns", cols},
          {"torsion", tors},
          {"text", render_subgroup(g, names)}};
}

json to_json(const ResolvedFan& rf, const std::vector<VirtualFacet>& offsets) {
  json out = to_json(rf.fan);
  json added = json::array();
  for (std::size_t k = 0; k < rf.added_count(); ++k) {
    std::size_t idx = rf.original_ray_count + k;
    added.push_back({{"index", idx + 1}, {"ray", to_json(rf.fan.rays[idx])}, {"origin", to_json(rf.origin[k])}});
  }
  json vo = json::array();
  for (const auto& v : offsets) {
    json face = json::array();
    for (const auto& x : v.face) face.push_back(to_json(x));
    vo.push_back({{"normal", to_json(v.normal)}, {"offset", to_json(v.offset)}, {"face", face}});
  }
  out["original_ray_count"] = rf.original_ray_count;
  out["added_rays"] = added;
  out["virtual_offsets"] = vo;
  return out;
}

LoadedSystem system_from_json(const json& j, const LatticePolytope& p) {
  if (!j.is_object()) bad("a system must be a JSON object");
  if (j.contains("polytope") && !(polytope_from_json(j.at("polytope")) == p)) {
    bad("the system's polytope differs from the given polytope");
  }
  LoadedSystem out;
  out.resolved = j.value("resolved", false);
  std::vector<Facet> hyperplanes = p.facets();
  out.fan = normal_fan(p);
  if (out.resolved) {
    ResolvedFan rf = minimal_resolution_2d(out.fan);
    hyperplanes = virtual_hyperplanes(virtual_offsets(p, rf));
    out.fan = rf.fan;
  }
  std::vector<DeltaPolynomial> comps;
  if (j.contains("monomials")) {
    for (const auto& m : j.at("monomials")) comps.push_back(DeltaPolynomial::monomial(intvec_from_json(m)));
  } else if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      DeltaPolynomial d;
      for (const auto& t : field(c, "coefficients")) {
        IntVec m = intvec_from_json(field(t, "m"));
        Rational a = rational_from_json(field(t, "a"));
        auto [it, ins] = d.coefficients.emplace(m, a);
        if (!ins) it->second += a;
      }
      comps.push_back(std::move(d));
    }
  } else {
    bad("a system needs 'monomials' or 'components'");
  }
  out.system = make_system(p.dim(), hyperplanes, std::move(comps));
  return out;
}

json to_json(const ParamSystem& s) {
  json comps = json::array();
  std::vector<MultiPoly> expanded = expand_system(s);
  for (std::size_t j = 0; j < s.size(); ++j) {
    json coeffs = json::array();
    for (const auto& [m, a] : s.components[j].coefficients) {
      coeffs.push_back({{"m", to_json(m)}, {"a", to_json(a)}});
    }
    comps.push_back({{"coefficients", coeffs}, {"polynomial", render(expanded[j], VarKind::Facet)}});
  }
  return {{"components", comps}};
}

json to_json(const DecompositionResult& d) {
  json f = json::array();
  for (const auto& x : d.f) f.push_back(poly_text(x));
  return {{"content", poly_text(d.content)},
          {"scalar", to_json(d.scalar)},
          {"f", f},
          {"absorbed", d.absorbed},
          {"normalization", d.normalization}};
}

}  // namespace toriparam::io
