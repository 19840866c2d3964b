#include "toriparam/parametrization.hpp"

#include <algorithm>
#include <sstream>

#include "toriparam/error.hpp"

namespace toriparam {

namespace {

std::size_t common_nvars(const ParamTuple& f) {
  if (f.empty()) throw Error(ErrorCode::LengthMismatch, "empty tuple");
  for (const auto& x : f) {
    if (x.nvars() != f.front().nvars()) {
      throw Error(ErrorCode::VariableCountMismatch, "tuple entries use different variable counts");
    }
  }
  return f.front().nvars();
}

}  // namespace

DeltaPolynomial DeltaPolynomial::monomial(const IntVec& m) {
  DeltaPolynomial d;
  d.coefficients.emplace(m, 1);
  return d;
}

bool DeltaPolynomial::is_monomial() const {
  return coefficients.size() == 1 && coefficients.begin()->second == 1;
}

bool ParamSystem::is_monomial() const {
  return std::all_of(components.begin(), components.end(),
                     [](const DeltaPolynomial& d) { return d.is_monomial(); });
}

IntVec ParamSystem::monomial_exponents(std::size_t j) const {
  if (!components.at(j).is_monomial()) {
    throw Error(ErrorCode::NotMonomialSystem, "component is not a single monomial");
  }
  return hyperplane_exponents(hyperplanes, components[j].coefficients.begin()->first);
}

ParamSystem make_system(std::size_t dim, std::vector<Facet> hyperplanes,
                        std::vector<DeltaPolynomial> components) {
  if (components.empty()) throw Error(ErrorCode::InvalidInput, "a system needs components");
  bool any = false;
  for (auto& c : components) {
    for (auto it = c.coefficients.begin(); it != c.coefficients.end();) {
      if (it->first.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "lattice point has wrong length");
      }
      hyperplane_exponents(hyperplanes, it->first);  // throws outside the polytope
      it = it->second == 0 ? c.coefficients.erase(it) : std::next(it);
    }
    any = any || !c.is_zero();
  }
  if (!any) throw Error(ErrorCode::InvalidInput, "all components of the system are zero");
  return ParamSystem{dim, std::move(hyperplanes), std::move(components)};
}

MultiPoly expand_component(const ParamSystem& s, std::size_t j) {
  MultiPoly out(s.variable_count());
  for (const auto& [m, a] : s.components.at(j).coefficients) {
    out += MultiPoly::monomial(hyperplane_exponents(s.hyperplanes, m), a);
  }
  return out;
}

std::vector<MultiPoly> expand_system(const ParamSystem& s) {
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j < s.size(); ++j) out.push_back(expand_component(s, j));
  return out;
}

ParamSystem build_P_Delta(const LatticePolytope& p, const std::vector<Facet>& hyperplanes) {
  std::vector<DeltaPolynomial> comps;
  for (const auto& m : lattice_points(p)) comps.push_back(DeltaPolynomial::monomial(m));
  return make_system(p.dim(), hyperplanes, std::move(comps));
}

ParamSystem build_P_Delta(const LatticePolytope& p) { return build_P_Delta(p, p.facets()); }

Selection select_P_A(const LatticePolytope& p, const std::vector<IntVec>& a_set,
                     const std::vector<Facet>& hyperplanes) {
  if (a_set.empty()) throw Error(ErrorCode::InvalidInput, "the point set is empty");
  std::vector<DeltaPolynomial> comps;
  for (const auto& m : a_set) {
    if (m.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "lattice point has wrong length");
    if (!p.contains(m)) {
      std::ostringstream os;
      os << m << " lies outside the polytope";
      throw Error(ErrorCode::PointOutsidePolytope, os.str());
    }
    comps.push_back(DeltaPolynomial::monomial(m));
  }
  Selection sel{make_system(p.dim(), hyperplanes, std::move(comps)), false, false, {}};
  // A lies in Delta, so conv(A) = Delta iff every vertex is in A.
  sel.hull_is_polytope = std::all_of(p.vertices().begin(), p.vertices().end(), [&](const IntVec& v) {
    return std::find(a_set.begin(), a_set.end(), v) != a_set.end();
  });
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < a_set.size(); ++i) {
    IntVec d(p.dim());
    for (std::size_t k = 0; k < p.dim(); ++k) d[k] = a_set[i][k] - a_set[0][k];
    diffs.push_back(d);
  }
  if (!diffs.empty()) {
    SmithResult s = smith_normal_form(IntMat::from_columns(diffs, p.dim()));
    sel.generates_affinely = s.rank == p.dim();
    for (std::size_t k = 0; k < s.rank && sel.generates_affinely; ++k)
      sel.generates_affinely = s.d(k, k) == 1;
  }
  if (!sel.hull_is_polytope) sel.warnings.push_back("the convex hull of the point set is not the polytope");
  if (!sel.generates_affinely) sel.warnings.push_back("the point set does not generate the lattice affinely");
  return sel;
}

Selection select_P_A(const LatticePolytope& p, const std::vector<IntVec>& a_set) {
  return select_P_A(p, a_set, p.facets());
}

IrreducibilityReport is_sigma_irreducible(const ParamTuple& f, const Fan& fan) {
  if (f.size() != fan.ray_count()) {
    throw Error(ErrorCode::LengthMismatch, "tuple length differs from the number of rays");
  }
  common_nvars(f);
  IrreducibilityReport rep;
  for (const auto& c : minimal_primitive_collections(fan)) {
    std::vector<MultiPoly> entries;
    for (auto i : c.ray_indices) entries.push_back(f[i]);
    MultiPoly g = gcd_many(entries);
    if (!(g.is_constant() && !g.is_zero())) {
      rep.irreducible = false;
      rep.violated.push_back(c);
    }
  }
  return rep;
}

MultiPoly f_power(const ParamTuple& f, const IntVec& exponents) {
  if (exponents.size() != f.size()) throw Error(ErrorCode::LengthMismatch, "exponent vector has wrong length");
  MultiPoly out = MultiPoly::constant(common_nvars(f), 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (exponents[i] < 0) throw Error(ErrorCode::PointOutsidePolytope, "negative exponent");
    if (exponents[i] > 0) out *= pow(f[i], exponents[i].get_ui());
  }
  return out;
}

MultiPoly f_power(const ParamTuple& f, const IntVec& m, const LatticePolytope& p) {
  return f_power(f, delta_monomial(p, m));
}

Composition compose(const ParamSystem& s, const ParamTuple& f) {
  if (f.size() != s.variable_count()) {
    throw Error(ErrorCode::LengthMismatch, "tuple length differs from the number of facet variables");
  }
  const std::size_t nv = common_nvars(f);
  Composition out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    out.raw.push_back(substitute(expand_component(s, j), f, nv));
  }
  out.content = gcd_many(out.raw);
  for (const auto& h : out.raw) {
    if (out.content.is_zero()) {
      out.reduced.push_back(h);
      continue;
    }
    auto q = divide_exact(h, out.content);
    out.reduced.push_back(*q);
  }
  return out;
}

bool is_rational_parametrization(const std::vector<MultiPoly>& h) {
  if (h.empty()) return false;
  MultiPoly g = gcd_many(h);
  return !g.is_zero() && g.is_constant();
}

bool same_parametrization(const std::vector<MultiPoly>& h, const std::vector<MultiPoly>& h2) {
  if (h.size() != h2.size()) return false;
  std::optional<Rational> c;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero() != h2[i].is_zero()) return false;
    if (h[i].is_zero()) continue;
    auto r = constant_ratio(h[i], h2[i]);
    if (!r || (c && *c != *r)) return false;
    c = r;
  }
  return c.has_value();
}

bool check_implicit(const std::vector<MultiPoly>& h, const MultiPoly& relation) {
  if (relation.nvars() != h.size()) {
    throw Error(ErrorCode::VariableCountMismatch,
                "relation variables differ from the number of components");
  }
  if (h.empty()) return relation.is_zero();
  return substitute(relation, h, common_nvars(h)).is_zero();
}

}  // namespace toriparam
