#include "toriparam/fan.hpp"

#include <algorithm>
#include <functional>

#include "toriparam/error.hpp"

namespace toriparam {

IntMat Fan::ray_matrix() const { return IntMat::from_columns(rays, dim); }

bool Fan::in_some_cone(const std::vector<std::size_t>& ray_indices) const {
  return std::any_of(max_cones.begin(), max_cones.end(), [&](const Cone& c) {
    return std::all_of(ray_indices.begin(), ray_indices.end(), [&](std::size_t i) {
      return std::binary_search(c.ray_indices.begin(), c.ray_indices.end(), i);
    });
  });
}

Fan normal_fan(const LatticePolytope& p) {
  Fan f;
  f.dim = p.dim();
  for (const auto& facet : p.facets()) f.rays.push_back(facet.normal);
  for (const auto& v : p.vertices()) f.max_cones.push_back(Cone{p.tight_facets(v)});
  return f;
}

SmoothnessReport is_smooth(const Fan& f) {
  SmoothnessReport report;
  for (const auto& cone : f.max_cones) {
    std::vector<IntVec> gens;
    for (auto i : cone.ray_indices) gens.push_back(f.rays[i]);
    SmithResult s = smith_normal_form(IntMat::from_columns(gens, f.dim));
    Integer mult = 0;
    if (s.rank == gens.size()) {
      mult = 1;
      for (std::size_t k = 0; k < s.rank; ++k) mult *= s.d(k, k);
    }
    if (mult != 1) {
      report.smooth = false;
      report.singular.push_back(SingularCone{cone, mult});
    }
  }
  return report;
}

std::vector<PrimitiveCollection> minimal_primitive_collections(const Fan& f) {
  std::size_t max_size = 0;
  for (const auto& c : f.max_cones) max_size = std::max(max_size, c.ray_indices.size());
  const std::size_t r = f.ray_count();
  std::vector<PrimitiveCollection> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t target,
                                                          std::size_t start) {
    if (pick.size() == target) {
      if (f.in_some_cone(pick)) return;
      // Minimality: dropping any one ray must give a set inside some cone.
      for (std::size_t drop = 0; drop < pick.size(); ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < pick.size(); ++k)
          if (k != drop) sub.push_back(pick[k]);
        if (!f.in_some_cone(sub)) return;
      }
      out.push_back(PrimitiveCollection{pick});
      return;
    }
    for (std::size_t i = start; i < r; ++i) {
      pick.push_back(i);
      rec(target, i + 1);
      pick.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(max_size + 1, r); ++size) rec(size, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Cone> face_containing(const std::vector<IntVec>& rays, const Cone& cone,
                                    const IntVec& v) {
  if (is_zero(v)) return Cone{};
  const std::size_t dim = v.size();
  const auto& gens = cone.ray_indices;
  std::vector<std::size_t> support;
  bool found = false;
  // Caratheodory: v is in the cone iff it is a nonnegative combination of
  // some linearly independent subset of generators. The union of the
  // positive supports over all such representations is the minimal face.
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<IntVec> cols;
      for (auto k : pick) cols.push_back(rays[gens[k]]);
      IntMat a = IntMat::from_columns(cols, dim);
      if (rank(a) < pick.size()) return;  // supersets are dependent too
      auto sol = solve_rational_independent(a, v);
      if (sol && std::all_of(sol->begin(), sol->end(),
                             [](const Rational& x) { return x >= 0; })) {
        found = true;
        for (std::size_t k = 0; k < pick.size(); ++k)
          if ((*sol)[k] > 0) support.push_back(gens[pick[k]]);
      }
      if (pick.size() == dim) return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  if (!found) return std::nullopt;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return Cone{support};
}

Cone smallest_containing_cone(const Fan& f, const IntVec& v) {
  if (v.size() != f.dim) throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "the zero vector lies in every cone");
  for (const auto& c : f.max_cones) {
    if (auto face = face_containing(f.rays, c, v)) return *face;
  }
  throw Error(ErrorCode::NotInSupport, "vector is outside the support of the fan");
}

}  // namespace toriparam
