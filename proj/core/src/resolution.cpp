#include "toriparam/resolution.hpp"

#include <algorithm>

#include "toriparam/error.hpp"

namespace toriparam {

namespace {

Integer det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

IntVec add_multiple(const IntVec& w, const Integer& t, const IntVec& p) {
  return IntVec{w[0] + t * p[0], w[1] + t * p[1]};
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<IntVec> hirzebruch_jung_rays(const IntVec& a_in, const IntVec& b_in) {
  if (a_in.size() != 2 || b_in.size() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, "cone generators must be planar");
  }
  IntVec a = primitive_vector(a_in), b = primitive_vector(b_in);
  Integer d = det2(a, b);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "cone generators are collinear");
  bool flipped = d < 0;
  if (flipped) std::swap(a, b);
  // w with det(a, w) = 1.
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[0].get_mpz_t(), a[1].get_mpz_t());
  IntVec w{-t, s};
  std::vector<IntVec> out;
  IntVec p = a;
  while (true) {
    Integer k = ceil_div(-det2(w, b), det2(p, b));
    IntVec q = add_multiple(w, k, p);
    if (q == b) break;
    out.push_back(q);
    w = IntVec{-p[0], -p[1]};
    p = q;
  }
  if (flipped) std::reverse(out.begin(), out.end());
  return out;
}

ResolvedFan minimal_resolution_2d(const Fan& f) {
  if (f.dim != 2) throw Error(ErrorCode::UnsupportedDimension, "resolution is implemented for surfaces only");
  ResolvedFan rf;
  rf.fan.dim = 2;
  rf.fan.rays = f.rays;
  rf.original_ray_count = f.ray_count();
  for (const auto& cone : f.max_cones) {
    if (cone.ray_indices.size() != 2) throw Error(ErrorCode::InvalidInput, "planar cones need two rays");
    std::size_t ia = cone.ray_indices[0], ib = cone.ray_indices[1];
    Integer d = det2(f.rays[ia], f.rays[ib]);
    if (abs(d) == 1) {
      rf.fan.max_cones.push_back(cone);
      continue;
    }
    // Walk counterclockwise so the inserted rays are in angular order.
    if (d < 0) std::swap(ia, ib);
    std::vector<std::size_t> chain{ia};
    for (auto& ray : hirzebruch_jung_rays(f.rays[ia], f.rays[ib])) {
      chain.push_back(rf.fan.rays.size());
      rf.fan.rays.push_back(ray);
      rf.origin.push_back(cone);
    }
    chain.push_back(ib);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      std::vector<std::size_t> pair{chain[k], chain[k + 1]};
      std::sort(pair.begin(), pair.end());
      rf.fan.max_cones.push_back(Cone{pair});
    }
  }
  return rf;
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.dim != coarse.dim) return false;
  for (const auto& cone : fine.max_cones) {
    bool inside = std::any_of(coarse.max_cones.begin(), coarse.max_cones.end(), [&](const Cone& c) {
      return std::all_of(cone.ray_indices.begin(), cone.ray_indices.end(), [&](std::size_t i) {
        return face_containing(coarse.rays, c, fine.rays[i]).has_value();
      });
    });
    if (!inside) return false;
  }
  return true;
}

std::vector<VirtualFacet> virtual_offsets(const LatticePolytope& p, const ResolvedFan& rf) {
  Fan original = normal_fan(p);
  if (rf.original_ray_count != original.ray_count() || rf.fan.dim != p.dim()) {
    throw Error(ErrorCode::NotARefinement, "resolved fan does not extend the normal fan");
  }
  for (std::size_t i = 0; i < original.ray_count(); ++i) {
    if (rf.fan.rays[i] != original.rays[i]) {
      throw Error(ErrorCode::NotARefinement, "original rays must come first, in facet order");
    }
  }
  if (!is_refinement(rf.fan, original)) {
    throw Error(ErrorCode::NotARefinement, "a cone is not contained in any cone of the normal fan");
  }
  std::vector<VirtualFacet> out;
  for (std::size_t i = 0; i < rf.fan.ray_count(); ++i) {
    const IntVec& n = rf.fan.rays[i];
    VirtualFacet vf{n, 0, {}};
    if (i < original.ray_count()) {
      vf.offset = p.facets()[i].offset;
    } else {
      Integer lo = dot(p.vertices().front(), n);
      for (const auto& v : p.vertices()) lo = std::min(lo, Integer(dot(v, n)));
      vf.offset = -lo;
    }
    for (const auto& v : p.vertices())
      if (dot(v, n) + vf.offset == 0) vf.face.push_back(v);
    if (i >= original.ray_count()) {
      // The touching face must be the face dual to the smallest cone.
      Cone sigma = smallest_containing_cone(original, n);
      std::vector<IntVec> dual;
      for (const auto& v : p.vertices()) {
        std::vector<std::size_t> tight = p.tight_facets(v);
        if (std::includes(tight.begin(), tight.end(), sigma.ray_indices.begin(),
                          sigma.ray_indices.end())) {
          dual.push_back(v);
        }
      }
      if (dual != vf.face) {
        throw Error(ErrorCode::NotARefinement, "virtual hyperplane touches the wrong face");
      }
    }
    out.push_back(std::move(vf));
  }
  return out;
}

std::vector<Facet> virtual_hyperplanes(const std::vector<VirtualFacet>& v) {
  std::vector<Facet> out;
  for (const auto& x : v) out.push_back(Facet{x.normal, x.offset});
  return out;
}

IntVec offsets_of(const std::vector<VirtualFacet>& v) {
  IntVec out;
  for (const auto& x : v) out.push_back(x.offset);
  return out;
}

IntVec delta_monomial_resolved(const LatticePolytope& p, const ResolvedFan& rf, const IntVec& m) {
  if (m.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  if (!p.contains(m)) throw Error(ErrorCode::PointOutsidePolytope, "point lies outside the polytope");
  return hyperplane_exponents(virtual_hyperplanes(virtual_offsets(p, rf)), m);
}

SubtorusDescription compute_G_Delta_Sigma(const ResolvedFan& rf,
                                          const std::vector<VirtualFacet>& offsets) {
  if (offsets.size() != rf.fan.ray_count()) {
    throw Error(ErrorCode::LengthMismatch, "one offset per ray is required");
  }
  return compute_G_Delta(rf.fan, offsets_of(offsets));
}

}  // namespace toriparam
