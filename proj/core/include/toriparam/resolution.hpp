#pragma once

// Minimal resolution of complete 2-dimensional fans and the virtual facet
// data that extends Delta-monomials to the resolved variety.

#include <cstddef>
#include <vector>

#include "toriparam/quotient_group.hpp"
#include "toriparam/fan.hpp"
#include "toriparam/polytope.hpp"

namespace toriparam {

struct ResolvedFan {
  Fan fan;                         // original rays first, then inserted ones
  std::size_t original_ray_count = 0;
  std::vector<Cone> origin;        // per inserted ray: smallest original cone

  std::size_t added_count() const noexcept { return fan.ray_count() - original_ray_count; }
};

struct VirtualFacet {
  IntVec normal;
  Integer offset;
  std::vector<IntVec> face;  // vertices of Delta on the hyperplane
};

// Lattice points on the compact boundary of conv(cone ∩ Z^2 \ {0}) strictly
// between the generators a and b, in order from a to b.
std::vector<IntVec> hirzebruch_jung_rays(const IntVec& a, const IntVec& b);

// Subdivides every singular cone; smooth fans are returned unchanged.
// Throws UnsupportedDimension unless dim = 2.
ResolvedFan minimal_resolution_2d(const Fan& f);

// Does every maximal cone of `fine` lie in a maximal cone of `coarse`?
bool is_refinement(const Fan& fine, const Fan& coarse);

// One entry per ray of rf.fan. Throws NotARefinement if rf does not refine
// the normal fan of p with the facet normals as its first rays.
std::vector<VirtualFacet> virtual_offsets(const LatticePolytope& p, const ResolvedFan& rf);

std::vector<Facet> virtual_hyperplanes(const std::vector<VirtualFacet>& v);
IntVec offsets_of(const std::vector<VirtualFacet>& v);

IntVec delta_monomial_resolved(const LatticePolytope& p, const ResolvedFan& rf, const IntVec& m);

SubtorusDescription compute_G_Delta_Sigma(const ResolvedFan& rf,
                                          const std::vector<VirtualFacet>& offsets);

}  // namespace toriparam
