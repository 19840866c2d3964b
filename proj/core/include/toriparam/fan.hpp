#pragma once

// Complete rational fans given by primitive rays and maximal cones.

#include <cstddef>
#include <optional>
#include <vector>

#include "toriparam/lattice.hpp"
#include "toriparam/polytope.hpp"

namespace toriparam {

struct Cone {
  std::vector<std::size_t> ray_indices;  // sorted, distinct

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<Cone> max_cones;

  std::size_t ray_count() const noexcept { return rays.size(); }
  // dim x r matrix whose columns are the rays.
  IntMat ray_matrix() const;
  // True if every listed ray is a generator of a single maximal cone.
  bool in_some_cone(const std::vector<std::size_t>& ray_indices) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct PrimitiveCollection {
  std::vector<std::size_t> ray_indices;  // sorted

  friend bool operator==(const PrimitiveCollection&, const PrimitiveCollection&) = default;
  friend auto operator<=>(const PrimitiveCollection&, const PrimitiveCollection&) = default;
};

// Rays are the facet normals in facet order; one maximal cone per vertex.
Fan normal_fan(const LatticePolytope& p);

struct SingularCone {
  Cone cone;
  // Index of the sublattice spanned by the generators in the lattice of
  // their span (|det| for full-dimensional simplicial cones); 0 if the
  // generators are linearly dependent.
  Integer multiplicity;
};

struct SmoothnessReport {
  bool smooth = true;
  std::vector<SingularCone> singular;
};

SmoothnessReport is_smooth(const Fan& f);

// Minimal sets of rays not contained in any cone, sorted lexicographically.
std::vector<PrimitiveCollection> minimal_primitive_collections(const Fan& f);

// The smallest face of `generators` (a cone given by its rays, as
// indices into `rays`) containing v, or nullopt if v is outside the cone.
std::optional<Cone> face_containing(const std::vector<IntVec>& rays,
                                    const Cone& cone, const IntVec& v);

// Smallest cone of f containing v != 0. Throws NotInSupport if none does.
Cone smallest_containing_cone(const Fan& f, const IntVec& v);

}  // namespace toriparam
