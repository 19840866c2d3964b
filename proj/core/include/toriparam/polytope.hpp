#pragma once

// Full-dimensional lattice polytopes in H- and V-representation.

#include <cstddef>
#include <vector>

#include "toriparam/lattice.hpp"

namespace toriparam {

// The closed half-space <m, normal> + offset >= 0, with `normal` primitive
// and pointing into the polytope.
struct Facet {
  IntVec normal;
  Integer offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

class LatticePolytope {
 public:
  // Validates the record against its invariants and throws InvalidPolytope
  // (or NotFullDimensional) on violation. Vertex and facet order are kept,
  // so callers control the facet-variable labels.
  static LatticePolytope from_h_representation(std::size_t dim,
                                               std::vector<IntVec> vertices,
                                               std::vector<Facet> facets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVec>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }

  bool contains(const IntVec& m) const;
  // Indices of facets whose hyperplane contains m.
  std::vector<std::size_t> tight_facets(const IntVec& m) const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  LatticePolytope(std::size_t dim, std::vector<IntVec> vertices,
                  std::vector<Facet> facets)
      : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  std::size_t dim_ = 0;
  std::vector<IntVec> vertices_;
  std::vector<Facet> facets_;

  friend LatticePolytope polytope_from_vertices(std::size_t,
                                                const std::vector<IntVec>&);
};

// Convex hull of integer points for dim in {1, 2, 3}. Vertices and facets are
// sorted lexicographically (facets by normal).
LatticePolytope polytope_from_vertices(std::size_t dim,
                                       const std::vector<IntVec>& points);

// Same polytope with facets listed in the order perm[0], perm[1], ...
LatticePolytope reorder_facets(const LatticePolytope& p,
                               const std::vector<std::size_t>& perm);

// Integer points of p in lexicographic order.
std::vector<IntVec> lattice_points(const LatticePolytope& p);

// Exponent vector (<m, n_i> + a_i)_i of m against the given hyperplanes.
// Throws PointOutsidePolytope if any exponent is negative.
IntVec hyperplane_exponents(const std::vector<Facet>& hyperplanes,
                            const IntVec& m);

// Exponents of the facet variables in the Delta-monomial x^m.
IntVec delta_monomial(const LatticePolytope& p, const IntVec& m);

}  // namespace toriparam
