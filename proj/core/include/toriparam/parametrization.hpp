#pragma once

// Polynomials spanned by Delta-monomials, systems of them, and their
// composition with tuples of parameter polynomials.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "toriparam/fan.hpp"
#include "toriparam/multipoly.hpp"
#include "toriparam/polytope.hpp"

namespace toriparam {

struct DeltaPolynomial {
  std::map<IntVec, Rational> coefficients;  // lattice point -> a_m, nonzero

  static DeltaPolynomial monomial(const IntVec& m);
  bool is_zero() const noexcept { return coefficients.empty(); }
  bool is_monomial() const;

  friend bool operator==(const DeltaPolynomial&, const DeltaPolynomial&) = default;
};

// Components in the coordinate ring of a toric variety whose facet variables
// are given by `hyperplanes` (the facets, or the virtual facets of a
// resolution).
struct ParamSystem {
  std::size_t dim = 0;
  std::vector<Facet> hyperplanes;
  std::vector<DeltaPolynomial> components;

  std::size_t variable_count() const noexcept { return hyperplanes.size(); }
  std::size_t size() const noexcept { return components.size(); }
  bool is_monomial() const;
  // Exponents of the single monomial of component j (is_monomial() only).
  IntVec monomial_exponents(std::size_t j) const;

  friend bool operator==(const ParamSystem&, const ParamSystem&) = default;
};

using ParamTuple = std::vector<MultiPoly>;

// Validates that every point lies in the polytope and that some component
// is nonzero.
ParamSystem make_system(std::size_t dim, std::vector<Facet> hyperplanes,
                        std::vector<DeltaPolynomial> components);

// Component j as a polynomial in the facet variables.
MultiPoly expand_component(const ParamSystem& s, std::size_t j);
std::vector<MultiPoly> expand_system(const ParamSystem& s);

// One monomial per lattice point, in lattice point order.
ParamSystem build_P_Delta(const LatticePolytope& p);
ParamSystem build_P_Delta(const LatticePolytope& p, const std::vector<Facet>& hyperplanes);

struct Selection {
  ParamSystem system;
  bool hull_is_polytope = false;   // conv(A) = Delta
  bool generates_affinely = false; // differences of A span Z^n
  std::vector<std::string> warnings;
};

Selection select_P_A(const LatticePolytope& p, const std::vector<IntVec>& a_set);
Selection select_P_A(const LatticePolytope& p, const std::vector<IntVec>& a_set,
                     const std::vector<Facet>& hyperplanes);

struct IrreducibilityReport {
  bool irreducible = true;
  std::vector<PrimitiveCollection> violated;
};

IrreducibilityReport is_sigma_irreducible(const ParamTuple& f, const Fan& fan);

// prod f_i^{e_i}
MultiPoly f_power(const ParamTuple& f, const IntVec& exponents);
// prod f_i^{<m, n_i> + a_i}
MultiPoly f_power(const ParamTuple& f, const IntVec& m, const LatticePolytope& p);

struct Composition {
  std::vector<MultiPoly> raw;      // P o F
  MultiPoly content;               // gcd of raw, normalized
  std::vector<MultiPoly> reduced;  // raw / content
};

Composition compose(const ParamSystem& s, const ParamTuple& f);

bool is_rational_parametrization(const std::vector<MultiPoly>& h);

// h = c * h2 for a nonzero constant c?
bool same_parametrization(const std::vector<MultiPoly>& h, const std::vector<MultiPoly>& h2);

// Does relation(h_0, ..., h_s) vanish identically?
bool check_implicit(const std::vector<MultiPoly>& h, const MultiPoly& relation);

}  // namespace toriparam
