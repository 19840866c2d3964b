#pragma once

// Diagonalizable subgroups of (C*)^r: the group G of a fan, characters on
// it, their kernels, and G-equivalence of coordinate tuples.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toriparam/fan.hpp"
#include "toriparam/lattice.hpp"
#include "toriparam/multipoly.hpp"
#include "toriparam/polytope.hpp"

namespace toriparam {

// A cyclic factor: the elements zeta^exponents for zeta running over the
// order-th roots of unity.
struct TorsionGenerator {
  IntVec exponents;  // length r, entries in [0, order)
  Integer order;

  friend bool operator==(const TorsionGenerator&, const TorsionGenerator&) = default;
};

// The set of points (prod_j t_j^E(i,j)) * (torsion) for t in (C*)^k.
struct SubtorusDescription {
  std::size_t r = 0;
  IntMat exponent_matrix;  // r x k
  std::vector<TorsionGenerator> torsion;

  std::size_t params() const noexcept { return exponent_matrix.cols(); }
  std::size_t dimension() const noexcept { return params(); }

  friend bool operator==(const SubtorusDescription&, const SubtorusDescription&) = default;
};

using Character = IntVec;

// {mu : prod_i mu_i^relations(j,i) = 1 for every row j}.
SubtorusDescription subgroup_from_relations(const IntMat& relations);

// G = {mu : prod_i mu_i^<m, n_i> = 1 for all m}.
SubtorusDescription compute_G(const Fan& f);

// Rows spanning the lattice of ambient characters trivial on g.
IntMat relation_lattice(const SubtorusDescription& g);

// Pullback a^T E of an ambient character to g's parameters.
Character restrict_character(const SubtorusDescription& g, const IntVec& ambient);

// mu_Delta = prod mu_i^{a_i}, in g's parameters.
Character mu_delta_character(const LatticePolytope& p, const SubtorusDescription& g);

// Kernel of t -> t^chi on the parameter torus of a torsion-free g, in
// ambient coordinates. chi = 0 returns g.
SubtorusDescription kernel_of_character(const SubtorusDescription& g, const Character& chi);

// Kernel of an ambient character restricted to g (g may carry torsion).
SubtorusDescription kernel_of_ambient_character(const SubtorusDescription& g,
                                                const IntVec& ambient);

// Kernel of mu -> prod mu_i^{offsets_i} on the group G of the fan.
SubtorusDescription compute_G_Delta(const Fan& f, const IntVec& offsets);

struct GroupPoint {
  RatVec params;
  RatVec ambient;
};

// A rational point of g whose chi-value is c, or nullopt if no such point
// has rational coordinates (the scalar then stays explicit). Throws
// ZeroScalar for c = 0.
std::optional<GroupPoint> solve_character(const SubtorusDescription& g, const Character& chi,
                                          const Rational& c);

// Rational point of the free part at the given parameter values.
RatVec group_point(const SubtorusDescription& g, const RatVec& params);

bool contains(const SubtorusDescription& g, const RatVec& mu);

// (mu_1 f_1, ..., mu_r f_r). Throws ZeroScalar, LengthMismatch.
std::vector<MultiPoly> act(const RatVec& mu, const std::vector<MultiPoly>& f);

enum class EquivalenceStatus { Equivalent, NotEquivalent, NonConstantRatio };

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::NotEquivalent;
  // A rational witness with f2 = mu * f when one exists. Entries where both
  // tuples vanish are chosen to make mu a member of g. May be empty for an
  // equivalent pair whose witnesses all need irrational entries.
  std::optional<RatVec> element;
};

// Is f2 = mu * f for some constant mu in g?
EquivalenceResult g_equivalent(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& f2,
                               const SubtorusDescription& g);

// Parameter names: lambda, mu, nu, then t4, t5, ...
std::vector<std::string> default_group_names(std::size_t k);
// Indexed names base1, base2, ...
std::vector<std::string> indexed_names(const std::string& base, std::size_t k);

// "(λ, λ, λ^-1, λ^-1)"; torsion factors appear as ζ, ζ1, ζ2, ... with a
// trailing ", ζ^2 = 1" style condition.
std::string render_subgroup(const SubtorusDescription& g, const std::vector<std::string>& names);
std::string render_subgroup(const SubtorusDescription& g);

// "λ^2*μ^3*ν^2"; "1" for the trivial character.
std::string render_character(const Character& chi, const std::vector<std::string>& names);

}  // namespace toriparam
