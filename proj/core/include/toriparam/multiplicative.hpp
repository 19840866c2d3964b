#pragma once

// Multiplicative linear algebra over the nonzero rationals.

#include <optional>
#include <vector>

#include "toriparam/lattice.hpp"

namespace toriparam {

// Pairwise coprime integers > 1, none a perfect power, such that every input
// is a product of powers of them. Sorted ascending.
std::vector<Integer> coprime_base(const std::vector<Integer>& values);

// Finds nonzero rationals x with prod_j x_j^{a(i,j)} = c_i for every row i,
// or nullopt if no rational solution exists. Throws ZeroScalar if some c_i
// is zero.
std::optional<RatVec> solve_multiplicative(const IntMat& a, const RatVec& c);

// prod_j x_j^{e_j} for nonzero x (negative exponents allowed).
Rational power_product(const RatVec& x, const IntVec& exponents);

}  // namespace toriparam
