#pragma once

// Recovering F from H = q * c * (P o F) for systems with monomial
// components.

#include <optional>
#include <string>
#include <vector>

#include "toriparam/fan.hpp"
#include "toriparam/multipoly.hpp"
#include "toriparam/parametrization.hpp"

namespace toriparam {

struct DecompositionResult {
  MultiPoly content;   // q = gcd of the input components
  Rational scalar = 1; // c
  ParamTuple f;        // Sigma-irreducible
  bool absorbed = false;
  std::string normalization;
};

// Each monomial component of the target must be a monomial times a
// polynomial in a single parameter; those are factored over Q. `fan` must have
// the system's hyperplane normals as rays. Throws NoPreimage,
// NotMonomialSystem, MultiParameterUnsupported.
DecompositionResult decompose_curve(const std::vector<MultiPoly>& h_raw, const ParamSystem& system,
                                    const Fan& fan);

// Any number of parameters; the irreducible factors of the monomial
// components are taken from `hints`. Throws IncompleteHints as well.
DecompositionResult decompose_with_hints(const std::vector<MultiPoly>& h_raw,
                                         const ParamSystem& system, const Fan& fan,
                                         const std::vector<MultiPoly>& hints);

}  // namespace toriparam
