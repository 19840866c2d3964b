#pragma once

// Text form of polynomials and tuples.
//
// Grammar: sums and differences of products of powers; atoms are integer or
// p/q literals, variables and parenthesized expressions. Variable families:
//   Facet: x1 .. xN
//   Param: y1 .. yD, with u and v accepted for y1 and y2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toriparam/multipoly.hpp"

namespace toriparam {

enum class VarKind { Facet, Param };

// nvars = nullopt infers the count from the highest variable index seen
// (at least 1). Throws SyntaxError.
MultiPoly parse_polynomial(std::string_view text, VarKind kind,
                           std::optional<std::size_t> nvars = std::nullopt);

// "(p1, p2, ...)" or "p1, p2, ...". With nvars = nullopt all entries share
// the largest inferred count.
std::vector<MultiPoly> parse_tuple(std::string_view text, VarKind kind,
                                   std::optional<std::size_t> nvars = std::nullopt);

// Canonical rendering, terms in descending grlex order. Param polynomials in
// at most two variables use u, v.
std::string render(const MultiPoly& p, VarKind kind);
std::string render(const MultiPoly& p, const std::vector<std::string>& names);
std::string render_tuple(const std::vector<MultiPoly>& ps, VarKind kind);

std::vector<std::string> variable_names(VarKind kind, std::size_t nvars);

std::string render_rational(const Rational& r);
// Accepts "p", "-p", "p/q". Throws SyntaxError.
Rational parse_rational(std::string_view text);

}  // namespace toriparam
