#pragma once

// Sparse multivariate polynomials over Q.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toriparam/lattice.hpp"

namespace toriparam {

using Exponent = std::vector<unsigned long>;

// Graded lexicographic order, greatest first: higher total degree wins, ties
// broken lexicographically with x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
  // x^e for an IntVec of nonnegative exponents.
  static MultiPoly monomial(const IntVec& e, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value; only meaningful when is_constant().
  Rational constant_value() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Leading data in grlex order; undefined for the zero polynomial.
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  unsigned long total_degree() const;
  unsigned long degree_in(std::size_t var) const;
  // Indices of variables occurring with positive exponent.
  std::vector<std::size_t> used_variables() const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned long k);

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point);

// Substitutes values[i] for variable i; every value must share one nvars.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& values,
                     std::size_t result_nvars);

// q with p = d * q, or nullopt if d does not divide p. Throws ZeroPolynomial
// if d = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

// Scales p to integer coefficients with content 1 and positive leading
// coefficient. Zero stays zero.
MultiPoly normalize(const MultiPoly& p);

// Positive rational c with p = c * normalize(p) up to sign; 0 for p = 0.
Rational rational_content(const MultiPoly& p);

// Normalized gcd; gcd(0, 0) = 0.
MultiPoly gcd_multi(const MultiPoly& p, const MultiPoly& q);
MultiPoly gcd_many(const std::vector<MultiPoly>& ps);

// p = c * q for a nonzero constant c?
std::optional<Rational> constant_ratio(const MultiPoly& p, const MultiPoly& q);

// Coefficients of p viewed as a polynomial in `var`, lowest degree first.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);

struct Factorization {
  Rational unit;
  std::vector<std::pair<MultiPoly, unsigned long>> factors;  // monic irreducible
};

// Complete factorization of a nonzero polynomial in at most one variable.
// Throws NotUnivariate or ZeroPolynomial.
Factorization factor_univariate(const MultiPoly& p);

// unit * prod factors^multiplicity
MultiPoly expand(const Factorization& f, std::size_t nvars);

}  // namespace toriparam
