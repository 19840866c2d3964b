#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace toriparam {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

IntVec make_vec(std::initializer_list<long> entries);

// Dense row-major integer matrix. A 0-column or 0-row matrix is allowed and
// is how "no basis vectors" is represented.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMat from_columns(const std::vector<IntVec>& columns,
                             std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  std::vector<IntVec> columns() const;
  IntMat transposed() const;
  // Keeps columns [first, first + count).
  IntMat column_range(std::size_t first, std::size_t count) const;

  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  // column[dst] += factor * column[src]
  void add_column_multiple(std::size_t dst, std::size_t src,
                           const Integer& factor);
  void add_row_multiple(std::size_t dst, std::size_t src,
                        const Integer& factor);
  void negate_column(std::size_t c);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const IntMat& m);
std::ostream& operator<<(std::ostream& os, const IntVec& v);

Integer dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
Integer content(const IntVec& v);  // gcd of entries, >= 0

// v divided by the gcd of its entries; throws ZeroVector on v == 0.
IntVec primitive_vector(const IntVec& v);

// Column Hermite normal form: h = m * u with u unimodular. Pivot rows form a
// lower staircase, pivots are positive, and entries left of a pivot lie in
// [0, pivot). Zero columns are collected at the right.
struct HermiteResult {
  IntMat h;
  IntMat u;
  std::size_t rank = 0;
};
HermiteResult hermite_normal_form(const IntMat& m);

// d = p * m * q with p, q unimodular and d diagonal with d_1 | d_2 | ...,
// all diagonal entries nonnegative.
struct SmithResult {
  IntMat d;
  IntMat p;
  IntMat q;
  std::size_t rank = 0;
};
SmithResult smith_normal_form(const IntMat& m);

Integer determinant(const IntMat& m);
std::size_t rank(const IntMat& m);

// Canonical basis of the lattice spanned by the given columns: the nonzero
// columns of its column Hermite form.
IntMat canonical_lattice_basis(const IntMat& generators);

// Basis (as columns) of {v in Z^cols : m v = 0}. The lattice is saturated and
// the returned basis is in canonical (Hermite) form.
IntMat saturated_kernel_basis(const IntMat& m);

struct IntegerSolution {
  IntVec particular;
  IntMat kernel;  // columns span the solutions of a x = 0
};

// All integer solutions of a x = b, or nullopt if there are none.
std::optional<IntegerSolution> solve_integer_linear(const IntMat& a,
                                                    const IntVec& b);

// Solves a x = b over Q for a matrix with linearly independent columns.
// Returns nullopt when b is outside the column span.
std::optional<RatVec> solve_rational_independent(const IntMat& a,
                                                 const IntVec& b);

}  // namespace toriparam
