#include "toriparam/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "toriparam/error.hpp"

namespace toriparam {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvalidPolytope: return "InvalidPolytope";
    case ErrorCode::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorCode::NotInSupport: return "NotInSupport";
    case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotARefinement: return "NotARefinement";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::NotMonomialSystem: return "NotMonomialSystem";
    case ErrorCode::MultiParameterUnsupported: return "MultiParameterUnsupported";
    case ErrorCode::IncompleteHints: return "IncompleteHints";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

IntVec make_vec(std::initializer_list<long> entries) {
  IntVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    for (long e : r) data_.emplace_back(e);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& columns,
                            std::size_t rows) {
  IntMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVec IntMat::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMat::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMat IntMat::column_range(std::size_t first, std::size_t count) const {
  assert(first + count <= cols_);
  IntMat m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

void IntMat::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMat::add_column_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src,
                              const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMat::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMat::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product");
  }
  IntMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVec operator*(const IntMat& a, const IntVec& v) {
  if (a.cols() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  }
  IntVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << m.row(r);
  }
  return os << ']';
}

Integer dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "dot product");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive_vector(const IntVec& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive_vector of zero");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

// Replaces columns (a, b) of m by
//   col_a' = s col_a + t col_b,  col_b' = x col_a + y col_b
// where s y - t x = 1.
void combine_columns(IntMat& m, std::size_t a, std::size_t b, const Integer& s,
                     const Integer& t, const Integer& x, const Integer& y) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer va = m(r, a);
    Integer vb = m(r, b);
    m(r, a) = s * va + t * vb;
    m(r, b) = x * va + y * vb;
  }
}

// g = s a + t b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s,
                  Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& m) {
  HermiteResult res{m, IntMat::identity(m.cols()), 0};
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t k = 0;
  for (std::size_t r = 0; r < h.rows() && k < h.cols(); ++r) {
    for (std::size_t j = k + 1; j < h.cols(); ++j) {
      if (h(r, j) == 0) continue;
      Integer g, s, t;
      extended_gcd(h(r, k), h(r, j), g, s, t);
      Integer x = -h(r, j) / g;
      Integer y = h(r, k) / g;
      combine_columns(h, k, j, s, t, x, y);
      combine_columns(u, k, j, s, t, x, y);
    }
    if (h(r, k) == 0) continue;
    if (h(r, k) < 0) {
      h.negate_column(k);
      u.negate_column(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Integer q = floor_div(h(r, j), h(r, k));
      if (q != 0) {
        h.add_column_multiple(j, k, -q);
        u.add_column_multiple(j, k, -q);
      }
    }
    ++k;
  }
  res.rank = k;
  return res;
}

SmithResult smith_normal_form(const IntMat& m) {
  SmithResult res{m, IntMat::identity(m.rows()), IntMat::identity(m.cols()), 0};
  IntMat& d = res.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pr == rows || abs(d(i, j)) < abs(d(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) {
        res.rank = t;
        return res;
      }
      d.swap_rows(t, pr);
      res.p.swap_rows(t, pr);
      d.swap_columns(t, pc);
      res.q.swap_columns(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        res.p.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        d.add_column_multiple(j, t, -q);
        res.q.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility condition d_t | every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            res.p.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      res.p.negate_row(t);
    }
  }
  std::size_t r = 0;
  while (r < std::min(rows, cols) && d(r, r) != 0) ++r;
  res.rank = r;
  return res;
}

Integer determinant(const IntMat& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMat& m) { return hermite_normal_form(m).rank; }

IntMat canonical_lattice_basis(const IntMat& generators) {
  HermiteResult hr = hermite_normal_form(generators);
  return hr.h.column_range(0, hr.rank);
}

IntMat saturated_kernel_basis(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  IntMat kernel = s.q.column_range(s.rank, m.cols() - s.rank);
  return canonical_lattice_basis(kernel);
}

std::optional<IntegerSolution> solve_integer_linear(const IntMat& a,
                                                    const IntVec& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve_integer_linear: rhs length");
  }
  HermiteResult hr = hermite_normal_form(a);
  const IntMat& h = hr.h;
  IntVec y(a.cols());
  std::size_t k = 0;  // columns fixed so far
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Integer residual = b[r];
    for (std::size_t j = 0; j < k; ++j) residual -= h(r, j) * y[j];
    if (k < hr.rank && h(r, k) != 0) {
      if (residual % h(r, k) != 0) return std::nullopt;
      y[k] = residual / h(r, k);
      ++k;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = hr.u * y;
  sol.kernel = canonical_lattice_basis(hr.u.column_range(hr.rank, a.cols() - hr.rank));
  return sol;
}

std::optional<RatVec> solve_rational_independent(const IntMat& a,
                                                 const IntVec& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve_rational_independent: rhs length");
  }
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<RatVec> aug(rows, RatVec(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a(r, c);
    aug[r][cols] = b[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_col(cols, rows);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && aug[sel][c] == 0) ++sel;
    if (sel == rows) return std::nullopt;  // dependent columns
    std::swap(aug[sel], aug[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || aug[r][c] == 0) continue;
      Rational f = aug[r][c] / aug[pivot_row][c];
      for (std::size_t k = c; k <= cols; ++k) aug[r][k] -= f * aug[pivot_row][k];
    }
    pivot_of_col[c] = pivot_row++;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (aug[r][cols] != 0) return std::nullopt;
  }
  RatVec x(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto& row = aug[pivot_of_col[c]];
    x[c] = row[cols] / row[c];
  }
  return x;
}

}  // namespace toriparam
