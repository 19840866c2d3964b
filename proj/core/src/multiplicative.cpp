#include "toriparam/multiplicative.hpp"

#include <algorithm>
#include <cstdint>

#include "toriparam/error.hpp"

namespace toriparam {

namespace {

Integer largest_root(const Integer& b) {
  // b = r^k with k maximal; returns r.
  const std::size_t bits = mpz_sizeinbase(b.get_mpz_t(), 2);
  for (std::size_t k = bits; k >= 2; --k) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), b.get_mpz_t(), k) != 0 && r > 1) return r;
  }
  return b;
}

// Exponent of base element b in x (b > 1, x != 0).
Integer valuation(Integer x, const Integer& b) {
  Integer v = 0;
  x = abs(x);
  while (x % b == 0) {
    x /= b;
    ++v;
  }
  return v;
}

std::optional<std::vector<std::uint8_t>> solve_mod2(
    const IntMat& a, const std::vector<std::uint8_t>& rhs) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<std::uint8_t>> m(rows, std::vector<std::uint8_t>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = mpz_odd_p(a(r, c).get_mpz_t()) ? 1 : 0;
    m[r][cols] = rhs[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != pr && m[r][c]) {
        for (std::size_t k = c; k <= cols; ++k) m[r][k] ^= m[pr][k];
      }
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  for (std::size_t r = pr; r < rows; ++r) {
    if (m[r][cols]) return std::nullopt;
  }
  std::vector<std::uint8_t> x(cols, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m[i][cols];
  return x;
}

}  // namespace

std::vector<Integer> coprime_base(const std::vector<Integer>& values) {
  std::vector<Integer> base;
  for (const auto& v : values) {
    Integer a = abs(v);
    if (a > 1) base.push_back(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g;
        Integer b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (const Integer* x : {&a, &b, &g}) {
          if (*x > 1) base.push_back(*x);
        }
        changed = true;
      }
  }
  for (auto& b : base) b = largest_root(b);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

std::optional<RatVec> solve_multiplicative(const IntMat& a, const RatVec& c) {
  if (c.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve_multiplicative: rhs length");
  }
  std::vector<Integer> parts;
  std::vector<std::uint8_t> signs(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) throw Error(ErrorCode::ZeroScalar, "multiplicative target is zero");
    signs[i] = c[i] < 0 ? 1 : 0;
    parts.push_back(c[i].get_num());
    parts.push_back(c[i].get_den());
  }
  const std::vector<Integer> base = coprime_base(parts);

  RatVec x(a.cols(), Rational(1));
  for (const auto& b : base) {
    IntVec e(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      e[i] = valuation(c[i].get_num(), b) - valuation(c[i].get_den(), b);
    }
    auto sol = solve_integer_linear(a, e);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& k = sol->particular[j];
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), Integer(abs(k)).get_ui());
      x[j] *= k >= 0 ? Rational(p) : Rational(1) / Rational(p);
    }
  }
  auto s = solve_mod2(a, signs);
  if (!s) return std::nullopt;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if ((*s)[j]) x[j] = -x[j];
  }
  for (auto& v : x) v.canonicalize();
  return x;
}

Rational power_product(const RatVec& x, const IntVec& exponents) {
  if (x.size() != exponents.size()) {
    throw Error(ErrorCode::DimensionMismatch, "power_product");
  }
  Rational out = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (x[i] == 0) throw Error(ErrorCode::ZeroScalar, "power of zero");
    Integer num, den;
    const unsigned long k = Integer(abs(exponents[i])).get_ui();
    mpz_pow_ui(num.get_mpz_t(), x[i].get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x[i].get_den_mpz_t(), k);
    Rational p(num, den);
    p.canonicalize();
    out *= exponents[i] > 0 ? p : Rational(1) / p;
  }
  return out;
}

}  // namespace toriparam
