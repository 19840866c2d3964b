#include "toriparam/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "toriparam/error.hpp"

namespace toriparam {

namespace {

unsigned long degree_of(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0UL);
}

void require_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch,
                "polynomials in " + std::to_string(a.nvars()) + " and " +
                    std::to_string(b.nvars()) + " variables");
  }
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return e;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned long da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorCode::VariableCountMismatch, "variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::monomial(const IntVec& e, const Rational& c) {
  Exponent ex(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || !e[i].fits_ulong_p()) {
      throw Error(ErrorCode::InvalidInput, "monomial exponents must be nonnegative");
    }
    ex[i] = e[i].get_ui();
  }
  return monomial(ex, c);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
  return coefficient(Exponent(nvars_, 0));
}

unsigned long MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

unsigned long MultiPoly::degree_in(std::size_t var) const {
  unsigned long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<std::size_t> MultiPoly::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (degree_in(v) > 0) out.push_back(v);
  }
  return out;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same(a, b);
  MultiPoly out(a.nvars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned long k) {
  MultiPoly result = MultiPoly::constant(p.nvars(), 1);
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "evaluation point has wrong length");
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(f.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= f;
    }
    sum += t;
  }
  return sum;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& values,
                     std::size_t result_nvars) {
  if (values.size() != p.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "substitution has wrong length");
  }
  for (const auto& v : values) {
    if (v.nvars() != result_nvars) {
      throw Error(ErrorCode::VariableCountMismatch, "substituted values disagree on variables");
    }
  }
  // Cache powers per variable; desk-scale degrees keep this small.
  std::vector<std::vector<MultiPoly>> powers(values.size());
  auto power = [&](std::size_t i, unsigned long k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(result_nvars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * values[i]);
    return cache[k];
  };
  MultiPoly out(result_nvars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(result_nvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  require_same(p, d);
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  MultiPoly q(p.nvars());
  MultiPoly r = p;
  const Exponent& ld = d.leading_exponent();
  const Rational& lc = d.leading_coefficient();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    if (!divides(ld, lr)) return std::nullopt;
    Exponent e(lr.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lr[i] - ld[i];
    Rational c = r.leading_coefficient() / lc;
    MultiPoly t = MultiPoly::monomial(e, c);
    q += t;
    r -= t * d;
  }
  return q;
}

Rational rational_content(const MultiPoly& p) {
  if (p.is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return p * Rational(1 / c);
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  std::vector<MultiPoly> out(p.degree_in(var) + 1, MultiPoly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

namespace {

using Dense = std::vector<MultiPoly>;  // coefficients in the main variable

std::size_t deg(const Dense& a) { return a.size() - 1; }

void trim(Dense& a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

MultiPoly from_dense(const Dense& a, std::size_t var) {
  MultiPoly out(a.front().nvars());
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (const auto& [e, c] : a[k].terms()) {
      Exponent x = e;
      x[var] += k;
      out.add_term(x, c);
    }
  }
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t n = deg(b);
  const MultiPoly& lb = b.back();
  std::size_t steps = deg(a) - n + 1;
  while (!(a.size() == 1 && a[0].is_zero()) && a.size() - 1 >= n) {
    MultiPoly la = a.back();
    std::size_t shift = deg(a) - n;
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= n; ++k) a[k + shift] -= la * b[k];
    a.pop_back();
    trim(a);
    --steps;
    if (a.size() - 1 < n) break;
  }
  if (steps > 0) {
    MultiPoly f = pow(lb, steps);
    for (auto& c : a) c *= f;
  }
  trim(a);
  return a;
}

MultiPoly exact(const MultiPoly& p, const MultiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw Error(ErrorCode::InvalidInput, "internal: inexact division in gcd");
  return *q;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  return gcd_many(coefficients_in(p, var));
}

// Gcd of polynomials primitive in `var`, both of positive degree there.
MultiPoly primitive_gcd(MultiPoly a, MultiPoly b, std::size_t var) {
  Dense da = coefficients_in(a, var), db = coefficients_in(b, var);
  if (deg(da) < deg(db)) std::swap(da, db);
  const std::size_t nv = a.nvars();
  MultiPoly g = MultiPoly::constant(nv, 1), h = MultiPoly::constant(nv, 1);
  while (true) {
    std::size_t delta = deg(da) - deg(db);
    Dense r = pseudo_remainder(da, db);
    if (r.size() == 1 && r[0].is_zero()) break;
    if (r.size() == 1) return MultiPoly::constant(nv, 1);
    da = db;
    MultiPoly divisor = g * pow(h, delta);
    for (auto& c : r) c = exact(c, divisor);
    db = r;
    g = da.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(pow(g, delta), pow(h, delta - 1));
    }
  }
  MultiPoly bb = from_dense(db, var);
  return exact(bb, content_in(bb, var));
}

}  // namespace

MultiPoly gcd_multi(const MultiPoly& p, const MultiPoly& q) {
  require_same(p, q);
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(p.nvars(), 1);
  // Monomial shortcut: gcd with a monomial is the monomial of minimal
  // exponents over the other polynomial's support.
  if (p.is_monomial() || q.is_monomial()) {
    const MultiPoly& mono = p.is_monomial() ? p : q;
    const MultiPoly& other = p.is_monomial() ? q : p;
    Exponent e = mono.leading_exponent();
    for (const auto& [x, c] : other.terms())
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], x[i]);
    return MultiPoly::monomial(e);
  }
  std::vector<std::size_t> vp = p.used_variables(), vq = q.used_variables();
  std::size_t var = std::max(vp.back(), vq.back());
  bool in_p = p.degree_in(var) > 0, in_q = q.degree_in(var) > 0;
  if (!in_p) return gcd_multi(p, content_in(q, var));
  if (!in_q) return gcd_multi(content_in(p, var), q);
  MultiPoly cp = content_in(p, var), cq = content_in(q, var);
  MultiPoly g = gcd_multi(cp, cq) * primitive_gcd(exact(p, cp), exact(q, cq), var);
  return normalize(g);
}

MultiPoly gcd_many(const std::vector<MultiPoly>& ps) {
  if (ps.empty()) throw Error(ErrorCode::InvalidInput, "gcd of an empty list");
  MultiPoly g(ps.front().nvars());
  for (const auto& p : ps) {
    g = gcd_multi(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return normalize(g);
}

std::optional<Rational> constant_ratio(const MultiPoly& p, const MultiPoly& q) {
  require_same(p, q);
  if (p.is_zero() || q.is_zero() || p.term_count() != q.term_count()) return std::nullopt;
  Rational r = p.leading_coefficient() / q.leading_coefficient();
  if (p == q * r) return r;
  return std::nullopt;
}

MultiPoly expand(const Factorization& f, std::size_t nvars) {
  MultiPoly out = MultiPoly::constant(nvars, f.unit);
  for (const auto& [g, k] : f.factors) out *= pow(g, k);
  return out;
}

}  // namespace toriparam
