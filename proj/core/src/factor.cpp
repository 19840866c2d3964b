// Univariate factorization over Q: Yun squarefree decomposition, then
// Cantor-Zassenhaus modulo a good prime, linear Hensel lifting and
// subset recombination.

#include <algorithm>
#include <functional>
#include <random>

#include "toriparam/error.hpp"
#include "toriparam/multipoly.hpp"

namespace toriparam {

namespace {

// Dense coefficient vectors, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

template <class P>
void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class P>
long degree(const P& p) {
  return static_cast<long>(p.size()) - 1;
}

// ---- arithmetic over Q ----

QPoly q_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

QPoly q_deriv(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rational(static_cast<unsigned long>(i)));
  trim(d);
  return d;
}

void q_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (degree(r) >= degree(b)) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
}

QPoly q_div(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  q_divmod(a, b, q, r);
  return q;
}

QPoly q_monic(QPoly a) {
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

QPoly q_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly q, r;
    q_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return q_monic(a);
}

// Primitive integer multiple with positive leading coefficient.
ZPoly q_to_primitive(const QPoly& a) {
  Integer den = 1, num = 0;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : a) z.push_back(Integer(c * den));
  for (const auto& c : z) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
  if (z.back() < 0) num = -num;
  for (auto& c : z) c /= num;
  return z;
}

// ---- arithmetic modulo m ----

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly z_reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly z_add(ZPoly a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return z_reduce(std::move(a), m);
}

ZPoly z_sub(ZPoly a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return z_reduce(std::move(a), m);
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return z_reduce(std::move(c), m);
}

ZPoly z_scale(ZPoly a, const Integer& s, const Integer& m) {
  for (auto& c : a) c *= s;
  return z_reduce(std::move(a), m);
}

Integer inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::InvalidInput, "internal: non-invertible leading coefficient");
  }
  return r;
}

// Division by b whose leading coefficient is invertible mod m.
void z_divmod(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  Integer inv = inverse(b.back(), m);
  while (degree(r) >= degree(b)) {
    std::size_t shift = r.size() - b.size();
    Integer c = mod(r.back() * inv, m);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = mod(r[i + shift] - c * b[i], m);
    trim(r);
  }
  trim(q);
}

ZPoly z_rem(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly q, r;
  z_divmod(a, b, m, q, r);
  return r;
}

ZPoly z_quo(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly q, r;
  z_divmod(a, b, m, q, r);
  return q;
}

ZPoly z_monic(const ZPoly& a, const Integer& p) {
  return z_scale(a, inverse(a.back(), p), p);
}

ZPoly z_gcd(ZPoly a, ZPoly b, const Integer& p) {
  while (!b.empty()) {
    ZPoly r = z_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : z_monic(a, p);
}

// s, t with s*a + t*b = 1 mod p for coprime a, b.
void z_ext_gcd(const ZPoly& a, const ZPoly& b, const Integer& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    ZPoly q, r;
    z_divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly s2 = z_sub(s0, z_mul(q, s1, p), p);
    ZPoly t2 = z_sub(t0, z_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Integer inv = inverse(r0.front(), p);
  s = z_scale(s0, inv, p);
  t = z_scale(t0, inv, p);
}

ZPoly z_powmod(ZPoly base, Integer e, const ZPoly& f, const Integer& p) {
  ZPoly result = {1};
  base = z_rem(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = z_rem(z_mul(result, base, p), f, p);
    e >>= 1;
    if (e > 0) base = z_rem(z_mul(base, base, p), f, p);
  }
  return result;
}

ZPoly z_deriv(const ZPoly& a, const Integer& p) {
  ZPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  return z_reduce(std::move(d), p);
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
void equal_degree(const ZPoly& g, long d, const Integer& p, std::mt19937_64& rng,
                  std::vector<ZPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  while (true) {
    ZPoly a;
    for (long i = 0; i < degree(g); ++i) a.push_back(gen.get_z_range(p));
    trim(a);
    if (degree(a) < 1) continue;
    ZPoly b = z_sub(z_powmod(a, e, g, p), ZPoly{1}, p);
    ZPoly c = z_gcd(g, b, p);
    if (degree(c) > 0 && degree(c) < degree(g)) {
      equal_degree(c, d, p, rng, out);
      equal_degree(z_quo(g, c, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod p.
std::vector<ZPoly> factor_mod_p(ZPoly h, const Integer& p) {
  std::mt19937_64 rng(0x5eed);
  std::vector<ZPoly> out;
  ZPoly x = {0, 1};
  ZPoly w = x;
  long d = 0;
  while (degree(h) >= 2 * (d + 1)) {
    ++d;
    w = z_powmod(w, p, h, p);
    ZPoly g = z_gcd(z_sub(w, x, p), h, p);
    if (degree(g) > 0) {
      equal_degree(g, d, p, rng, out);
      h = z_quo(h, g, p);
      w = z_rem(w, h, p);
    }
  }
  if (degree(h) > 0) out.push_back(h);
  return out;
}

// Lifts f = g*h mod p (g, h monic) to mod p^k; f monic mod p^k.
void hensel_two(const ZPoly& f, ZPoly& g, ZPoly& h, const Integer& p, unsigned long k) {
  ZPoly s, t;
  z_ext_gcd(g, h, p, s, t);
  Integer m = p;
  for (unsigned long j = 1; j < k; ++j) {
    Integer next = m * p;
    ZPoly diff = z_sub(f, z_mul(g, h, next), next);
    ZPoly e;
    for (const auto& c : diff) e.push_back(c / m);
    e = z_reduce(std::move(e), p);
    ZPoly dg = z_rem(z_mul(t, e, p), g, p);
    ZPoly dh = z_quo(z_sub(e, z_mul(h, dg, p), p), g, p);
    g = z_add(g, z_scale(dg, m, next), next);
    h = z_add(h, z_scale(dh, m, next), next);
    m = next;
  }
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> factors, const Integer& p,
                               unsigned long k, const Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly current = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ZPoly g = factors[i];
    ZPoly h = {1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) h = z_mul(h, factors[j], p);
    hensel_two(current, g, h, p, k);
    out.push_back(g);
    current = h;
  }
  out.push_back(z_reduce(current, modulus));
  return out;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact quotient a / b over Z, if it exists.
std::optional<ZPoly> z_divide(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (degree(r) >= degree(b)) {
    std::size_t shift = r.size() - b.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree f with positive leading
// coefficient and degree >= 1.
std::vector<ZPoly> factor_squarefree(ZPoly f) {
  if (degree(f) == 1) return {f};
  Integer p;
  for (unsigned long cand = 3;; cand += 2) {
    if (!is_prime(cand)) continue;
    p = cand;
    if (mpz_divisible_p(f.back().get_mpz_t(), p.get_mpz_t())) continue;
    ZPoly fp = z_reduce(f, p);
    if (degree(z_gcd(fp, z_deriv(fp, p), p)) == 0) break;
  }
  ZPoly fp = z_monic(z_reduce(f, p), p);
  std::vector<ZPoly> modp = factor_mod_p(fp, p);
  if (modp.size() == 1) return {f};

  // Coefficient bound for factors scaled by the leading coefficient.
  Integer norm = 0;
  for (const auto& c : f) norm += abs(c);
  Integer bound = abs(f.back()) * norm;
  bound <<= static_cast<unsigned long>(degree(f));
  Integer modulus = p;
  unsigned long k = 1;
  while (modulus <= 2 * bound) {
    modulus *= p;
    ++k;
  }
  ZPoly monic = z_scale(f, inverse(f.back(), modulus), modulus);
  std::vector<ZPoly> lifted = hensel_lift(monic, modp, p, k, modulus);

  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
      if (pick.size() == s) {
        ZPoly g = {f.back()};
        for (auto i : pick) g = z_mul(g, lifted[i], modulus);
        g = primitive(symmetric(g, modulus));
        auto q = z_divide(f, g);
        if (!q) return false;
        found.push_back(g);
        f = *q;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(lifted[i]);
        lifted = std::move(rest);
        return true;
      }
      for (std::size_t i = start; i < lifted.size(); ++i) {
        pick.push_back(i);
        if (rec(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    hit = rec(0);
    if (!hit) ++s;
  }
  if (degree(f) > 0) found.push_back(primitive(f));
  return found;
}

// Yun: a = prod g_i^i with g_i monic squarefree and pairwise coprime.
std::vector<std::pair<QPoly, unsigned long>> squarefree(const QPoly& monic) {
  std::vector<std::pair<QPoly, unsigned long>> out;
  QPoly da = q_deriv(monic);
  QPoly c = q_gcd(monic, da);
  QPoly w = q_div(monic, c);
  QPoly y = q_div(da, c);
  QPoly z = q_sub(y, q_deriv(w));
  unsigned long i = 1;
  while (degree(w) > 0) {
    QPoly g = q_gcd(w, z);
    if (degree(g) > 0) out.emplace_back(g, i);
    w = q_div(w, g);
    y = q_div(z, g);
    z = q_sub(y, q_deriv(w));
    ++i;
  }
  return out;
}

}  // namespace

Factorization factor_univariate(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<std::size_t> used = p.used_variables();
  if (used.size() > 1) throw Error(ErrorCode::NotUnivariate, "polynomial has several variables");
  Factorization result;
  if (used.empty()) {
    result.unit = p.constant_value();
    return result;
  }
  const std::size_t var = used.front();
  QPoly a(p.degree_in(var) + 1, 0);
  for (const auto& [e, c] : p.terms()) a[e[var]] = c;
  result.unit = a.back();
  for (const auto& [g, mult] : squarefree(q_monic(a))) {
    for (const ZPoly& z : factor_squarefree(q_to_primitive(g))) {
      MultiPoly f(p.nvars());
      Exponent e(p.nvars(), 0);
      Rational lc = z.back();
      for (std::size_t i = 0; i < z.size(); ++i) {
        e[var] = i;
        f.add_term(e, Rational(z[i]) / lc);
      }
      result.factors.emplace_back(std::move(f), mult);
    }
  }
  auto key = [var](const MultiPoly& f) {
    std::vector<Rational> c(f.degree_in(var) + 1, 0);
    for (const auto& [e, v] : f.terms()) c[e[var]] = v;
    return std::make_pair(c.size(), c);
  };
  std::sort(result.factors.begin(), result.factors.end(), [&](const auto& x, const auto& y) {
    auto kx = key(x.first), ky = key(y.first);
    if (kx != ky) return kx < ky;
    return x.second < y.second;
  });
  return result;
}

}  // namespace toriparam
