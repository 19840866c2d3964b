#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toriparam/quotient_group.hpp"
#include "toriparam/decomposition.hpp"
#include "toriparam/error.hpp"
#include "toriparam/fan.hpp"
#include "toriparam/io.hpp"
#include "toriparam/lattice.hpp"
#include "toriparam/multipoly.hpp"
#include "toriparam/parametrization.hpp"
#include "toriparam/poly_text.hpp"
#include "toriparam/polytope.hpp"
#include "toriparam/resolution.hpp"

namespace testing_support {

using namespace toriparam;

inline std::string data_file(const std::string& name) {
  return std::string(TORIPARAM_DATA_DIR) + "/" + name;
}

inline io::json load_json(const std::string& name) {
  std::ifstream in(data_file(name));
  return io::json::parse(in);
}

inline LatticePolytope load_polytope(const std::string& name) {
  return io::polytope_from_json(load_json(name));
}

inline MultiPoly param(const std::string& text, std::size_t nvars = 1) {
  return parse_polynomial(text, VarKind::Param, nvars);
}

inline ParamTuple params(const std::string& text, std::size_t nvars = 1) {
  return parse_tuple(text, VarKind::Param, nvars);
}

inline MultiPoly facet(const std::string& text, std::size_t nvars) {
  return parse_polynomial(text, VarKind::Facet, nvars);
}

inline IntVec v(std::initializer_list<long> e) { return make_vec(e); }

inline Integer det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Monomial exponent vectors of a system, one per component.
inline std::vector<IntVec> exponent_rows(const ParamSystem& s) {
  std::vector<IntVec> rows;
  for (std::size_t j = 0; j < s.size(); ++j) rows.push_back(s.monomial_exponents(j));
  return rows;
}

// Brute force: all subsets of rays, kept when contained in no maximal cone but
// every one-smaller subset is. Valid for simplicial fans.
inline std::vector<std::vector<std::size_t>> brute_primitive_collections(const Fan& f) {
  std::size_t r = f.ray_count();
  auto in_cone = [&](unsigned long mask) {
    for (const auto& c : f.max_cones) {
      unsigned long cm = 0;
      for (auto i : c.ray_indices) cm |= 1UL << i;
      if ((mask & ~cm) == 0) return true;
    }
    return false;
  };
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
    if (in_cone(mask)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < r; ++i) {
      if ((mask >> i & 1) && !in_cone(mask & ~(1UL << i))) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Interior lattice points of the compact boundary of conv(cone(a,b) ∩ Z^2 \ 0),
// ordered from a to b; found by a Graham scan over the triangle (0,a,b).
inline std::vector<IntVec> hj_oracle(IntVec a, IntVec b) {
  bool flipped = det2(a, b) < 0;
  if (flipped) std::swap(a, b);
  long bound = 0;
  for (const auto& x : {a[0], a[1], b[0], b[1]}) bound = std::max(bound, std::abs(x.get_si()));
  std::vector<IntVec> pts;
  for (long x = -bound; x <= bound; ++x) {
    for (long y = -bound; y <= bound; ++y) {
      IntVec p = v({x, y});
      if (x == 0 && y == 0) continue;
      if (std::gcd(std::abs(x), std::abs(y)) != 1) continue;
      // inside triangle (0,a,b): p = s a + t b with s,t >= 0, s + t <= 1
      Integer d = det2(a, b), s = det2(p, b), t = det2(a, p);
      if (s < 0 || t < 0 || s + t > d) continue;
      pts.push_back(p);
    }
  }
  std::sort(pts.begin(), pts.end(), [&](const IntVec& p, const IntVec& q) { return det2(p, q) > 0; });
  std::vector<IntVec> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2) {
      const IntVec& q = chain[chain.size() - 1];
      const IntVec& o = chain[chain.size() - 2];
      IntVec d1 = v({0, 0}), d2 = v({0, 0});
      for (int k = 0; k < 2; ++k) {
        d1[k] = q[k] - o[k];
        d2[k] = p[k] - q[k];
      }
      if (det2(d1, d2) > 0) {
        chain.pop_back();
      } else {
        break;
      }
    }
    chain.push_back(p);
  }
  std::vector<IntVec> inner(chain.begin() + 1, chain.end() - 1);
  if (flipped) std::reverse(inner.begin(), inner.end());
  return inner;
}

// Univariate tuples built from linear factors (u - root) with chosen root sets,
// so common factors are known by construction.
struct Plant {
  ParamTuple f;
  std::vector<std::set<long>> roots;
};

inline MultiPoly from_roots(const std::set<long>& roots, const Rational& c) {
  MultiPoly p = MultiPoly::constant(1, c);
  for (long r : roots) p *= MultiPoly::variable(1, 0) - MultiPoly::constant(1, r);
  return p;
}

// True when no primitive collection has a root common to all of its entries.
inline bool roots_sigma_irreducible(const Plant& p, const std::vector<std::vector<std::size_t>>& collections) {
  for (const auto& c : collections) {
    std::set<long> common = p.roots[c[0]];
    for (std::size_t k = 1; k < c.size(); ++k) {
      std::set<long> next;
      for (long r : common) {
        if (p.roots[c[k]].count(r)) next.insert(r);
      }
      common = next;
    }
    if (!common.empty()) return false;
  }
  return true;
}

inline Plant random_plant(std::mt19937_64& rng, std::size_t r,
                          const std::vector<std::vector<std::size_t>>& collections, int max_roots = 2) {
  std::uniform_int_distribution<long> root(-4, 4), count(0, max_roots), num(1, 5), sign(0, 1);
  for (;;) {
    Plant p;
    for (std::size_t i = 0; i < r; ++i) {
      std::set<long> rs;
      long n = count(rng);
      for (long k = 0; k < n; ++k) rs.insert(root(rng));
      Rational c(num(rng) * (sign(rng) ? 1 : -1), num(rng));
      c.canonicalize();
      p.roots.push_back(rs);
      p.f.push_back(from_roots(rs, c));
    }
    if (roots_sigma_irreducible(p, collections)) return p;
  }
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 7), sign(0, 1);
  Rational c(num(rng) * (sign(rng) ? 1 : -1), num(rng));
  c.canonicalize();
  return c;
}

}  // namespace testing_support

namespace toriparam {
inline void PrintTo(const MultiPoly& p, std::ostream* os) {
  *os << render(p, VarKind::Facet) << " [" << p.nvars() << " vars]";
}
}  // namespace toriparam
