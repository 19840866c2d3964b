#include "toriparam/quotient_group.hpp"

#include <algorithm>
#include <sstream>

#include "toriparam/error.hpp"
#include "toriparam/multiplicative.hpp"

namespace toriparam {

namespace {

Integer reduce_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_torsion_free(const SubtorusDescription& g) {
  if (!g.torsion.empty()) {
    throw Error(ErrorCode::InvalidInput,
                "parameter characters are only defined on torsion-free groups");
  }
}

void require_length(const IntVec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong length");
  }
}

// Rational d-th root of c, if any.
std::optional<Rational> rational_root(const Rational& c, const Integer& d) {
  if (!d.fits_ulong_p()) return std::nullopt;
  unsigned long k = d.get_ui();
  bool negative = c < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  Integer num = abs(c.get_num()), den = c.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
  Rational out(negative ? Integer(-rn) : rn, rd);
  out.canonicalize();
  return out;
}

std::string power_text(const std::string& name, const Integer& e) {
  if (e == 1) return name;
  return name + "^" + e.get_str();
}

}  // namespace

SubtorusDescription subgroup_from_relations(const IntMat& relations) {
  const std::size_t r = relations.cols();
  SmithResult s = smith_normal_form(relations);
  SubtorusDescription g;
  g.r = r;
  g.exponent_matrix = canonical_lattice_basis(s.q.column_range(s.rank, r - s.rank));
  for (std::size_t l = 0; l < s.rank; ++l) {
    const Integer& d = s.d(l, l);
    if (d == 1) continue;
    IntVec w = s.q.column(l);
    for (auto& x : w) x = reduce_mod(x, d);
    g.torsion.push_back(TorsionGenerator{std::move(w), d});
  }
  return g;
}

SubtorusDescription compute_G(const Fan& f) { return subgroup_from_relations(f.ray_matrix()); }

IntMat relation_lattice(const SubtorusDescription& g) {
  const std::size_t r = g.r, k = g.params(), t = g.torsion.size();
  IntMat m(k + t, r + t);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < r; ++i) m(j, i) = g.exponent_matrix(i, j);
  for (std::size_t c = 0; c < t; ++c) {
    for (std::size_t i = 0; i < r; ++i) m(k + c, i) = g.torsion[c].exponents[i];
    m(k + c, r + c) = g.torsion[c].order;
  }
  IntMat kernel = k + t == 0 ? IntMat::identity(r + t) : saturated_kernel_basis(m);
  IntMat projected(r, kernel.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < kernel.cols(); ++c) projected(i, c) = kernel(i, c);
  return canonical_lattice_basis(projected).transposed();
}

Character restrict_character(const SubtorusDescription& g, const IntVec& ambient) {
  require_length(ambient, g.r, "ambient character");
  Character chi(g.params(), 0);
  for (std::size_t j = 0; j < g.params(); ++j)
    for (std::size_t i = 0; i < g.r; ++i) chi[j] += ambient[i] * g.exponent_matrix(i, j);
  return chi;
}

Character mu_delta_character(const LatticePolytope& p, const SubtorusDescription& g) {
  IntVec a;
  for (const auto& f : p.facets()) a.push_back(f.offset);
  return restrict_character(g, a);
}

SubtorusDescription kernel_of_character(const SubtorusDescription& g, const Character& chi) {
  require_length(chi, g.params(), "character");
  if (is_zero(chi)) return g;
  require_torsion_free(g);
  const std::size_t k = g.params();
  IntMat row(1, k);
  for (std::size_t j = 0; j < k; ++j) row(0, j) = chi[j];
  HermiteResult h = hermite_normal_form(row);
  const Integer d = h.h(0, 0);
  IntMat eu = g.exponent_matrix * h.u;
  SubtorusDescription out;
  out.r = g.r;
  out.exponent_matrix = canonical_lattice_basis(eu.column_range(1, k - 1));
  if (d > 1) {
    IntVec w = eu.column(0);
    for (auto& x : w) x = reduce_mod(x, d);
    out.torsion.push_back(TorsionGenerator{std::move(w), d});
  }
  return out;
}

SubtorusDescription kernel_of_ambient_character(const SubtorusDescription& g,
                                                const IntVec& ambient) {
  require_length(ambient, g.r, "ambient character");
  IntMat w = relation_lattice(g);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < w.rows(); ++i) rows.push_back(w.row(i));
  rows.push_back(ambient);
  return subgroup_from_relations(IntMat::from_rows(rows, g.r));
}

SubtorusDescription compute_G_Delta(const Fan& f, const IntVec& offsets) {
  SubtorusDescription g = compute_G(f);
  if (!g.torsion.empty()) return kernel_of_ambient_character(g, offsets);
  return kernel_of_character(g, restrict_character(g, offsets));
}

RatVec group_point(const SubtorusDescription& g, const RatVec& params) {
  if (params.size() != g.params()) {
    throw Error(ErrorCode::DimensionMismatch, "parameter vector has wrong length");
  }
  RatVec mu;
  for (std::size_t i = 0; i < g.r; ++i) {
    IntVec e(g.params());
    for (std::size_t j = 0; j < g.params(); ++j) e[j] = g.exponent_matrix(i, j);
    mu.push_back(power_product(params, e));
  }
  return mu;
}

std::optional<GroupPoint> solve_character(const SubtorusDescription& g, const Character& chi,
                                          const Rational& c) {
  require_length(chi, g.params(), "character");
  if (c == 0) throw Error(ErrorCode::ZeroScalar, "a character never takes the value 0");
  const std::size_t k = g.params();
  if (is_zero(chi)) {
    if (c != 1) return std::nullopt;
    RatVec ones(k, 1);
    return GroupPoint{ones, group_point(g, ones)};
  }
  IntMat row(1, k);
  for (std::size_t j = 0; j < k; ++j) row(0, j) = chi[j];
  HermiteResult h = hermite_normal_form(row);
  auto s = rational_root(c, h.h(0, 0));
  if (!s) return std::nullopt;
  RatVec params;
  for (std::size_t j = 0; j < k; ++j) params.push_back(power_product({*s}, {h.u(j, 0)}));
  return GroupPoint{params, group_point(g, params)};
}

bool contains(const SubtorusDescription& g, const RatVec& mu) {
  if (mu.size() != g.r) throw Error(ErrorCode::LengthMismatch, "group element has wrong length");
  if (std::any_of(mu.begin(), mu.end(), [](const Rational& x) { return x == 0; })) return false;
  IntMat w = relation_lattice(g);
  for (std::size_t i = 0; i < w.rows(); ++i)
    if (power_product(mu, w.row(i)) != 1) return false;
  return true;
}

std::vector<MultiPoly> act(const RatVec& mu, const std::vector<MultiPoly>& f) {
  if (mu.size() != f.size()) throw Error(ErrorCode::LengthMismatch, "group element and tuple differ in length");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (mu[i] == 0) throw Error(ErrorCode::ZeroScalar, "group elements have nonzero entries");
    out.push_back(f[i] * mu[i]);
  }
  return out;
}

EquivalenceResult g_equivalent(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& f2,
                               const SubtorusDescription& g) {
  if (f.size() != f2.size() || f.size() != g.r) {
    throw Error(ErrorCode::LengthMismatch, "tuples and group must have equal length");
  }
  EquivalenceResult res;
  RatVec mu(g.r, 1);
  std::vector<std::size_t> unknown;
  for (std::size_t i = 0; i < g.r; ++i) {
    if (f[i].is_zero() && f2[i].is_zero()) {
      unknown.push_back(i);
      continue;
    }
    if (f[i].is_zero() || f2[i].is_zero()) {
      res.status = EquivalenceStatus::NotEquivalent;
      return res;
    }
    auto ratio = constant_ratio(f2[i], f[i]);
    if (!ratio) {
      res.status = EquivalenceStatus::NonConstantRatio;
      return res;
    }
    mu[i] = *ratio;
  }
  // Every relation w must satisfy prod mu^w = 1; the unknown coordinates
  // enter as a multiplicative system x^A = c.
  IntMat w = relation_lattice(g);
  IntMat a(w.rows(), unknown.size());
  RatVec c;
  for (std::size_t row = 0; row < w.rows(); ++row) {
    IntVec known = w.row(row);
    for (std::size_t j = 0; j < unknown.size(); ++j) {
      a(row, j) = known[unknown[j]];
      known[unknown[j]] = 0;
    }
    c.push_back(1 / power_product(mu, known));
  }
  // Solvable over C* iff c is trivial on the left kernel of a.
  IntMat left = unknown.empty() ? IntMat::identity(w.rows())
                                : saturated_kernel_basis(a.transposed());
  for (std::size_t col = 0; col < left.cols(); ++col) {
    if (power_product(c, left.column(col)) != 1) {
      res.status = EquivalenceStatus::NotEquivalent;
      return res;
    }
  }
  res.status = EquivalenceStatus::Equivalent;
  if (unknown.empty()) {
    res.element = mu;
    return res;
  }
  if (auto x = solve_multiplicative(a, c)) {
    for (std::size_t j = 0; j < unknown.size(); ++j) mu[unknown[j]] = (*x)[j];
    res.element = mu;
  }
  return res;
}

std::vector<std::string> default_group_names(std::size_t k) {
  const char* greek[] = {"λ", "μ", "ν"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(i < 3 ? greek[i] : "t" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> indexed_names(const std::string& base, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(base + std::to_string(i + 1));
  return out;
}

std::string render_character(const Character& chi, const std::vector<std::string>& names) {
  if (names.size() != chi.size()) throw Error(ErrorCode::LengthMismatch, "wrong number of names");
  std::string out;
  for (std::size_t j = 0; j < chi.size(); ++j) {
    if (chi[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += power_text(names[j], chi[j]);
  }
  return out.empty() ? "1" : out;
}

std::string render_subgroup(const SubtorusDescription& g, const std::vector<std::string>& names) {
  if (names.size() != g.params()) throw Error(ErrorCode::LengthMismatch, "wrong number of names");
  std::vector<std::string> zeta;
  if (g.torsion.size() == 1) {
    zeta.push_back("ζ");
  } else {
    zeta = indexed_names("ζ", g.torsion.size());
  }
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < g.r; ++i) {
    std::string entry;
    for (std::size_t j = 0; j < g.params(); ++j) {
      if (g.exponent_matrix(i, j) == 0) continue;
      if (!entry.empty()) entry += "*";
      entry += power_text(names[j], g.exponent_matrix(i, j));
    }
    for (std::size_t c = 0; c < g.torsion.size(); ++c) {
      if (g.torsion[c].exponents[i] == 0) continue;
      if (!entry.empty()) entry += "*";
      entry += power_text(zeta[c], g.torsion[c].exponents[i]);
    }
    os << (i ? ", " : "") << (entry.empty() ? "1" : entry);
  }
  os << ")";
  for (std::size_t c = 0; c < g.torsion.size(); ++c) {
    os << ", " << zeta[c] << "^" << g.torsion[c].order.get_str() << " = 1";
  }
  return os.str();
}

std::string render_subgroup(const SubtorusDescription& g) {
  return render_subgroup(g, default_group_names(g.params()));
}

}  // namespace toriparam
