#include "toriparam/decomposition.hpp"

#include <algorithm>
#include <functional>

#include "toriparam/quotient_group.hpp"
#include "toriparam/error.hpp"
#include "toriparam/multiplicative.hpp"

namespace toriparam {

namespace {

constexpr std::size_t kMaxOrderCombinations = 4096;

struct FactoredComponent {
  std::size_t index;           // component j of the system
  Rational coefficient;        // a_j of its single monomial
  IntVec exponents;            // row of E
  std::vector<unsigned long> mult;  // per irreducible
};

using Factorer = std::function<std::vector<std::pair<MultiPoly, unsigned long>>(const MultiPoly&)>;

std::size_t index_of(std::vector<MultiPoly>& irreducibles, const MultiPoly& p) {
  auto it = std::find(irreducibles.begin(), irreducibles.end(), p);
  if (it != irreducibles.end()) return static_cast<std::size_t>(it - irreducibles.begin());
  irreducibles.push_back(p);
  return irreducibles.size() - 1;
}

// All nonnegative integer o with a o = e and o_i <= bound, smallest sum
// first.
std::vector<IntVec> nonnegative_solutions(const IntMat& a, const IntVec& e, const Integer& bound) {
  std::vector<IntVec> out;
  auto sol = solve_integer_linear(a, e);
  if (!sol) return out;
  const IntMat& k = sol->kernel;
  const std::size_t n = a.cols(), kr = k.cols();
  auto accept = [&](const IntVec& o) {
    for (const auto& x : o)
      if (x < 0 || x > bound) return;
    if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
  };
  if (kr == 0) {
    accept(sol->particular);
  } else {
    // Pick kr coordinates on which the kernel is invertible; the values of o
    // there determine t in o = particular + k t.
    std::vector<std::size_t> rows;
    {
      std::vector<IntVec> chosen;
      for (std::size_t i = 0; i < n && rows.size() < kr; ++i) {
        chosen.push_back(k.row(i));
        if (rank(IntMat::from_rows(chosen, kr)) == chosen.size()) {
          rows.push_back(i);
        } else {
          chosen.pop_back();
        }
      }
    }
    std::vector<IntVec> sub_rows;
    for (auto i : rows) sub_rows.push_back(k.row(i));
    IntMat ks = IntMat::from_rows(sub_rows, kr);
    IntVec vals(kr, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == kr) {
        IntVec rhs(kr);
        for (std::size_t j = 0; j < kr; ++j) rhs[j] = vals[j] - sol->particular[rows[j]];
        auto t = solve_rational_independent(ks, rhs);
        if (!t) return;
        IntVec ti;
        for (const auto& x : *t) {
          if (x.get_den() != 1) return;
          ti.push_back(x.get_num());
        }
        IntVec o = sol->particular;
        IntVec shift = k * ti;
        for (std::size_t i = 0; i < n; ++i) o[i] += shift[i];
        accept(o);
        return;
      }
      for (Integer v = 0; v <= bound; ++v) {
        vals[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) {
    Integer sx = 0, sy = 0;
    for (const auto& v : x) sx += v;
    for (const auto& v : y) sy += v;
    if (sx != sy) return sx < sy;
    return x < y;
  });
  return out;
}

std::vector<std::vector<std::size_t>> subsets_in_size_order(const std::vector<std::size_t>& base) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= base.size(); ++size) {
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (pick.size() == size) {
        out.push_back(pick);
        return;
      }
      for (std::size_t i = start; i < base.size(); ++i) {
        pick.push_back(base[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

DecompositionResult decompose(const std::vector<MultiPoly>& h_raw, const ParamSystem& system,
                              const Fan& fan, const Factorer& factor) {
  const std::size_t s = system.size(), r = system.variable_count();
  if (h_raw.size() != s) throw Error(ErrorCode::LengthMismatch, "target and system differ in length");
  if (fan.ray_count() != r) throw Error(ErrorCode::LengthMismatch, "fan and system differ in variables");
  for (std::size_t i = 0; i < r; ++i) {
    if (fan.rays[i] != system.hyperplanes[i].normal) {
      throw Error(ErrorCode::InvalidInput, "fan rays must be the system's hyperplane normals");
    }
  }
  const std::size_t nv = h_raw.front().nvars();
  for (const auto& h : h_raw)
    if (h.nvars() != nv) throw Error(ErrorCode::VariableCountMismatch, "target components disagree on variables");
  if (std::all_of(h_raw.begin(), h_raw.end(), [](const MultiPoly& h) { return h.is_zero(); })) {
    throw Error(ErrorCode::InvalidInput, "the target is identically zero");
  }

  // Components with a single Delta-monomial drive the order matching.
  std::vector<std::size_t> mono;
  for (std::size_t j = 0; j < s; ++j)
    if (system.components[j].coefficients.size() == 1) mono.push_back(j);
  if (mono.empty()) throw Error(ErrorCode::NotMonomialSystem, "no component is a single monomial");

  DecompositionResult res;
  res.content = gcd_many(h_raw);
  std::vector<MultiPoly> h;
  for (const auto& x : h_raw) h.push_back(*divide_exact(x, res.content));

  std::vector<MultiPoly> irreducibles;
  std::vector<FactoredComponent> nonzero;
  std::vector<IntVec> zero_rows;
  for (auto j : mono) {
    const auto& [m, a] = *system.components[j].coefficients.begin();
    IntVec e = hyperplane_exponents(system.hyperplanes, m);
    if (h[j].is_zero()) {
      zero_rows.push_back(e);
      continue;
    }
    FactoredComponent fc{j, a, e, {}};
    for (const auto& [p, k] : factor(h[j])) {
      std::size_t idx = index_of(irreducibles, p);
      if (fc.mult.size() <= idx) fc.mult.resize(idx + 1, 0);
      fc.mult[idx] += k;
    }
    nonzero.push_back(std::move(fc));
  }
  for (auto& fc : nonzero) fc.mult.resize(irreducibles.size(), 0);

  // Variables that may vanish: those outside every nonzero monomial.
  std::vector<std::size_t> may_vanish;
  for (std::size_t i = 0; i < r; ++i) {
    bool used = std::any_of(nonzero.begin(), nonzero.end(),
                            [&](const FactoredComponent& fc) { return fc.exponents[i] > 0; });
    if (!used) may_vanish.push_back(i);
  }

  SubtorusDescription g = compute_G(fan);
  IntVec offsets;
  for (const auto& hp : system.hyperplanes) offsets.push_back(hp.offset);
  Character chi = restrict_character(g, offsets);

  for (const auto& zero_set : subsets_in_size_order(may_vanish)) {
    bool hits_all = std::all_of(zero_rows.begin(), zero_rows.end(), [&](const IntVec& e) {
      return std::any_of(zero_set.begin(), zero_set.end(), [&](std::size_t i) { return e[i] > 0; });
    });
    if (!hits_all) continue;

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < r; ++i)
      if (std::find(zero_set.begin(), zero_set.end(), i) == zero_set.end()) live.push_back(i);
    IntMat e_mat(nonzero.size(), live.size());
    for (std::size_t row = 0; row < nonzero.size(); ++row)
      for (std::size_t c = 0; c < live.size(); ++c) e_mat(row, c) = nonzero[row].exponents[live[c]];

    // Orders of each irreducible along the f_i.
    std::vector<std::vector<IntVec>> options;
    bool solvable = true;
    for (std::size_t p = 0; p < irreducibles.size() && solvable; ++p) {
      IntVec e(nonzero.size());
      unsigned long bound = 0;
      for (std::size_t row = 0; row < nonzero.size(); ++row) {
        e[row] = nonzero[row].mult[p];
        bound = std::max(bound, nonzero[row].mult[p]);
      }
      options.push_back(nonnegative_solutions(e_mat, e, Integer(bound)));
      solvable = !options.back().empty();
    }
    if (!solvable) continue;

    std::vector<std::size_t> choice(options.size(), 0);
    for (std::size_t attempt = 0; attempt < kMaxOrderCombinations; ++attempt) {
      // Shape of f up to constants.
      ParamTuple shape(r, MultiPoly(nv));
      for (std::size_t c = 0; c < live.size(); ++c) {
        MultiPoly fi = MultiPoly::constant(nv, 1);
        for (std::size_t p = 0; p < irreducibles.size(); ++p) {
          const Integer& o = options[p][choice[p]][c];
          if (o > 0) fi *= pow(irreducibles[p], o.get_ui());
        }
        shape[live[c]] = fi;
      }
      // Constants: c * a_j * prod kappa_i^{E_ji} = h_j / monomial(shape).
      std::optional<RatVec> kappa;
      bool consistent = true;
      RatVec gamma;
      for (const auto& fc : nonzero) {
        IntVec ex(r, 0);
        for (auto i : live) ex[i] = fc.exponents[i];
        auto ratio = constant_ratio(h[fc.index], f_power(shape, ex));
        if (!ratio) {
          consistent = false;
          break;
        }
        gamma.push_back(*ratio / fc.coefficient);
      }
      Rational scalar = 1;
      if (consistent) {
        kappa = solve_multiplicative(e_mat, gamma);
        if (!kappa) {
          IntMat with_c(e_mat.rows(), live.size() + 1);
          for (std::size_t row = 0; row < e_mat.rows(); ++row) {
            for (std::size_t c = 0; c < live.size(); ++c) with_c(row, c) = e_mat(row, c);
            with_c(row, live.size()) = 1;
          }
          if (auto sol = solve_multiplicative(with_c, gamma)) {
            scalar = sol->back();
            sol->pop_back();
            kappa = sol;
          }
        }
      }
      if (kappa) {
        ParamTuple f = shape;
        for (std::size_t c = 0; c < live.size(); ++c) f[live[c]] *= (*kappa)[c];
        bool absorbed = false;
        if (scalar != 1) {
          if (auto mu = solve_character(g, chi, scalar)) {
            f = act(mu->ambient, f);
            scalar = 1;
            absorbed = true;
          }
        }
        Composition comp = compose(system, f);
        bool matches = true;
        for (std::size_t j = 0; j < s && matches; ++j) {
          matches = comp.raw[j] * scalar == h[j];
        }
        if (matches && is_sigma_irreducible(f, fan).irreducible) {
          res.scalar = scalar;
          res.f = std::move(f);
          res.absorbed = absorbed;
          res.normalization = "f is unique up to the kernel of the character prod mu_i^(a_i) on G";
          return res;
        }
      }
      // Next combination of order solutions.
      std::size_t p = 0;
      while (p < choice.size() && ++choice[p] == options[p].size()) choice[p++] = 0;
      if (p == choice.size()) break;
    }
  }
  throw Error(ErrorCode::NoPreimage, "the target is not of the form q * c * (P o F) with F Sigma-irreducible");
}

}  // namespace

DecompositionResult decompose_curve(const std::vector<MultiPoly>& h_raw, const ParamSystem& system,
                                    const Fan& fan) {
  if (h_raw.empty()) throw Error(ErrorCode::LengthMismatch, "empty target");
  // A component must split as (monomial) * (polynomial in one parameter).
  Factorer factor = [](const MultiPoly& p) {
    std::vector<std::pair<MultiPoly, unsigned long>> out;
    const std::size_t nv = p.nvars();
    Exponent low = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < nv; ++i) low[i] = std::min(low[i], e[i]);
    for (std::size_t i = 0; i < nv; ++i)
      if (low[i] > 0) out.emplace_back(MultiPoly::variable(nv, i), low[i]);
    MultiPoly rest = *divide_exact(p, MultiPoly::monomial(low));
    if (rest.used_variables().size() > 1) {
      throw Error(ErrorCode::MultiParameterUnsupported,
                  "a component needs multivariate factorization; supply factor hints");
    }
    for (const auto& [f, k] : factor_univariate(rest).factors) out.emplace_back(normalize(f), k);
    return out;
  };
  return decompose(h_raw, system, fan, factor);
}

DecompositionResult decompose_with_hints(const std::vector<MultiPoly>& h_raw,
                                         const ParamSystem& system, const Fan& fan,
                                         const std::vector<MultiPoly>& hints) {
  if (h_raw.empty()) throw Error(ErrorCode::LengthMismatch, "empty target");
  std::vector<MultiPoly> primes;
  for (const auto& hint : hints) {
    if (hint.nvars() != h_raw.front().nvars()) {
      throw Error(ErrorCode::VariableCountMismatch, "hint uses a different number of variables");
    }
    if (hint.is_constant()) throw Error(ErrorCode::InvalidInput, "hints must be non-constant");
    MultiPoly n = normalize(hint);
    if (std::find(primes.begin(), primes.end(), n) == primes.end()) primes.push_back(n);
  }
  Factorer factor = [primes](const MultiPoly& p) {
    std::vector<std::pair<MultiPoly, unsigned long>> out;
    MultiPoly rest = p;
    for (const auto& q : primes) {
      unsigned long k = 0;
      while (auto d = divide_exact(rest, q)) {
        rest = *d;
        ++k;
      }
      if (k > 0) out.emplace_back(q, k);
    }
    if (!rest.is_constant()) {
      throw Error(ErrorCode::IncompleteHints, "the hints do not factor every monomial component");
    }
    return out;
  };
  return decompose(h_raw, system, fan, factor);
}

}  // namespace toriparam
