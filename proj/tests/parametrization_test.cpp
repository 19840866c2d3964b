#include <gtest/gtest.h>

#include "support.hpp"
#include "toriparam/multiplicative.hpp"

using namespace testing_support;

namespace {

std::vector<std::string> sorted_rendering(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render(p, VarKind::Facet));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted_texts(std::vector<std::string> texts, std::size_t nvars) {
  std::vector<MultiPoly> ps;
  for (const auto& t : texts) ps.push_back(facet(t, nvars));
  return sorted_rendering(ps);
}

std::vector<std::vector<std::size_t>> violated(const IrreducibilityReport& r) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : r.violated) out.push_back(c.ray_indices);
  return out;
}

}  // namespace

TEST(BuildPDelta, Examples) {
  auto sq = build_P_Delta(load_polytope("square.json"));
  EXPECT_TRUE(sq.is_monomial());
  EXPECT_EQ(sorted_rendering(expand_system(sq)), sorted_texts({"x2*x3", "x1*x3", "x2*x4", "x1*x4"}, 4));
  EXPECT_EQ(expand_system(sq)[0], facet("x2*x4", 4));  // lattice order starts at (0,0)
  auto p2 = build_P_Delta(load_polytope("p2_triangle.json"));
  EXPECT_EQ(sorted_rendering(expand_system(p2)),
            sorted_texts({"x1^2", "x2^2", "x3^2", "x1*x2", "x2*x3", "x3*x1"}, 3));
  EXPECT_EQ(build_P_Delta(load_polytope("pentagon.json")).size(), 8u);
}

TEST(SelectPA, PentagonVertices) {
  auto p = load_polytope("pentagon.json");
  auto sel = select_P_A(p, p.vertices());
  EXPECT_TRUE(sel.hull_is_polytope);
  EXPECT_TRUE(sel.generates_affinely);
  EXPECT_TRUE(sel.warnings.empty());
  EXPECT_EQ(sorted_rendering(expand_system(sel.system)),
            sorted_texts({"x2*x3^2*x4^2", "x1^2*x2^3*x3^2", "x3*x4^2*x5", "x1*x4*x5^2", "x1^2*x2*x5^2"}, 5));
}

TEST(SelectPA, HirzebruchSubset) {
  auto p = load_polytope("hirzebruch.json");
  auto sel = select_P_A(p, {v({-1, 1}), v({-1, 0}), v({0, 0})});
  auto comps = expand_system(sel.system);
  EXPECT_EQ(comps, (std::vector<MultiPoly>{facet("x1*x2", 4), facet("x2^2*x3", 4), facet("x2*x3*x4", 4)}));
  EXPECT_FALSE(sel.hull_is_polytope);
  EXPECT_TRUE(sel.generates_affinely);
  EXPECT_EQ(sel.warnings.size(), 1u);
  EXPECT_EQ(gcd_many(comps), facet("x2", 4));
}

TEST(SelectPA, AllPointsAndErrors) {
  auto p = load_polytope("pentagon.json");
  EXPECT_EQ(select_P_A(p, lattice_points(p)).system, build_P_Delta(p));
  try {
    select_P_A(p, {v({0, 0}), v({3, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointOutsidePolytope);
  }
  auto sq = load_polytope("square.json");
  auto diag = select_P_A(sq, {v({0, 0}), v({1, 1})});
  EXPECT_FALSE(diag.generates_affinely);
  EXPECT_FALSE(diag.hull_is_polytope);
}

TEST(SigmaIrreducible, Examples) {
  Fan sq = normal_fan(load_polytope("square.json"));
  EXPECT_TRUE(is_sigma_irreducible(params("(u, u + 1, v, v + 1)", 2), sq).irreducible);
  auto bad = is_sigma_irreducible(params("(u, u*v, v, 1)", 2), sq);
  EXPECT_FALSE(bad.irreducible);
  EXPECT_EQ(violated(bad), (std::vector<std::vector<std::size_t>>{{0, 1}}));
  Fan pent = normal_fan(load_polytope("pentagon.json"));
  EXPECT_TRUE(is_sigma_irreducible(params("(1, u, 1, 1, 1)", 2), pent).irreducible);
  auto fp = is_sigma_irreducible(params("(u*v, 1, u, v, 1)", 2), pent);
  EXPECT_FALSE(fp.irreducible);
  EXPECT_EQ(violated(fp), (std::vector<std::vector<std::size_t>>{{0, 2}, {0, 3}}));
  auto zeros = is_sigma_irreducible(params("(0, 0, 1, 1)", 2), sq);
  EXPECT_FALSE(zeros.irreducible);
  try {
    is_sigma_irreducible(params("(u, 1)", 2), sq);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(SigmaIrreducible, PreservedByConstantScaling) {
  std::mt19937_64 rng(41);
  Fan pent = normal_fan(load_polytope("pentagon.json"));
  auto pcs = brute_primitive_collections(pent);
  for (int t = 0; t < 30; ++t) {
    Plant p = random_plant(rng, 5, pcs);
    ASSERT_TRUE(is_sigma_irreducible(p.f, pent).irreducible);
    RatVec mu;
    for (int k = 0; k < 5; ++k) mu.push_back(random_nonzero_rational(rng));
    ASSERT_TRUE(is_sigma_irreducible(act(mu, p.f), pent).irreducible);
  }
}

TEST(SigmaIrreducible, AgreesWithRootOracle) {
  std::mt19937_64 rng(42);
  Fan pent = normal_fan(load_polytope("pentagon.json"));
  auto pcs = brute_primitive_collections(pent);
  for (int t = 0; t < 60; ++t) {
    Plant p = random_plant(rng, 5, {});
    ASSERT_EQ(is_sigma_irreducible(p.f, pent).irreducible, roots_sigma_irreducible(p, pcs));
  }
}

TEST(FPower, Examples) {
  auto p = load_polytope("pentagon.json");
  ParamTuple vars;
  for (std::size_t i = 0; i < 5; ++i) vars.push_back(MultiPoly::variable(5, i));
  for (const auto& m : lattice_points(p)) EXPECT_EQ(f_power(vars, m, p), MultiPoly::monomial(delta_monomial(p, m)));
  EXPECT_EQ(f_power(params("(1, u, 1, 1, 1)"), v({1, 1}), p), param("u^3"));
  EXPECT_TRUE(f_power(params("(2, 3, 5, 7, 11)"), p.vertices()[2], p).is_constant());
  EXPECT_THROW(f_power(params("(1, u, 1, 1, 1)"), v({2, 2}), p), Error);
}

TEST(Compose, Steiner) {
  auto p = load_polytope("p2_triangle.json");
  auto st = io::system_from_json(load_json("steiner_system.json"), p);
  ParamTuple f = params("(u + 1, v, u - v)", 2);
  auto c = compose(st.system, f);
  ParamTuple expected = {f[0] * f[0] + f[1] * f[1] + f[2] * f[2], f[0] * f[1], f[1] * f[2], f[2] * f[0]};
  EXPECT_EQ(c.raw, expected);
  EXPECT_EQ(c.content, param("1", 2));
}

TEST(Compose, ContentOfNonIrreducibleTuple) {
  auto p = load_polytope("pentagon.json");
  auto c = compose(build_P_Delta(p), params("(u*v, 1, u, v, 1)", 2));
  EXPECT_EQ(c.content, param("u*v^2", 2));
  EXPECT_EQ(c.reduced, compose(build_P_Delta(p), params("(1, u, 1, 1, 1)", 2)).raw);
}

TEST(Compose, FacetVariablesGiveTheSystem) {
  auto p = load_polytope("hirzebruch.json");
  auto pd = build_P_Delta(p);
  ParamTuple vars;
  for (std::size_t i = 0; i < 4; ++i) vars.push_back(MultiPoly::variable(4, i));
  auto c = compose(pd, vars);
  EXPECT_EQ(c.raw, expand_system(pd));
  EXPECT_EQ(c.content, MultiPoly::constant(4, 1));
  EXPECT_THROW(compose(pd, params("(u, v)", 2)), Error);
}

TEST(Compose, IrreducibleTuplesHaveTrivialContent) {
  std::mt19937_64 rng(43);
  for (const char* name : {"square.json", "pentagon.json", "p2_triangle.json"}) {
    auto p = load_polytope(name);
    Fan fan = normal_fan(p);
    auto pcs = brute_primitive_collections(fan);
    auto pd = build_P_Delta(p);
    for (int t = 0; t < 30; ++t) {
      Plant plant = random_plant(rng, fan.ray_count(), pcs);
      ASSERT_EQ(compose(pd, plant.f).content, param("1")) << name;
    }
  }
}

TEST(Compose, GEquivariance) {
  std::mt19937_64 rng(44);
  for (const char* name : {"square.json", "pentagon.json", "hirzebruch.json"}) {
    auto p = load_polytope(name);
    Fan fan = normal_fan(p);
    auto g = compute_G(fan);
    auto pd = build_P_Delta(p);
    Character chi = mu_delta_character(p, g);
    for (int t = 0; t < 20; ++t) {
      RatVec params_;
      for (std::size_t k = 0; k < g.params(); ++k) params_.push_back(random_nonzero_rational(rng));
      RatVec mu = group_point(g, params_);
      Plant plant = random_plant(rng, fan.ray_count(), {});
      Rational scale = power_product(params_, chi);
      auto lhs = compose(pd, act(mu, plant.f)).raw;
      auto rhs = compose(pd, plant.f).raw;
      for (std::size_t j = 0; j < lhs.size(); ++j) ASSERT_EQ(lhs[j], rhs[j] * scale);
    }
  }
}

TEST(RationalParametrization, Examples) {
  EXPECT_TRUE(is_rational_parametrization(params("(u, 0, 0, v)", 2)));
  EXPECT_FALSE(is_rational_parametrization({facet("x1*x2", 4), facet("x2^2*x3", 4), facet("x2*x3*x4", 4)}));
  EXPECT_FALSE(is_rational_parametrization(params("(0, 0)", 1)));
  EXPECT_TRUE(same_parametrization(params("(u, 2*v)", 2), params("(-3*u, -6*v)", 2)));
  EXPECT_FALSE(same_parametrization(params("(u, 2*v)", 2), params("(u, v)", 2)));
}

TEST(CheckImplicit, Examples) {
  std::mt19937_64 rng(45);
  MultiPoly quadric = facet("x1*x4 - x2*x3", 4);
  for (int t = 0; t < 20; ++t) {
    Plant pl = random_plant(rng, 4, {});
    const auto& f = pl.f;
    EXPECT_TRUE(check_implicit({f[1] * f[2], f[0] * f[2], f[1] * f[3], f[0] * f[3]}, quadric));
  }
  auto p = load_polytope("p2_triangle.json");
  auto st = io::system_from_json(load_json("steiner_system.json"), p);
  MultiPoly quartic = facet("x2^2*x3^2 + x3^2*x4^2 + x4^2*x2^2 - x1*x2*x3*x4", 4);
  EXPECT_TRUE(check_implicit(compose(st.system, params("(u^2 + 1, u - 3, 2*u)")).raw, quartic));
  EXPECT_FALSE(check_implicit(params("(1, u)"), facet("x1", 2)));
  EXPECT_THROW(check_implicit(params("(1, u)"), facet("x1", 3)), Error);
}
