#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace testing_support;

namespace {

struct Case {
  LatticePolytope p;
  Fan fan;
  ParamSystem system;
  SubtorusDescription g_delta;
};

Case smooth_setup(const std::string& name) {
  auto p = load_polytope(name);
  Fan f = normal_fan(p);
  IntVec offsets;
  for (const auto& x : p.facets()) offsets.push_back(x.offset);
  return {p, f, build_P_Delta(p), compute_G_Delta(f, offsets)};
}

Case resolved_triangle() {
  auto p = load_polytope("singular_triangle.json");
  auto rf = minimal_resolution_2d(normal_fan(p));
  auto vo = virtual_offsets(p, rf);
  return {p, rf.fan, build_P_Delta(p, virtual_hyperplanes(vo)), compute_G_Delta_Sigma(rf, vo)};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

void expect_identity(const DecompositionResult& d, const Case& s, const std::vector<MultiPoly>& h) {
  auto back = compose(s.system, d.f).raw;
  ASSERT_EQ(back.size(), h.size());
  for (std::size_t j = 0; j < h.size(); ++j) EXPECT_EQ(back[j] * d.scalar * d.content, h[j]);
  EXPECT_TRUE(is_sigma_irreducible(d.f, s.fan).irreducible);
}

}  // namespace

TEST(DecomposeCurve, NonIrreducibleTupleOnPentagon) {
  Case s = smooth_setup("pentagon.json");
  auto h = compose(s.system, params("(u*v, 1, u, v, 1)", 2)).raw;
  auto d = decompose_curve(h, s.system, s.fan);
  EXPECT_EQ(d.content, param("u*v^2", 2));
  EXPECT_EQ(d.f, params("(1, u, 1, 1, 1)", 2));
  EXPECT_EQ(d.scalar, 1);
  expect_identity(d, s, h);
}

TEST(DecomposeCurve, ResolvedTriangle) {
  Case s = resolved_triangle();
  // components for m = (-1,0), (0,0), (0,1), (1,0)
  auto h = params("(u, u, v, u)", 2);
  auto d = decompose_curve(h, s.system, s.fan);
  // (v,1,u,1) with the inserted ray last
  EXPECT_EQ(d.f, params("(v, 1, 1, u)", 2));
  expect_identity(d, s, h);
}

TEST(DecomposeCurve, RoundTripsUpToGDelta) {
  std::mt19937_64 rng(61);
  std::vector<Case> setups = {smooth_setup("square.json"), smooth_setup("pentagon.json"),
                               smooth_setup("p2_triangle.json"), resolved_triangle()};
  for (const auto& s : setups) {
    auto pcs = brute_primitive_collections(s.fan);
    for (int t = 0; t < 25; ++t) {
      Plant plant = random_plant(rng, s.fan.ray_count(), pcs, 3);
      auto h = compose(s.system, plant.f).raw;
      auto d = decompose_curve(h, s.system, s.fan);
      expect_identity(d, s, h);
      ASSERT_EQ(g_equivalent(d.f, plant.f, s.g_delta).status, EquivalenceStatus::Equivalent)
          << render_tuple(plant.f, VarKind::Param);
    }
  }
}

TEST(DecomposeCurve, ContentIsExtracted) {
  std::mt19937_64 rng(62);
  Case s = smooth_setup("square.json");
  auto pcs = brute_primitive_collections(s.fan);
  for (int t = 0; t < 10; ++t) {
    Plant plant = random_plant(rng, 4, pcs);
    MultiPoly q = param("u^2 + 1") * Rational(t + 1);
    auto h = compose(s.system, plant.f).raw;
    for (auto& x : h) x *= q;
    auto d = decompose_curve(h, s.system, s.fan);
    EXPECT_EQ(d.content, param("u^2 + 1"));
    expect_identity(d, s, h);
  }
}

TEST(DecomposeCurve, ScalarAbsorption) {
  Case s = smooth_setup("p2_triangle.json");
  // 2 * P_Delta(1, u, 1): 2 is not a square, so the scalar stays explicit
  auto h = compose(s.system, params("(1, u, 1)")).raw;
  for (auto& x : h) x *= Rational(2);
  auto d = decompose_curve(h, s.system, s.fan);
  EXPECT_EQ(d.scalar, 2);
  EXPECT_FALSE(d.absorbed);
  expect_identity(d, s, h);
  Case sq = smooth_setup("square.json");
  auto h2 = compose(sq.system, params("(1, u, u + 1, 1)")).raw;
  for (auto& x : h2) x *= Rational(6);
  auto d2 = decompose_curve(h2, sq.system, sq.fan);
  EXPECT_EQ(d2.scalar, 1);
  expect_identity(d2, sq, h2);
}

TEST(DecomposeCurve, FailureDetection) {
  auto p2 = load_polytope("p2_triangle.json");
  auto st = io::system_from_json(load_json("steiner_system.json"), p2);
  EXPECT_EQ(code_of([&] { decompose_curve(params("(u, 0, 0, v)", 2), st.system, st.fan); }), ErrorCode::NoPreimage);
  // weighted quadric: the unresolved system would need square roots
  Case s = smooth_setup("singular_triangle.json");
  auto h = params("(u, u, v, u)", 2);
  EXPECT_EQ(code_of([&] { decompose_curve(h, s.system, s.fan); }), ErrorCode::NoPreimage);
  // not a point of the variety at all
  Case sq = smooth_setup("square.json");
  EXPECT_EQ(code_of([&] { decompose_curve(params("(1, u, u, 1)"), sq.system, sq.fan); }), ErrorCode::NoPreimage);
}

TEST(DecomposeCurve, InputErrors) {
  Case sq = smooth_setup("square.json");
  EXPECT_EQ(code_of([&] { decompose_curve(params("(u*v + 1, 1, 1, 1)", 2), sq.system, sq.fan); }),
            ErrorCode::MultiParameterUnsupported);
  EXPECT_EQ(code_of([&] { decompose_curve(params("(u, 1)"), sq.system, sq.fan); }), ErrorCode::LengthMismatch);
  // a system with no monomial component
  auto p2 = load_polytope("p2_triangle.json");
  io::json j = io::json::parse(R"({"components": [
      {"coefficients": [{"m": [0, 0], "a": "1"}, {"m": [1, 0], "a": "1"}]},
      {"coefficients": [{"m": [0, 1], "a": "1"}, {"m": [1, 0], "a": "1"}]}]})");
  auto ns = io::system_from_json(j, p2);
  EXPECT_EQ(code_of([&] { decompose_curve(params("(u, 1)"), ns.system, ns.fan); }), ErrorCode::NotMonomialSystem);
}

TEST(DecomposeWithHints, Quadric) {
  Case s = smooth_setup("square.json");
  ParamTuple f = params("(u + v, u - v + 1, v^2 + u, 2*u + 3)", 2);
  auto h = compose(s.system, f).raw;
  auto d = decompose_with_hints(h, s.system, s.fan, f);
  expect_identity(d, s, h);
  EXPECT_EQ(g_equivalent(d.f, f, s.g_delta).status, EquivalenceStatus::Equivalent);
}

TEST(DecomposeWithHints, ConstantTarget) {
  Case s = smooth_setup("square.json");
  auto h = compose(s.system, params("(2, 3, 5, 7)", 2)).raw;
  auto d = decompose_with_hints(h, s.system, s.fan, {});
  for (const auto& x : d.f) EXPECT_TRUE(x.is_constant());
  expect_identity(d, s, h);
}

TEST(DecomposeWithHints, SteinerUpToSign) {
  auto p2 = load_polytope("p2_triangle.json");
  auto st = io::system_from_json(load_json("steiner_system.json"), p2);
  ParamTuple f = params("(u + v, u - 2*v + 1, v)", 2);
  auto h = compose(st.system, f).raw;
  auto d = decompose_with_hints(h, st.system, st.fan, f);
  bool plus = d.f == f, minus = d.f == act({-1, -1, -1}, f);
  EXPECT_TRUE(plus || minus);
  EXPECT_EQ(d.scalar, 1);
}

TEST(DecomposeWithHints, IncompleteHints) {
  Case s = smooth_setup("square.json");
  ParamTuple f = params("(u + v, u - v + 1, v^2 + u, 2*u + 3)", 2);
  auto h = compose(s.system, f).raw;
  EXPECT_EQ(code_of([&] { decompose_with_hints(h, s.system, s.fan, {f[0], f[1]}); }), ErrorCode::IncompleteHints);
}
