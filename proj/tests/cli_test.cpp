#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(TORIPARAM_DATA_DIR) + "/" + name; }

Result run(std::vector<std::string> args, bool tty = false) {
  std::ostringstream out, err;
  int code = toriparam::cli::run(args, out, err, tty);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, ResolveSingularTriangle) {
  auto r = run({"resolve", data("singular_triangle.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "added x4 = (0, -1) inside cone {x2,x3}")) << r.out;
  EXPECT_TRUE(has_line(r.out, "virtual offsets: (0, 1, 1, 1)")) << r.out;
  auto j = nlohmann::json::parse(run({"--json", "resolve", data("singular_triangle.json")}).out);
  ASSERT_EQ(j["added_rays"].size(), 1u);
  EXPECT_EQ(j["added_rays"][0]["ray"], nlohmann::json::parse("[0, -1]"));
}

TEST(Cli, GroupSquare) {
  auto r = run({"group", data("square.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "G = (μ1, μ1, μ2, μ2)")) << r.out;
  EXPECT_TRUE(has_line(r.out, "μ_Δ = μ1*μ2")) << r.out;
  EXPECT_TRUE(has_line(r.out, "G_Δ = (λ, λ, λ^-1, λ^-1)")) << r.out;
}

TEST(Cli, GroupResolvedTriangle) {
  auto r = run({"group", data("singular_triangle.json"), "--resolved"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "G_Δ,Σ = (1, λ, λ, λ^-2)")) << r.out;
}

TEST(Cli, IrreduciblePentagon) {
  auto r = run({"irreducible", data("pentagon.json"), "--tuple", "(u*v,1,u,v,1)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("{x1,x3}"), std::string::npos) << r.out;
  EXPECT_EQ(run({"irreducible", data("pentagon.json"), "--tuple", "(1,u,1,1,1)"}).code, 0);
}

TEST(Cli, FanPointsMonomials) {
  auto fan = run({"fan", data("pentagon.json")});
  EXPECT_EQ(fan.code, 0);
  EXPECT_TRUE(has_line(fan.out, "primitive collections: {x1,x3} {x1,x4} {x2,x4} {x2,x5} {x3,x5}")) << fan.out;
  auto pts = nlohmann::json::parse(run({"--json", "points", data("pentagon.json")}).out);
  EXPECT_EQ(pts["count"], 8);
  auto mono = run({"monomials", data("pentagon.json")});
  EXPECT_TRUE(has_line(mono.out, "(1, 1)  x1^2*x2^3*x3^2")) << mono.out;
  auto res = run({"monomials", data("singular_triangle.json"), "--resolved"});
  EXPECT_TRUE(has_line(res.out, "(0, 1)  x1")) << res.out;
}

TEST(Cli, ComposeAndDecompose) {
  auto c = nlohmann::json::parse(run({"--json", "compose", data("pentagon.json"), "--tuple", "(u*v,1,u,v,1)"}).out);
  EXPECT_EQ(c["content"], "u*v^2");
  auto target = "(" + [&] {
    std::string s;
    for (std::size_t k = 0; k < c["raw"].size(); ++k) s += (k ? "," : "") + c["raw"][k].get<std::string>();
    return s;
  }() + ")";
  auto d = run({"decompose", data("pentagon.json"), "--target", target});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_TRUE(has_line(d.out, "q = u*v^2")) << d.out;
  EXPECT_TRUE(has_line(d.out, "F = (1, u, 1, 1, 1)")) << d.out;
  auto r = run({"decompose", data("singular_triangle.json"), "--resolved", "--target", "(u,u,v,u)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "F = (v, 1, 1, u)")) << r.out;
  auto none = run({"decompose", data("singular_triangle.json"), "--target", "(u,u,v,u)"});
  EXPECT_EQ(none.code, 1);
}

TEST(Cli, SystemAndHintsFromFiles) {
  auto steiner = data("steiner_system.json");
  auto r = run({"decompose", data("p2_triangle.json"), "--system", "@" + steiner, "--target", "(u,0,0,v)"});
  EXPECT_EQ(r.code, 1);
  std::string hints = ::testing::TempDir() + "hints.txt";
  std::ofstream(hints) << "(u + v, u - v)";
  auto q = run({"decompose", data("square.json"), "--target",
                "((u-v)*(u+v), (u-v)*(u+v), (u-v)*(u+v), (u-v)*(u+v))", "--hints", "@" + hints});
  EXPECT_EQ(q.code, 0) << q.err;
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--target", "(u^2, v^2, u*v)", "--relation", "x1*x2 - x3^2"}).code, 0);
  EXPECT_EQ(run({"verify", "--target", "(u^2, v^2, u*v)", "--relation", "x1 - x3"}).code, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto missing = run({"fan", "/nonexistent.json"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("error"), std::string::npos);
  auto syntax = run({"irreducible", data("square.json"), "--tuple", "(u +, 1)"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("position"), std::string::npos) << syntax.err;
  EXPECT_EQ(run({"irreducible", data("square.json"), "--tuple", "(u, 1)"}).code, 2);
  EXPECT_EQ(run({"resolve", data("steiner_system.json")}).code, 2);
}

TEST(Cli, DeterministicJson) {
  for (const char* cmd : {"fan", "group", "resolve", "points"}) {
    auto a = run({"--json", cmd, data("pentagon.json")});
    auto b = run({"--json", cmd, data("pentagon.json")});
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(nlohmann::json::parse(a.out));
  }
}

TEST(Cli, Color) {
  setenv("TORIPARAM_COLOR", "always", 1);
  EXPECT_NE(run({"fan", data("square.json")}).out.find("\x1b["), std::string::npos);
  setenv("TORIPARAM_COLOR", "never", 1);
  EXPECT_EQ(run({"fan", data("square.json")}, true).out.find("\x1b["), std::string::npos);
  setenv("TORIPARAM_COLOR", "auto", 1);
  EXPECT_NE(run({"fan", data("square.json")}, true).out.find("\x1b["), std::string::npos);
  EXPECT_EQ(run({"fan", data("square.json")}, false).out.find("\x1b["), std::string::npos);
  unsetenv("TORIPARAM_COLOR");
}
