#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef TORIPARAM_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "toriparam/error.hpp"
#include "toriparam/io.hpp"
#include "toriparam/poly_text.hpp"

namespace toriparam::cli {

namespace {

using io::json;

struct Options {
  bool json_out = false;
  bool resolved = false;
  std::string file, tuple, system, target, relation, hints;
};

struct Outcome {
  json data;
  int code = 0;
};

// Failures caused by the caller's input rather than by the mathematics.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string argument_text(const std::string& s) {
  return !s.empty() && s[0] == '@' ? read_file(s.substr(1)) : s;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + " is not valid JSON: " + e.what());
  }
}

LatticePolytope load_polytope(const std::string& path) {
  return io::polytope_from_json(parse_json(read_file(path), "'" + path + "'"));
}

std::string set_text(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::string("x") + std::to_string(idx[k] + 1);
  return s + "}";
}

std::string set_text(const json& one_based) {
  std::vector<std::size_t> idx;
  for (const auto& i : one_based) idx.push_back(i.get<std::size_t>() - 1);
  return set_text(idx);
}

std::string vec_text(const json& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += k ? ", " : "";
    s += v[k].is_string() ? v[k].get<std::string>() : v[k].dump();
  }
  return s + ")";
}

std::string tuple_text(const json& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].get<std::string>();
  return s + ")";
}

json poly_list(const std::vector<MultiPoly>& ps, VarKind kind) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(render(p, kind));
  return out;
}

// The system named by --system, or P_Delta (resolved with --resolved).
io::LoadedSystem load_system(const Options& o, const LatticePolytope& p) {
  if (!o.system.empty()) return io::system_from_json(parse_json(argument_text(o.system), "the system"), p);
  json j = {{"resolved", o.resolved}, {"monomials", json::array()}};
  for (const auto& m : lattice_points(p)) j["monomials"].push_back(io::to_json(m));
  return io::system_from_json(j, p);
}

// ---- commands: each returns the JSON record and exit code ----

Outcome cmd_fan(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  Fan f = normal_fan(p);
  json j = io::to_json(f);
  j["smoothness"] = io::to_json(is_smooth(f));
  json pcs = json::array();
  for (const auto& c : minimal_primitive_collections(f)) pcs.push_back(io::to_json(c));
  j["primitive_collections"] = pcs;
  return {j, 0};
}

Outcome cmd_points(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  json pts = json::array();
  for (const auto& m : lattice_points(p)) pts.push_back(io::to_json(m));
  return {{{"count", pts.size()}, {"points", pts}}, 0};
}

Outcome cmd_monomials(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  std::vector<Facet> hyperplanes = p.facets();
  if (o.resolved) {
    hyperplanes = virtual_hyperplanes(virtual_offsets(p, minimal_resolution_2d(normal_fan(p))));
  }
  json list = json::array();
  for (const auto& m : lattice_points(p)) {
    IntVec e = hyperplane_exponents(hyperplanes, m);
    list.push_back({{"m", io::to_json(m)},
                    {"exponents", io::to_json(e)},
                    {"monomial", render(MultiPoly::monomial(e), VarKind::Facet)}});
  }
  return {{{"resolved", o.resolved}, {"monomials", list}}, 0};
}

Outcome cmd_group(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  Fan f = normal_fan(p);
  IntVec offsets;
  for (const auto& x : p.facets()) offsets.push_back(x.offset);
  if (o.resolved) {
    ResolvedFan rf = minimal_resolution_2d(f);
    offsets = offsets_of(virtual_offsets(p, rf));
    f = rf.fan;
  }
  SubtorusDescription g = compute_G(f);
  auto g_names = indexed_names("μ", g.params());
  Character chi = restrict_character(g, offsets);
  SubtorusDescription kernel = compute_G_Delta(f, offsets);
  json j;
  j["resolved"] = o.resolved;
  j["offsets"] = io::to_json(offsets);
  j["G"] = io::to_json(g, g_names);
  j["character"] = {{"exponents", io::to_json(chi)}, {"text", render_character(chi, g_names)}};
  j["kernel"] = io::to_json(kernel, default_group_names(kernel.params()));
  std::string cond = render_subgroup(g, g_names);
  if (g.torsion.empty()) cond += ", " + render_character(chi, g_names) + " = 1";
  j["kernel_relation"] = cond;
  return {j, 0};
}

Outcome cmd_irreducible(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  Fan f = o.resolved ? minimal_resolution_2d(normal_fan(p)).fan : normal_fan(p);
  ParamTuple t = parse_tuple(argument_text(o.tuple), VarKind::Param);
  IrreducibilityReport rep = is_sigma_irreducible(t, f);
  json v = json::array();
  for (const auto& c : rep.violated) v.push_back(io::to_json(c));
  return {{{"irreducible", rep.irreducible}, {"violated", v}}, rep.irreducible ? 0 : 1};
}

Outcome cmd_compose(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  io::LoadedSystem ls = load_system(o, p);
  ParamTuple t = parse_tuple(argument_text(o.tuple), VarKind::Param);
  Composition c = compose(ls.system, t);
  return {{{"raw", poly_list(c.raw, VarKind::Param)},
           {"content", render(c.content, VarKind::Param)},
           {"reduced", poly_list(c.reduced, VarKind::Param)},
           {"sigma_irreducible", is_sigma_irreducible(t, ls.fan).irreducible}},
          0};
}

Outcome cmd_decompose(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  io::LoadedSystem ls = load_system(o, p);
  std::string target = argument_text(o.target);
  std::string hints = o.hints.empty() ? std::string() : argument_text(o.hints);
  std::size_t n = parse_tuple(target, VarKind::Param).front().nvars();
  if (!hints.empty()) n = std::max(n, parse_tuple(hints, VarKind::Param).front().nvars());
  ParamTuple h = parse_tuple(target, VarKind::Param, n);
  try {
    DecompositionResult d = hints.empty()
                                ? decompose_curve(h, ls.system, ls.fan)
                                : decompose_with_hints(h, ls.system, ls.fan,
                                                       parse_tuple(hints, VarKind::Param, n));
    json j = io::to_json(d);
    j["status"] = "ok";
    return {j, 0};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoPreimage) throw;
    return {{{"status", "no_preimage"}, {"message", e.what()}}, 1};
  }
}

Outcome cmd_resolve(const Options& o) {
  LatticePolytope p = load_polytope(o.file);
  ResolvedFan rf = minimal_resolution_2d(normal_fan(p));
  auto offsets = virtual_offsets(p, rf);
  json j = io::to_json(rf, offsets);
  j["smooth"] = is_smooth(rf.fan).smooth;
  return {j, 0};
}

Outcome cmd_verify(const Options& o) {
  ParamTuple h = parse_tuple(argument_text(o.target), VarKind::Param);
  MultiPoly rel = parse_polynomial(argument_text(o.relation), VarKind::Facet, h.size());
  bool holds = check_implicit(h, rel);
  return {{{"holds", holds}}, holds ? 0 : 1};
}

// ---- human-readable forms, computed from the JSON only ----

struct Painter {
  bool on;
  std::string verdict(bool ok, const std::string& text) const {
    if (!on) return text;
    return (ok ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
  }
};

std::string human_fan(const json& j, const Painter& paint) {
  std::ostringstream os;
  os << "rays:\n";
  for (std::size_t i = 0; i < j["rays"].size(); ++i) os << "  x" << i + 1 << " = " << vec_text(j["rays"][i]) << "\n";
  os << "maximal cones:";
  for (const auto& c : j["max_cones"]) os << " " << set_text(c);
  bool smooth = j["smoothness"]["smooth"];
  os << "\nsmooth: " << paint.verdict(smooth, smooth ? "yes" : "no") << "\n";
  for (const auto& s : j["smoothness"]["singular_cones"]) {
    os << "singular cone " << set_text(s["cone"]) << " multiplicity " << s["multiplicity"].dump() << "\n";
  }
  os << "primitive collections:";
  for (const auto& c : j["primitive_collections"]) os << " " << set_text(c);
  os << "\n";
  return os.str();
}

std::string human_points(const json& j, const Painter&) {
  std::ostringstream os;
  os << j["count"].get<std::size_t>() << " lattice points\n";
  for (const auto& m : j["points"]) os << "  " << vec_text(m) << "\n";
  return os.str();
}

std::string human_monomials(const json& j, const Painter&) {
  std::ostringstream os;
  for (const auto& m : j["monomials"]) {
    os << vec_text(m["m"]) << "  " << m["monomial"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string human_group(const json& j, const Painter&) {
  bool resolved = j["resolved"];
  std::string sub = resolved ? "Δ,Σ" : "Δ";
  std::ostringstream os;
  os << "G = " << j["G"]["text"].get<std::string>() << "\n";
  os << "μ_" << sub << " = " << j["character"]["text"].get<std::string>() << "\n";
  os << "G_" << sub << " = " << j["kernel"]["text"].get<std::string>() << "\n";
  os << "G_" << sub << " = " << j["kernel_relation"].get<std::string>() << "\n";
  return os.str();
}

std::string human_irreducible(const json& j, const Painter& paint) {
  bool ok = j["irreducible"];
  std::ostringstream os;
  os << "Σ-irreducible: " << paint.verdict(ok, ok ? "yes" : "no") << "\n";
  if (!ok) {
    os << "violated:";
    for (const auto& c : j["violated"]) os << " " << set_text(c);
    os << "\n";
  }
  return os.str();
}

std::string human_compose(const json& j, const Painter&) {
  std::ostringstream os;
  os << "P∘F = " << tuple_text(j["raw"]) << "\n";
  os << "content = " << j["content"].get<std::string>() << "\n";
  os << "H = " << tuple_text(j["reduced"]) << "\n";
  os << "F Σ-irreducible: " << (j["sigma_irreducible"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

std::string human_decompose(const json& j, const Painter& paint) {
  std::ostringstream os;
  if (j["status"] == "no_preimage") {
    os << paint.verdict(false, "no preimage") << ": " << j["message"].get<std::string>() << "\n";
    return os.str();
  }
  os << "q = " << j["content"].get<std::string>() << "\n";
  os << "c = " << j["scalar"].get<std::string>() << (j["absorbed"].get<bool>() ? " (absorbed)" : "") << "\n";
  os << "F = " << tuple_text(j["f"]) << "\n";
  os << j["normalization"].get<std::string>() << "\n";
  return os.str();
}

std::string human_resolve(const json& j, const Painter& paint) {
  std::ostringstream os;
  if (j["added_rays"].empty()) os << "already smooth; no rays added\n";
  for (const auto& a : j["added_rays"]) {
    os << "added x" << a["index"].get<std::size_t>() << " = " << vec_text(a["ray"]) << " inside cone "
       << set_text(a["origin"]) << "\n";
  }
  json offs = json::array();
  for (const auto& v : j["virtual_offsets"]) offs.push_back(v["offset"]);
  os << "virtual offsets: " << vec_text(offs) << "\n";
  bool smooth = j["smooth"];
  os << "smooth: " << paint.verdict(smooth, smooth ? "yes" : "no") << "\n";
  return os.str();
}

std::string human_verify(const json& j, const Painter& paint) {
  bool ok = j["holds"];
  return std::string("relation holds: ") + paint.verdict(ok, ok ? "yes" : "no") + "\n";
}

bool color_enabled(bool tty) {
  const char* env = std::getenv("TORIPARAM_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return tty;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty) {
  CLI::App app{"Universal rational parametrizations of toric varieties"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Print the JSON record");

  using Command = Outcome (*)(const Options&);
  using Human = std::string (*)(const json&, const Painter&);
  struct Entry {
    CLI::App* sub;
    Command cmd;
    Human human;
  };
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* help, Command cmd, Human human, bool needs_file = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_file) sub->add_option("FILE", o.file, "Polytope JSON")->required();
    sub->add_flag("--json", o.json_out, "Print the JSON record");
    entries.push_back({sub, cmd, human});
    return sub;
  };
  add("fan", "Normal fan, smoothness and primitive collections", cmd_fan, human_fan);
  add("points", "Lattice points", cmd_points, human_points);
  add("monomials", "Delta-monomials", cmd_monomials, human_monomials)
      ->add_flag("--resolved", o.resolved, "Use the minimal resolution");
  add("group", "The groups G and G_Delta", cmd_group, human_group)
      ->add_flag("--resolved", o.resolved, "Use the minimal resolution");
  auto* irr = add("irreducible", "Sigma-irreducibility of a tuple", cmd_irreducible, human_irreducible);
  irr->add_option("--tuple", o.tuple, "Tuple F, inline or @file")->required();
  irr->add_flag("--resolved", o.resolved, "Use the minimal resolution");
  auto* comp = add("compose", "Compose a system with a tuple", cmd_compose, human_compose);
  comp->add_option("--system", o.system, "System JSON, inline or @file (default: all lattice points)");
  comp->add_option("--tuple", o.tuple, "Tuple F, inline or @file")->required();
  comp->add_flag("--resolved", o.resolved, "Default system on the minimal resolution");
  auto* dec = add("decompose", "Recover F from H", cmd_decompose, human_decompose);
  dec->add_option("--system", o.system, "System JSON, inline or @file (default: all lattice points)");
  dec->add_option("--target", o.target, "Tuple H, inline or @file")->required();
  dec->add_option("--hints", o.hints, "Tuple of irreducible factors, inline or @file");
  dec->add_flag("--resolved", o.resolved, "Default system on the minimal resolution");
  add("resolve", "Minimal resolution and virtual offsets", cmd_resolve, human_resolve);
  auto* ver = add("verify", "Check an implicit relation", cmd_verify, human_verify, false);
  ver->add_option("--target", o.target, "Tuple H, inline or @file")->required();
  ver->add_option("--relation", o.relation, "Relation in x1..x(s+1), inline or @file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& e : entries) {
      if (!e.sub->parsed()) continue;
      Outcome res = e.cmd(o);
      if (o.json_out) {
        out << res.data.dump(2) << "\n";
      } else {
        out << e.human(res.data, Painter{color_enabled(tty)});
      }
      return res.code;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace toriparam::cli
