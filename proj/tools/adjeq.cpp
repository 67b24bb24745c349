// Command-line front end: adjeq <roots|squares|equations|check|orbit|verify> ...

#include <chrono>
#include <fstream>
#include <iostream>
#include <variant>

#include <CLI11.hpp>

#include "adjeq/json_io.hpp"

using namespace adjeq;

namespace {

struct Common {
  std::string system = "E6";
  bool quiet = false;
};

void emit(const Json& j, int indent = 2) { std::cout << j.dump(indent) << "\n"; }

int run_roots(const Common& c, bool json) {
  const RootSystem rs(SystemId::parse(c.system));
  if (json) {
    Json roots = Json::array();
    for (RootIndex r = 0; r < rs.size(); ++r) roots.push_back(root_to_json(rs, r));
    emit(Json{{"system", rs.id().name()}, {"rank", rs.rank()}, {"dimension", rs.dimension()}, {"roots", roots}}, -1);
    return 0;
  }
  std::cout << rs.id().name() << ": " << rs.size() << " roots, dim " << rs.dimension() << "\n";
  for (RootIndex r = 0; r < rs.size(); ++r)
    std::cout << r << "\t" << format_coeffs(rs.coeffs(r)) << "\theight " << rs.height(r) << "\n";
  return 0;
}

int run_squares(const Common& c, bool count_only) {
  const RootSystem rs(SystemId::parse(c.system));
  const SquareCatalog cat(rs);
  Json sizes = Json::object();
  for (const auto& sq : cat.squares()) {
    auto& n = sizes[std::to_string(sq.k())];
    n = n.is_null() ? 1 : n.get<int>() + 1;
  }
  Json out{{"system", rs.id().name()}, {"count", cat.size()}, {"pairs_per_square", sizes}};
  if (!count_only) {
    Json all = Json::array();
    for (const auto& sq : cat.squares()) all.push_back(square_to_json(rs, sq));
    out["squares"] = all;
  }
  emit(out, count_only ? 2 : -1);
  return 0;
}

KindSelection kinds_from(const std::string& kind) {
  if (kind == "all") return {};
  KindSelection k{false, false, false};
  switch (parse_form_kind(kind)) {
    case FormKind::Pi2: k.pi2 = true; break;
    case FormKind::TwoPi3: k.two_pi3 = true; break;
    case FormKind::Pi: k.pi = true; break;
  }
  return k;
}

int run_equations(const Common& c, const std::string& kind, const std::string& out_path) {
  const RootSystem rs(SystemId::parse(c.system));
  const SignTable signs(rs);
  const Json j = equations_to_json(rs, generate_all_equations(rs, signs, kinds_from(kind)));
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump() << "\n";
    if (!c.quiet) std::cerr << "wrote " << j.at("counts").at("total") << " forms to " << out_path << "\n";
  }
  return 0;
}

EquationSet load_or_generate(const RootSystem& rs, const std::string& path) {
  if (!path.empty()) return equations_from_json(rs, read_json_file(path));
  return generate_all_equations(rs, SignTable(rs));
}

Json orbit_json(const RootSystem& rs, const EquationSet& eqs, const OrbitCheck& c) {
  Json out{{"system", rs.id().name()}, {"ok", c.ok}, {"evaluated", c.evaluated}, {"nonzero", c.nonzero}};
  if (c.first_nonzero) {
    out["first_nonzero"] = form_to_json(rs, eqs.forms()[*c.first_nonzero]);
    out["value"] = c.first_value;
  }
  return out;
}

int run_check(const Common& c, const std::string& vector_path, const std::string& eq_path) {
  const RootSystem rs(SystemId::parse(c.system));
  const EquationSet eqs = load_or_generate(rs, eq_path);
  const Json vj = read_json_file(vector_path);
  const RingSpec ring = parse_ring(vj.at("ring").get<std::string>());
  const OrbitCheck res = std::visit(
      [&](const auto& r) { return check_vector(eqs, r, vector_from_json(rs, r, vj)); }, ring);
  emit(orbit_json(rs, eqs, res));
  return res.ok ? 0 : 1;
}

int run_orbit(const Common& c, const std::string& word_path, const std::string& rho_text, const std::string& ring_text) {
  const RootSystem rs(SystemId::parse(c.system));
  const SignTable signs(rs);
  const EquationSet eqs = generate_all_equations(rs, signs);
  const RootIndex rho = root_from_json(rs, parse_json_text(rho_text));
  const Json wj = word_path.empty() ? Json::array() : read_json_file(word_path);
  const RingSpec ring = parse_ring(ring_text);
  const OrbitCheck res = std::visit(
      [&](const auto& r) { return verify_orbit_membership(rs, signs, eqs, word_from_json(rs, r, wj), rho, r); }, ring);
  emit(orbit_json(rs, eqs, res));
  return res.ok ? 0 : 1;
}

int run_verify(const Common& c, SuiteConfig cfg, bool timing) {
  cfg.system = SystemId::parse(c.system);
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport rep = run_suite(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!c.quiet) {
    for (const auto& g : rep.groups) {
      std::cerr << (g.passed == g.attempted ? "ok   " : "FAIL ") << g.name << ": " << g.passed << "/" << g.attempted
                << "\n";
      for (const auto& w : g.failures) std::cerr << "     " << w << "\n";
    }
  }
  emit(report_to_json(rep, timing ? std::optional<double>(secs) : std::nullopt));
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic equations of the highest-weight orbit in adjoint modules of D_l and E_l"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--system", common.system, "D5, D6, ..., E6, E7, E8")->required();
    sub->add_flag("--quiet", common.quiet, "No per-group lines on stderr");
  };

  bool roots_json = false;
  auto* roots = app.add_subcommand("roots", "List the roots in canonical order");
  add_common(roots);
  roots->add_flag("--json", roots_json);

  bool count_only = false;
  auto* squares = app.add_subcommand("squares", "Enumerate the maximal squares");
  add_common(squares);
  squares->add_flag("--count-only", count_only);

  std::string kind = "all", out_path;
  auto* equations = app.add_subcommand("equations", "Generate the equation set");
  add_common(equations);
  equations->add_option("--kind", kind)->check(CLI::IsMember({"all", "pi2", "2pi3", "pi", "pi/2", "2pi/3"}));
  equations->add_option("--out", out_path, "Output file, stdout if omitted");

  std::string vector_path, eq_path;
  auto* check = app.add_subcommand("check", "Evaluate every form on a vector");
  add_common(check);
  check->add_option("--vector", vector_path)->required();
  check->add_option("--equations", eq_path, "Equation file, generated if omitted");

  std::string word_path, rho_text, ring_text = "int";
  auto* orbit = app.add_subcommand("orbit", "Check that word * e^rho satisfies every form");
  add_common(orbit);
  orbit->add_option("--word", word_path, "Word JSON file, empty word if omitted");
  orbit->add_option("--rho", rho_text, "Root as a JSON array")->required();
  orbit->add_option("--ring", ring_text, "int, zmod:m or poly");

  SuiteConfig cfg;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify);
  verify->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"jacobi", "combinatorics", "cases", "commutator", "words", "all"}));
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  verify->add_option("--ring", cfg.rings, "Rings for the words suite (repeatable)");
  verify->add_flag("--timing", timing, "Add wall time to the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) return run_roots(common, roots_json);
    if (*squares) return run_squares(common, count_only);
    if (*equations) return run_equations(common, kind, out_path);
    if (*check) return run_check(common, vector_path, eq_path);
    if (*orbit) return run_orbit(common, word_path, rho_text, ring_text);
    if (*verify) return run_verify(common, cfg, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
