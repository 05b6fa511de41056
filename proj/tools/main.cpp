// Batch front end for the motivic library.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/json_io.hpp"
#include "motivic/verify.hpp"

using namespace motivic;
using io::json;

namespace {

struct RunConfig {
  int precision = 10;
  std::string format = "json";
  std::vector<unsigned> field_checks;
  std::uint64_t seed = VerifyOptions{}.seed;
};

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const json& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  json checks = json::array();
  for (const auto& [k, v] : out.items()) {
    if (k == "checks") {
      checks = v;
      continue;
    }
    if (k == "series" && v.is_object()) continue;  // the text form is printed instead
    rows.emplace_back(k, cell(v));
  }
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << "\n";
  if (checks.empty()) return;
  if (!rows.empty()) std::cout << "\n";
  std::size_t cw = 5;
  for (const auto& c : checks) cw = std::max(cw, c.at("name").get<std::string>().size());
  std::cout << std::left << std::setw(static_cast<int>(cw)) << "check" << "  result  detail\n";
  for (const auto& c : checks)
    std::cout << std::left << std::setw(static_cast<int>(cw)) << c.at("name").get<std::string>() << "  "
              << (c.at("pass").get<bool>() ? "pass  " : "FAIL  ") << "  " << c.at("detail").get<std::string>() << "\n";
}

void emit(const json& out, const RunConfig& cfg) {
  if (cfg.format == "table")
    print_table(out);
  else
    std::cout << out.dump(2) << "\n";
}

bool all_pass(const json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const json& c) { return c.at("pass").get<bool>(); });
}

json with_summary(json out) {
  if (out.contains("checks")) {
    out["passed"] = std::count_if(out["checks"].begin(), out["checks"].end(), [](const json& c) { return c.at("pass").get<bool>(); });
    out["total"] = out["checks"].size();
    out["all_pass"] = all_pass(out["checks"]);
  }
  return out;
}

json cmd_invariants(const std::string& germ_path, const std::string& x, const std::string& y) {
  CurveGerm g;
  if (!germ_path.empty())
    g = io::germ_from_json(io::read_file(germ_path));
  else if (!x.empty() && !y.empty())
    g.branches.push_back(Branch::parse(x, y));
  else
    throw CLI::ValidationError("--germ", "either --germ or both --x and --y are required");
  return io::to_json(invariants(g));
}

json cmd_measure(const std::string& path, const RunConfig& cfg) {
  const JetStratum s = io::stratum_from_json(io::read_file(path));
  const GClass m = measure(s);
  json out{{"class", m.to_string()}, {"class_json", io::to_json(m)}, {"stratum", s.describe()}};
  std::vector<Check> checks;
  for (unsigned q : cfg.field_checks) {
    const auto count = ff_point_count(s, q, 4);
    const Rational expect = stratum_class(s).specialize(q);
    checks.push_back({"point count q=" + std::to_string(q), expect == Rational(Integer(std::to_string(count))),
                      std::to_string(count) + " vs " + expect.get_str()});
  }
  out["checks"] = io::to_json(checks);
  return out;
}

json series_out(const ClassSeries& s) { return {{"text", s.to_string()}, {"series", io::to_json(s)}}; }

json cmd_power(const std::string& series_path, const std::string& series_expr, const std::string& exponent, int order) {
  ClassSeries A = ClassSeries::one({"t"}, order);
  if (!series_path.empty())
    A = io::class_series_from_json(io::read_file(series_path), order);
  else if (!series_expr.empty())
    A = parse_class_series(series_expr, "t", order);
  else
    throw CLI::ValidationError("--series", "either --series or --series-expr is required");
  const GClass m = parse_class(exponent);
  const ClassSeries r = power(A, m, order);
  json out = series_out(r);
  json coeffs = json::array();
  for (int i = 0; i <= r.trunc(); ++i) coeffs.push_back(r.coeff(i).to_string());
  out["coefficients"] = coeffs;
  out["exponent"] = m.to_string();
  return out;
}

json cmd_lift(const std::string& path, const std::string& f_text, const std::string& x, const std::string& y, int target,
              bool relaxed, bool rotate) {
  PlanePoly f;
  Branch g;
  if (!path.empty()) {
    const json in = io::read_file(path);
    f = io::poly_from_json(in.at("f"));
    g = io::branch_from_json(in.at("branch"));
    if (in.contains("target")) target = in.at("target").get<int>();
    if (in.contains("relaxed")) relaxed = in.at("relaxed").get<bool>();
  } else if (!f_text.empty() && !x.empty() && !y.empty()) {
    f = PlanePoly::parse(f_text);
    g = Branch::parse(x, y);
  } else {
    throw CLI::ValidationError("--input", "either --input or all of --f, --x, --y are required");
  }
  json out;
  if (rotate) {
    const Rotation r = rotate_coords(f, g);
    f = r.f;
    g = r.g;
    out["rotation"] = {{"c", r.c}, {"f", r.f.to_string()}};
  }
  const LiftReport rep = lift_arc(f, g, target, relaxed ? LiftMode::Relaxed : LiftMode::Strict);
  out.update(io::to_json(rep));
  return out;
}

int param(const std::vector<int>& p, std::size_t i, const char* name) {
  if (i >= p.size()) throw CLI::ValidationError("--params", std::string("missing parameter ") + name);
  return p[i];
}

json cmd_example(const std::string& name, const std::vector<int>& p) {
  json out;
  if (name == "ex1") {
    const auto r = example1(param(p, 0, "k"));
    out = {{"class", r.muN.to_string()}, {"muM", r.muM.to_string()}, {"checks", io::to_json(r.checks)}};
  } else if (name == "ex2") {
    const int k = param(p, 0, "k");
    const bool even = p.size() < 2 || p[1] != 0;
    const auto r = example2(k, even);
    out = {{"class", r.muN.to_string()}, {"muM", r.muM.to_string()}, {"checks", io::to_json(r.checks)}};
  } else if (name == "a1") {
    const auto r = example_a1();
    out = {{"class", r.muN.to_string()}, {"muM", r.muM.to_string()}, {"checks", io::to_json(r.checks)}};
  } else if (name == "ex2sum") {
    const auto r = example2_sum();
    out = {{"class", r.series_sum.to_string()}, {"direct", r.direct.to_string()}, {"checks", io::to_json(r.checks)}};
  } else if (name == "ex3") {
    const auto r = example3(param(p, 0, "p"), param(p, 1, "q"));
    out = {{"class", r.muN.to_string()},
           {"muM", r.muM.to_string()},
           {"muN_single_factor", r.muN_single_factor.to_string()},
           {"c", r.c},
           {"modality", r.modality.get_str()},
           {"kouchnirenko", r.kouchnirenko},
           {"checks", io::to_json(r.checks)}};
  } else if (name == "ex4") {
    const auto r = example4(param(p, 0, "i"), param(p, 1, "j"));
    out = {{"class", r.measure.to_string()},
           {"series_coefficient", r.series_coefficient.to_string()},
           {"checks", io::to_json(std::vector<Check>{{"measure equals series coefficient", r.equal, ""}})}};
  } else {
    throw CLI::ValidationError("--name", "unknown example '" + name + "'");
  }
  out["class_json"] = io::to_json(parse_class(out["class"].get<std::string>()));
  return out;
}

json cmd_pgen(const std::string& path, const std::string& builtin, int order, bool as_printed, bool euler) {
  ResolutionData r;
  if (!path.empty())
    r = io::resolution_from_json(io::read_file(path));
  else if (builtin == "blowup")
    r = single_blowup_resolution();
  else if (builtin == "cusp")
    r = cusp_resolution();
  else
    throw CLI::ValidationError("--resolution", "either --resolution or --builtin blowup|cusp is required");
  const PgenSign sign = as_printed ? PgenSign::AsPrinted : PgenSign::Corrected;
  json out = series_out(pgen(r, order, sign));
  out["sign"] = as_printed ? "as_printed" : "corrected";
  if (euler) out["euler"] = pgen_euler(r, order, sign).to_string();
  json m = json::array();
  for (const auto& row : component_exponents(r)) m.push_back(row);
  out["exponents"] = m;
  return out;
}

json cmd_verify(const std::string& suite, const RunConfig& cfg, int instances) {
  VerifyOptions opt;
  opt.precision = cfg.precision;
  opt.seed = cfg.seed;
  if (!cfg.field_checks.empty()) opt.field_checks = cfg.field_checks;
  opt.instances = instances;
  return {{"suite", suite}, {"checks", io::to_json(run_suite(suite, opt))}};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // A module word in front of the command is accepted and ignored.
  static const std::vector<std::string> kModules = {"strata", "genfun", "curves", "powstruct", "lifting", "series"};
  if (!args.empty() && std::find(kModules.begin(), kModules.end(), args[0]) != kModules.end()) args.erase(args.begin());
  std::reverse(args.begin(), args.end());

  CLI::App app{"Exact motivic measures, power structures and plane curve invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.name("motivic");
  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "Default truncation order")->check(CLI::Range(4, 100000));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--field-check", cfg.field_checks, "Prime for finite-field cross-checks (repeatable)")
      ->check(CLI::Range(2u, 1000000u));
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");

  std::string germ, bx, by;
  auto* inv = app.add_subcommand("invariants", "Invariants of a curve germ");
  inv->add_option("--germ", germ, "CurveGerm JSON file")->check(CLI::ExistingFile);
  inv->add_option("--x", bx, "x(t) of a single exact branch");
  inv->add_option("--y", by, "y(t) of a single exact branch");

  std::string stratum;
  auto* meas = app.add_subcommand("measure", "Motivic measure of a jet stratum");
  meas->add_option("--spec", stratum, "JetStratum JSON file")->required()->check(CLI::ExistingFile);

  std::string series_path, series_expr, exponent;
  int order = -1;
  auto* pw = app.add_subcommand("power", "Power structure A(t)^m");
  pw->add_option("--series", series_path, "TruncSeries JSON file")->check(CLI::ExistingFile);
  pw->add_option("--series-expr", series_expr, "Series expression in t and L");
  pw->add_option("--exponent", exponent, "Exponent class, a Laurent polynomial in L")->required();
  pw->add_option("--order", order, "Truncation order");

  std::string lift_in, lift_f;
  int target = 30;
  bool relaxed = false, rotate = false;
  auto* lf = app.add_subcommand("lift", "Newton lifting of an approximate solution");
  lf->add_option("--input", lift_in, "JSON {f, branch, target}")->check(CLI::ExistingFile);
  lf->add_option("--f", lift_f, "Equation, e.g. \"y^2 - x^3\"");
  lf->add_option("--x", bx, "x(t)");
  lf->add_option("--y", by, "y(t)");
  lf->add_option("--target", target, "Vanish modulo t^(target+1)")->check(CLI::PositiveNumber);
  lf->add_flag("--relaxed", relaxed, "Only require ord f > 2Q");
  lf->add_flag("--rotate", rotate, "Shear coordinates first so that f_y has the minimal order");

  std::string ex_name;
  std::vector<int> ex_params;
  auto* ex = app.add_subcommand("example", "Worked examples with their checks");
  ex->add_option("--name", ex_name, "ex1|ex2|a1|ex2sum|ex3|ex4")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "a1", "ex2sum", "ex3", "ex4"}));
  ex->add_option("--params", ex_params, "Integer parameters: ex1 k; ex2 k [even=1]; ex3 p q; ex4 i j");

  std::string res_path, builtin;
  bool as_printed = false, euler = false;
  auto* pg = app.add_subcommand("pgen", "Generating series from resolution data");
  pg->add_option("--resolution", res_path, "ResolutionData JSON file")->check(CLI::ExistingFile);
  pg->add_option("--builtin", builtin, "Built-in resolution")->check(CLI::IsMember({"blowup", "cusp"}));
  pg->add_option("--order", order, "Truncation order");
  pg->add_flag("--as-printed", as_printed, "Use the negative exponents on F and G");
  pg->add_flag("--euler", euler, "Also print the Euler characteristic series");

  std::string suite = "all";
  int instances = 0;
  auto* vf = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vf->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  vf->add_option("--instances", instances, "Size of randomized suites")->check(CLI::NonNegativeNumber);

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (unsigned q : cfg.field_checks) {
      bool prime = q >= 2;
      for (unsigned d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
      if (!prime) throw CLI::ValidationError("--field-check", std::to_string(q) + " is not prime");
    }
    const int N = order > 0 ? order : cfg.precision;
    json out;
    if (*inv)
      out = cmd_invariants(germ, bx, by);
    else if (*meas)
      out = cmd_measure(stratum, cfg);
    else if (*pw)
      out = cmd_power(series_path, series_expr, exponent, N);
    else if (*lf)
      out = cmd_lift(lift_in, lift_f, bx, by, target, relaxed, rotate);
    else if (*ex)
      out = cmd_example(ex_name, ex_params);
    else if (*pg)
      out = cmd_pgen(res_path, builtin, N, as_printed, euler);
    else if (*vf)
      out = cmd_verify(suite, cfg, instances);
    out = with_summary(out);
    emit(out, cfg);
    if (out.contains("all_pass") && !out["all_pass"].get<bool>()) return 1;
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << io::error_json(e).dump(2) << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cout << io::error_json(Error(ErrorKind::InvalidInput, e.what())).dump(2) << "\n";
    return 1;
  }
}
