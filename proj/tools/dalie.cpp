#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dalie/harness/harness.hpp"
#include "dalie/rep/loop.hpp"
#include "dalie/weyl/checks.hpp"

using namespace dalie;
using harness::Json;

namespace {

Json parse_json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error("cannot read " + text.substr(1));
    return Json::parse(in);
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad JSON: ") + e.what());
  }
}

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("rational expected, got " + j.dump());
}

std::vector<Rational> rationals(const Json& j) {
  std::vector<Rational> out;
  for (auto& x : j) out.push_back(rational(x));
  return out;
}

liecore::FinWeight fin_weight(const Json& j) {
  liecore::FinWeight w;
  for (auto& x : j) w.coords.push_back(rational(x));
  return w;
}

rep::TorWeight affine_weight(const liecore::ChevalleyAlgebra& g, const Json& j) {
  return rep::TorWeight::affine(g, j.get<std::vector<long>>());
}

rep::ModulePtr build_module(const Json& spec) {
  auto kind = spec.at("kind").get<std::string>();
  auto g = harness::algebra_from_name(spec.value("type", "A1"));
  long depth = spec.value("depth", 2L);
  if (kind == "V_fin") return rep::irreducible_fin(g, fin_weight(spec.at("lambda")));
  if (kind == "V_aff") return rep::irreducible_aff_truncated(g, affine_weight(*g, spec.at("lambda")), depth);
  if (kind == "V_aff_dual") return rep::dual_aff_truncated(g, affine_weight(*g, spec.at("lambda")), depth);
  if (kind == "V_tor") {
    std::vector<rep::TorWeight> ls;
    for (auto& l : spec.at("lambdas")) ls.push_back(affine_weight(*g, l));
    return rep::evaluation_tensor(g, ls, rationals(spec.at("points")), depth);
  }
  if (kind == "loop") {
    rep::LoopModuleSpec s;
    for (auto& l : spec.at("lambdas")) s.lambdas.push_back(fin_weight(l));
    s.points = rationals(spec.at("points"));
    if (spec.contains("b")) s.b = rational(spec.at("b"));
    s.window = spec.value("window", 3L);
    return rep::loop_module(g, s);
  }
  if (kind == "example") return rep::example_indecomposable_sl2(spec.value("window", 3L));
  if (kind == "weyl") {
    weyl::WeylWindow w{depth, spec.value("t2_degree", 2L), spec.value("height", 2L)};
    w.full = spec.value("full", false);
    return weyl::weyl_module_truncated(weyl::PolyTuple(g, harness::parse_polynomial_list(spec.at("pi"))), w);
  }
  throw Error("unknown module kind: " + kind);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with affine and toroidal Lie algebra modules"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "construct a module from a JSON spec and print its character");
  std::string build_spec;
  build->add_option("spec", build_spec, "JSON module spec, or @file")->required();

  auto* fusion = app.add_subcommand("fusion", "graded dimensions of a fusion product");
  std::string f_type = "A1", f_factors, f_points;
  long f_degree = 4, f_depth = 0;
  bool f_affine = false;
  fusion->add_option("--type", f_type, "algebra, e.g. A1");
  fusion->add_option("--factors", f_factors, "JSON list of highest weights")->required();
  fusion->add_option("--points", f_points, "JSON list of distinct points")->required();
  fusion->add_option("--max-degree", f_degree, "filtration degree bound");
  fusion->add_flag("--affine", f_affine, "factors are affine weights (node values), truncated at --depth");
  fusion->add_option("--depth", f_depth, "d1-depth of affine factors");

  auto* weylc = app.add_subcommand("weyl", "truncated Weyl module for a polynomial tuple");
  std::string w_type = "A1", w_pi;
  weyl::WeylWindow w_window;
  bool w_full = false;
  weylc->add_option("--pi", w_pi, "tuple like \"[1,(1-u)^2]\"")->required();
  weylc->add_option("--type", w_type, "algebra, e.g. A1");
  weylc->add_option("--depth", w_window.depth, "d1-depth D");
  weylc->add_option("--height", w_window.height, "root height H");
  weylc->add_option("--t2-degree", w_window.t2_degree, "t2 exponent bound K of spanning monomials");
  weylc->add_option("--relation-degree", w_window.relation_degree, "t2 cap T of the Cartan step");
  weylc->add_flag("--full", w_full, "use the full presentation instead of the current algebra");

  auto* check = app.add_subcommand("check", "run one named check, or all of them");
  std::string c_name, c_params = "{}";
  long c_trials = -1, c_seed = -1;
  bool c_all = false, c_timing = false;
  check->add_option("--name", c_name, "check name");
  check->add_flag("--all", c_all, "run every check with default params");
  check->add_option("--params", c_params, "JSON params, or @file");
  check->add_option("--trials", c_trials, "shortcut for params.trials");
  check->add_option("--seed", c_seed, "shortcut for params.seed");
  check->add_flag("--timing", c_timing, "include timings (output is then not reproducible)");
  check->add_flag_callback("--list", [] {
    for (auto& n : harness::check_names()) std::cout << n << "\n";
    std::exit(0);
  }, "list check names");

  auto* suite = app.add_subcommand("suite", "full acceptance battery");
  bool s_json = false, s_timing = false;
  std::string s_out;
  suite->add_flag("--json", s_json, "print the JSON summary instead of one line per criterion");
  suite->add_flag("--timing", s_timing, "include timings");
  suite->add_option("--out", s_out, "also write suite.json into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      auto m = build_module(parse_json_arg(build_spec));
      Json j;
      j["schema"] = 1;
      j["module"] = Json::parse(m->descriptor());
      j["dim"] = m->dim();
      j["character"] = Json::parse(rep::character_json(*m));
      emit(j);
      return 0;
    }
    if (*fusion) {
      auto g = harness::algebra_from_name(f_type);
      std::vector<rep::HwPtr> factors;
      for (auto& w : parse_json_arg(f_factors))
        factors.push_back(f_affine ? rep::HwPtr(rep::irreducible_aff_truncated(g, affine_weight(*g, w), f_depth))
                                   : rep::HwPtr(rep::irreducible_fin(g, fin_weight(w))));
      auto f = weyl::fusion_product(factors, rationals(parse_json_arg(f_points)), f_degree, f_depth);
      Json j;
      j["schema"] = 1;
      j["dim"] = f->dim();
      j["tensor_dim"] = f->filtered().tensor().dim();
      j["exhausts"] = f->filtered().exhausts();
      j["gr_dims"] = f->filtered().graded_dims();
      j["graded"] = Json::array();
      for (auto& [mu, dims] : f->filtered().graded_table())
        j["graded"].push_back({{"weight", mu.to_string()}, {"dims", dims}});
      emit(j);
      return 0;
    }
    if (*weylc) {
      auto g = harness::algebra_from_name(w_type);
      w_window.full = w_full;
      weyl::PolyTuple pi(g, harness::parse_polynomial_list(w_pi));
      auto w = weyl::weyl_module_truncated(pi, w_window);
      Json j;
      j["schema"] = 1;
      j["pi"] = pi.to_string();
      j["window"] = {{"depth", w_window.depth},
                     {"t2_degree", w_window.t2_degree},
                     {"height", w_window.height},
                     {"relation_degree", w->relation_degree()},
                     {"full", w_full}};
      j["dim"] = w->dim();
      j["table"] = Json::parse(weyl::key_table_json(w->key_table()));
      j["decomposition"] = Json::parse(weyl::aff_decomposition(*w).to_json());
      emit(j);
      return 0;
    }
    if (*check) {
      Json params = parse_json_arg(c_params);
      if (c_trials >= 0) params["trials"] = c_trials;
      if (c_seed >= 0) params["seed"] = c_seed;
      if (c_all == !c_name.empty()) throw Error("give exactly one of --name or --all");
      std::vector<harness::CheckReport> reports;
      if (c_all) {
        for (auto& n : harness::check_names()) reports.push_back(harness::run_check(n));
      } else {
        reports.push_back(harness::run_check(c_name, params));
      }
      bool ok = true;
      for (auto& r : reports) ok = ok && r.verdict == harness::Verdict::pass;
      if (reports.size() == 1) {
        emit(reports[0].to_json(c_timing));
      } else {
        Json j;
        j["schema"] = 1;
        j["reports"] = Json::array();
        for (auto& r : reports) j["reports"].push_back(r.to_json(c_timing));
        emit(j);
      }
      return ok ? 0 : 1;
    }
    if (*suite) {
      auto results = harness::run_suite([&](const harness::CriterionResult& r) {
        if (!s_json) std::cout << (r.passed() ? "PASS " : "FAIL ") << r.number << " " << r.title << std::endl;
      });
      Json j = harness::suite_json(results, s_timing);
      if (s_json) emit(j);
      if (!s_out.empty()) {
        std::filesystem::create_directories(s_out);
        std::ofstream(std::filesystem::path(s_out) / "suite.json") << j.dump(2) << "\n";
      }
      return j["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
