#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dalie/exactla/polynomial.hpp"
#include "dalie/liecore/algebra.hpp"

namespace dalie::harness {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive_window };
std::string to_string(Verdict v);

struct CheckReport {
  std::string name;
  Json params = Json::object();
  Verdict verdict = Verdict::pass;
  std::string witness;  // set whenever verdict is fail
  Json details = Json::object();
  double seconds = 0;

  /// Timing is left out unless asked for, so reports compare byte for byte.
  Json to_json(bool timing = false) const;
};

std::vector<std::string> check_names();
/// Throws Error on an unknown name or bad params.
CheckReport run_check(const std::string& name, const Json& params = Json::object());

struct Criterion {
  int number;
  std::string title;
  double time_limit;  // seconds
  std::vector<std::pair<std::string, Json>> checks;
};
const std::vector<Criterion>& acceptance_criteria();

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckReport> reports;
  double seconds = 0;
  double time_limit = 0;
  bool passed() const;
};
CriterionResult run_criterion(const Criterion& c);

/// Criteria 1-13, then a second pass for the determinism criterion.
/// `progress` is called after each criterion.
std::vector<CriterionResult> run_suite(const std::function<void(const CriterionResult&)>& progress = {});
Json suite_json(const std::vector<CriterionResult>& results, bool timing = false);

/// "(1-u)^2*(1-2u)", "1-3u+2u^2", "(1-u/2)", "1"
SparsePolynomial parse_polynomial(const std::string& text);
/// "[1,(1-u)^2]"
std::vector<SparsePolynomial> parse_polynomial_list(const std::string& text);
/// "A1", "D4", ...
liecore::AlgebraPtr algebra_from_name(const std::string& name);

}  // namespace dalie::harness
