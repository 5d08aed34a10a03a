#include <chrono>

#include "dalie/harness/harness.hpp"

namespace dalie::harness {

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list{
      {1, "antisymmetry and Jacobi for the toroidal bracket over A1 and A2", 60,
       {{"jacobi", {{"types", {"A1", "A2"}}, {"trials", 500}, {"seed", 42}}}}},
      {2, "c1 = h0 + hθ on V_tor(ω0,2) and on the indecomposable example", 60,
       {{"c1-identity", {{"a", 2}, {"depth", 2}, {"window", 3}}}}},
      {3, "Λ series against the truncated exponential, r <= 6", 60, {{"lambda-newton", {{"order", 6}}}}},
      {4, "Garland identities on the top of V_tor(ω1,a), a in {1,2,-3}", 60,
       {{"garland", {{"a", {1, 2, -3}}, {"s", {1, 2, 3}}, {"sign", "both"}}}}},
      {5, "Λ± eigenvalues on tensor highest vectors, k <= 3, up to u^4", 60,
       {{"eig-eigenvalue", {{"k", 3}, {"points", {"2", "-3", "1/2"}}, {"order", 4}}}}},
      {6, "loop irreducibility verdicts against brute-force closures", 60,
       {{"loop-irred", {{"window", 3}, {"points", {1, -1, 2, -2}}}}}},
      {7, "indecomposable sl2 example: relations, closures, no splitting", 60, {{"indecomposable-example", {{"window", 3}}}}},
      {8, "V_tor((ω0,ω0),(1,2)) irreducible in window, (1,1) is not", 60,
       {{"tensor-closure", {{"depth", 2}, {"trials", 20}, {"seed", 2024}}}}},
      {9, "W(π_{1,a}) equals V_tor(ω1,a) in windows up to 2", 60,
       {{"irred-theorem", {{"a", {1, 2}}, {"depth", {1, 2}}, {"t2_degree", {1, 2}}, {"height", {1, 2}}}}}},
      {10, "W(2ω1, 1) by fusion is reducible and satisfies the current relations", 300,
       {{"surjection-reducibility", {{"pi", "[1,(1-u)^2]"}, {"depth", 2}, {"t2_degree", 2}, {"height", 2}}}}},
      {11, "factorization for (1-u)(1-u/2)", 60,
       {{"factorization", {{"pi", "[1,(1-u)*(1-u/2)]"}, {"height", {1, 2}}, {"depth", 2}, {"t2_degree", 2}}}}},
      {12, "current and full presentations of W(π_{1,1}) agree", 60,
       {{"gcur-agreement", {{"pi", "[1,1-u]"}, {"depth", {1, 2}}, {"t2_degree", {1, 2}}, {"height", {1, 2}}}}}},
      {13, "fusion of V(1) at 0,1 and at 0,1,2", 60, {{"fusion-oracle", Json::object()}}},
  };
  return list;
}

bool CriterionResult::passed() const {
  if (seconds > time_limit) return false;
  for (auto& r : reports)
    if (r.verdict != Verdict::pass) return false;
  return !reports.empty();
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult out;
  out.number = c.number;
  out.title = c.title;
  out.time_limit = c.time_limit;
  auto t0 = std::chrono::steady_clock::now();
  for (auto& [name, params] : c.checks) {
    try {
      out.reports.push_back(run_check(name, params));
    } catch (const std::exception& e) {
      CheckReport r;
      r.name = name;
      r.params = params;
      r.verdict = Verdict::fail;
      r.witness = std::string("error: ") + e.what();
      out.reports.push_back(r);
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

namespace {

Json criteria_json(const std::vector<CriterionResult>& results, bool timing) {
  Json a = Json::array();
  for (auto& r : results) {
    Json c;
    c["criterion"] = r.number;
    c["title"] = r.title;
    bool ok = true;
    for (auto& rep : r.reports) ok = ok && rep.verdict == Verdict::pass;
    c["verdict"] = ok ? "pass" : "fail";
    c["checks"] = Json::array();
    for (auto& rep : r.reports) c["checks"].push_back(rep.to_json(timing));
    if (timing) {
      c["seconds"] = r.seconds;
      c["time_limit"] = r.time_limit;
    }
    a.push_back(c);
  }
  return a;
}

}  // namespace

std::vector<CriterionResult> run_suite(const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> first;
  for (auto& c : acceptance_criteria()) {
    first.push_back(run_criterion(c));
    if (progress) progress(first.back());
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CriterionResult> second;
  for (auto& c : acceptance_criteria()) second.push_back(run_criterion(c));
  const std::string a = criteria_json(first, false).dump(), b = criteria_json(second, false).dump();
  CriterionResult det;
  det.number = 14;
  det.title = "two suite runs give byte-identical JSON";
  det.time_limit = 0;
  for (auto& r : first) det.time_limit += r.time_limit;
  CheckReport rep;
  rep.name = "determinism";
  rep.details["bytes"] = a.size();
  if (a != b) {
    rep.verdict = Verdict::fail;
    std::size_t at = 0;
    while (at < a.size() && at < b.size() && a[at] == b[at]) ++at;
    rep.witness = "runs differ at byte " + std::to_string(at) + ": ..." + a.substr(at, 60) + " vs ..." + b.substr(at, 60);
  }
  det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.seconds = det.seconds;
  det.reports.push_back(rep);
  first.push_back(det);
  if (progress) progress(first.back());
  return first;
}

Json suite_json(const std::vector<CriterionResult>& results, bool timing) {
  Json j;
  j["schema"] = 1;
  j["criteria"] = criteria_json(results, timing);
  bool all = true;
  for (auto& r : results) {
    bool ok = true;
    for (auto& rep : r.reports) ok = ok && rep.verdict == Verdict::pass;
    all = all && ok;
  }
  j["passed"] = all;
  return j;
}

}  // namespace dalie::harness
