#include <chrono>
#include <map>
#include <optional>
#include <random>

#include "dalie/harness/harness.hpp"
#include "dalie/rep/identities.hpp"
#include "dalie/rep/loop.hpp"
#include "dalie/toralg/roots.hpp"
#include "dalie/weyl/checks.hpp"

namespace dalie::harness {


using rep::TorWeight;
using toralg::TorElement;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive_window: return "inconclusive-window";
  }
  return "?";
}

Json CheckReport::to_json(bool timing) const {
  Json j;
  j["schema"] = 1;
  j["check"] = name;
  j["params"] = params;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness;
  j["details"] = details;
  if (timing) j["seconds"] = seconds;
  return j;
}

namespace {

// ---- params

template <class T>
T get_param(const Json& p, const char* key, T def) {
  if (!p.contains(key)) return def;
  try {
    return p.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("invalid param '") + key + "': " + p.at(key).dump());
  }
}

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("rational expected, got " + j.dump());
}

std::vector<Rational> rationals(const Json& p, const char* key, std::vector<Rational> def) {
  if (!p.contains(key)) return def;
  const Json& v = p.at(key);
  std::vector<Rational> out;
  if (v.is_array()) {
    for (auto& x : v) out.push_back(rational(x));
  } else {
    out.push_back(rational(v));
  }
  return out;
}

std::vector<long> longs(const Json& p, const char* key, std::vector<long> def) {
  if (!p.contains(key)) return def;
  const Json& v = p.at(key);
  if (v.is_array()) return get_param<std::vector<long>>(p, key, def);
  return {get_param<long>(p, key, 0)};
}

std::vector<int> signs(const Json& p) {
  std::string s = get_param<std::string>(p, "sign", "both");
  if (s == "+") return {1};
  if (s == "-") return {-1};
  if (s == "both") return {1, -1};
  throw Error("sign must be +, - or both");
}

Json rats_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(dalie::to_string(x));
  return a;
}

Json table_json(const weyl::KeyTable& t) { return Json::parse(weyl::key_table_json(t)); }

liecore::AlgebraPtr sl2() { return algebra_from_name("A1"); }

// fundamental affine weight given as "w0", "w1" or a node vector
TorWeight affine_weight(const liecore::ChevalleyAlgebra& g, const Json& j) {
  std::vector<long> nodes(static_cast<std::size_t>(g.rank()) + 1, 0);
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.size() < 2 || s[0] != 'w') throw Error("weight like w0 expected: " + s);
    int i = std::stoi(s.substr(1));
    if (i < 0 || i > g.rank()) throw Error("node out of range: " + s);
    nodes[static_cast<std::size_t>(i)] = 1;
  } else {
    nodes = j.get<std::vector<long>>();
  }
  return TorWeight::affine(g, nodes);
}

weyl::WeylWindow window_of(const Json& p, weyl::WeylWindow def = {}) {
  auto get = [&](const char* key, long d) { return p.contains(key) && p.at(key).is_array() ? d : get_param<long>(p, key, d); };
  def.depth = get("depth", def.depth);
  def.t2_degree = get("t2_degree", def.t2_degree);
  def.height = get("height", def.height);
  def.relation_degree = get("relation_degree", def.relation_degree);
  return def;
}

weyl::PolyTuple tuple_of(const Json& p, const std::string& def) {
  auto g = algebra_from_name(get_param<std::string>(p, "type", "A1"));
  return weyl::PolyTuple(g, parse_polynomial_list(get_param<std::string>(p, "pi", def)));
}

Json window_json(const weyl::WeylWindow& w) {
  return {{"depth", w.depth}, {"t2_degree", w.t2_degree}, {"height", w.height}};
}

// A running verdict: the first failure wins the witness, loss only degrades a pass.
struct Tally {
  CheckReport& rep;
  void fail(const std::string& witness) {
    if (rep.verdict != Verdict::fail) rep.witness = witness;
    rep.verdict = Verdict::fail;
  }
  void lost() {
    if (rep.verdict == Verdict::pass) rep.verdict = Verdict::inconclusive_window;
  }
  void expect(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
};

std::vector<std::size_t> windowed_hw(const rep::WeightModule& m, const TorWeight& lambda, long depth, long height) {
  std::vector<std::size_t> out;
  for (auto& sp : rep::highest_weight_vectors(m)) {
    auto k = weyl::depth_key(*m.algebra(), lambda, sp.weight);
    if (k[0] <= depth && weyl::key_height(k) <= height) out.push_back(sp.vectors.size());
  }
  return out;
}

std::size_t total(const std::vector<std::size_t>& v) {
  std::size_t n = 0;
  for (auto x : v) n += x;
  return n;
}

// ---- Lie algebra checks

void jacobi(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto types = get_param<std::vector<std::string>>(p, "types", {"A1", "A2"});
  long trials = get_param<long>(p, "trials", 500);
  long seed = get_param<long>(p, "seed", 42);
  for (auto& type : types) {
    auto g = algebra_from_name(type);
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    long failures = 0;
    for (long k = 0; k < trials; ++k) {
      auto a = toralg::random_element(g, rng, 3, 2), b = toralg::random_element(g, rng, 3, 2),
           c = toralg::random_element(g, rng, 3, 2);
      auto anti = toralg::bracket_tor(a, b) + toralg::bracket_tor(b, a);
      if (!anti.is_zero()) {
        ++failures;
        t.fail("[a,b] + [b,a] = " + anti.to_string() + " for a = " + a.to_string() + ", b = " + b.to_string());
      }
      auto jac = toralg::bracket_tor(a, toralg::bracket_tor(b, c)) + toralg::bracket_tor(b, toralg::bracket_tor(c, a)) +
                 toralg::bracket_tor(c, toralg::bracket_tor(a, b));
      if (!jac.is_zero()) {
        ++failures;
        t.fail("Jacobi sum = " + jac.to_string() + " for a = " + a.to_string() + ", b = " + b.to_string() +
               ", c = " + c.to_string());
      }
    }
    rep.details[type] = {{"trials", trials}, {"failures", failures}};
  }
}

void form_invariance(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto types = get_param<std::vector<std::string>>(p, "types", {"A1", "A2"});
  long trials = get_param<long>(p, "trials", 300);
  long seed = get_param<long>(p, "seed", 77);
  for (auto& type : types) {
    auto g = algebra_from_name(type);
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    auto coeff = [&] { return Rational(static_cast<long>(rng() % 5) - 2); };
    auto element = [&] {
      TorElement e(g);
      for (int k = 0; k < 3; ++k) {
        long r1 = static_cast<long>(rng() % 5) - 2;
        switch (rng() % 5) {
          case 0: e.add(toralg::c1_letter(), coeff()); break;
          case 1: e.add(toralg::d1_letter(), coeff()); break;
          default: e.add(toralg::fin_letter(rng() % g->dim(), r1), coeff());
        }
      }
      return e;
    };
    long failures = 0;
    for (long k = 0; k < trials; ++k) {
      auto a = element(), b = element(), c = element();
      Rational inv = toralg::form_aff(toralg::bracket_tor(a, b), c) + toralg::form_aff(b, toralg::bracket_tor(a, c));
      Rational sym = toralg::form_aff(a, b) - toralg::form_aff(b, a);
      if (inv != 0 || sym != 0) {
        ++failures;
        t.fail("([a,b],c) + (b,[a,c]) = " + dalie::to_string(inv) + " for a = " + a.to_string() +
               ", b = " + b.to_string() + ", c = " + c.to_string());
      }
    }
    rep.details[type] = {{"trials", trials}, {"failures", failures}};
  }
}

void c1_identity(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = sl2();
  long depth = get_param<long>(p, "depth", 2);
  long window = get_param<long>(p, "window", 3);
  Rational a = p.contains("a") ? rational(p.at("a")) : Rational(2);
  // one layer more than asked, so x0⁻ stays inside on every vector that is checked
  auto deeper = [&](auto&& m, auto inside) {
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (inside(i)) basis.push_back(i);
    std::size_t checked = 0;
    auto failures = rep::c1_identity_failures(m, basis, &checked);
    return std::make_tuple(basis.size(), checked, failures);
  };
  auto v = rep::evaluation_tensor(g, {TorWeight::affine(*g, {1, 0})}, {a}, depth + 1);
  auto ex = rep::example_indecomposable_sl2(window + 1);
  std::vector<std::pair<std::string, std::tuple<std::size_t, std::size_t, std::size_t>>> results{
      {"V_tor(w0," + dalie::to_string(a) + ")", deeper(*v, [&](std::size_t i) { return v->weight(i).d1 >= -depth; })},
      {"example", deeper(*ex, [&](std::size_t i) {
         for (int kind = 0; kind < 4; ++kind)
           for (long r = -window; r <= window; ++r)
             if (ex->index(kind, r) == i) return true;
         return false;
       })}};
  for (auto& [name, res] : results) {
    auto [dim, checked, failures] = res;
    rep.details[name] = {{"dim", dim}, {"checked", checked}, {"failures", failures}};
    t.expect(failures == 0, "c1 != [x0+, x0-] + hθ on " + std::to_string(failures) + " basis vectors of " + name);
    t.expect(checked == dim, std::to_string(dim - checked) + " basis vectors of " + name + " could not be checked");
  }
}

// ---- Λ series

using SymPoly = std::map<std::vector<int>, Rational>;
using Series = std::vector<SymPoly>;

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      std::vector<int> m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      while (!m.empty() && m.back() == 0) m.pop_back();
      out[m] += ca * cb;
    }
  std::erase_if(out, [](auto& kv) { return kv.second == 0; });
  return out;
}

// exp(-X), X = Σ_s P_s u^s / s, expanded as Σ_k (-X)^k / k! up to u^order.
Series exp_oracle(std::size_t order) {
  Series minus_x(order + 1), result(order + 1), power(order + 1);
  for (std::size_t s = 1; s <= order; ++s) {
    std::vector<int> m(s, 0);
    m[s - 1] = 1;
    minus_x[s][m] = Rational(-1, static_cast<long>(s));
  }
  result[0][{}] = 1;
  power[0][{}] = 1;
  Rational fact = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    Series next(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
      for (std::size_t j = 0; i + j <= order; ++j)
        for (auto& [m, c] : sym_mul(power[i], minus_x[j])) next[i + j][m] += c;
    power = next;
    fact *= static_cast<long>(k);
    for (std::size_t i = 0; i <= order; ++i)
      for (auto& [m, c] : power[i]) result[i][m] += c / fact;
  }
  for (auto& s : result) std::erase_if(s, [](auto& kv) { return kv.second == 0; });
  return result;
}

void lambda_newton(CheckReport& rep, const Json& p) {
  Tally t{rep};
  long order = get_param<long>(p, "order", 6);
  auto g = sl2();
  auto oracle = exp_oracle(static_cast<std::size_t>(order));
  long compared = 0;
  for (int i = 0; i <= 1; ++i)
    for (int sign : {1, -1}) {
      auto series = toralg::lambda_series(toralg::affine_h(g, i), sign, order);
      for (long r = 0; r <= order; ++r, ++compared)
        t.expect(series[static_cast<std::size_t>(r)].terms == oracle[static_cast<std::size_t>(r)],
                 "Λ" + std::string(sign > 0 ? "+" : "-") + "(h_" + std::to_string(i) + ", " + std::to_string(r) +
                     ") = " + series[static_cast<std::size_t>(r)].to_string() + " differs from the exponential");
    }
  rep.details["order"] = order;
  rep.details["coefficients_compared"] = compared;
}

void garland(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = algebra_from_name(get_param<std::string>(p, "type", "A1"));
  if (g->rank() != 1) throw Error("garland check runs over A1");
  auto points = rationals(p, "a", {1, 2, -3});
  auto ss = longs(p, "s", {1, 2, 3});
  std::vector<toralg::AffineRealRoot> betas{{{1}, 0}, {{1}, 1}, {{-1}, 1}};
  if (p.contains("betas")) {
    betas.clear();
    for (auto& b : p.at("betas")) betas.push_back({{b.at(0).get<int>()}, b.at(1).get<long>()});
  }
  std::vector<bool> variants{false, true};
  if (p.contains("degree_variant")) variants = {get_param<bool>(p, "degree_variant", false)};
  long max_s = 0;
  for (long s : ss) max_s = std::max(max_s, s);
  long identities = 0, lost = 0;
  for (auto& a : points) {
    auto m = rep::evaluation_tensor(g, {TorWeight::affine(*g, {0, 1})}, {a}, max_s + 1);
    auto top = SparseVector::unit(m->top_index());
    for (auto& beta : betas)
      for (long s : ss)
        for (int sign : signs(p))
          for (bool deg : variants) {
            auto id = toralg::garland_pair(g, beta, s, sign, deg);
            auto sides = rep::garland_sides(*m, id, top);
            ++identities;
            if (!sides.lhs || !sides.rhs) {
              ++lost;
              t.lost();
            } else if (*sides.lhs != *sides.rhs) {
              t.fail(id.to_string() + " fails on the top of V_tor(w1," + dalie::to_string(a) + ")");
            }
          }
  }
  rep.details["identities"] = identities;
  rep.details["lost"] = lost;
}

// ---- evaluation tensors

void eig_eigenvalue(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = sl2();
  long order = get_param<long>(p, "order", 4);
  std::vector<std::vector<TorWeight>> cases;
  std::vector<std::vector<Rational>> case_points;
  if (p.contains("lambdas")) {
    std::vector<TorWeight> ls;
    for (auto& l : p.at("lambdas")) ls.push_back(affine_weight(*g, l));
    auto pts = rationals(p, "a", {});
    if (pts.size() != ls.size()) throw Error("one point per weight");
    cases.push_back(ls);
    case_points.push_back(pts);
  } else {
    long kmax = get_param<long>(p, "k", 3);
    auto pts = rationals(p, "points", {2, -3, Rational(1, 2)});
    if (static_cast<long>(pts.size()) < kmax) throw Error("need k points");
    for (long k = 1; k <= kmax; ++k)
      for (long mask = 0; mask < (1L << k); ++mask) {
        std::vector<TorWeight> ls;
        for (long j = 0; j < k; ++j) ls.push_back(TorWeight::affine(*g, (mask >> j) & 1 ? std::vector<long>{0, 1}
                                                                                       : std::vector<long>{1, 0}));
        cases.push_back(ls);
        case_points.emplace_back(pts.begin(), pts.begin() + k);
      }
  }
  Json series = Json::object();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    auto m = rep::evaluation_tensor(g, cases[c], case_points[c], 0);
    auto top = SparseVector::unit(m->top_index());
    for (int i = 0; i <= 1; ++i)
      for (int sign : {1, -1}) {
        auto oracle = SparsePolynomial::constant(Variable::u, 1);
        for (std::size_t j = 0; j < cases[c].size(); ++j) {
          auto n = cases[c][j].node(*g, i).get_num().get_si();
          Rational a = sign > 0 ? case_points[c][j] : 1 / case_points[c][j];
          auto lin = SparsePolynomial::constant(Variable::u, 1) - SparsePolynomial::monomial(Variable::u, 1, a);
          oracle = oracle * lin.pow(static_cast<unsigned>(n));
        }
        std::vector<Rational> want;
        for (long r = 0; r <= order; ++r) want.push_back(oracle.coefficient(r));
        auto got = rep::lambda_eigenvalues(*m, toralg::affine_h(g, i), sign, order, top);
        std::string tag = "h" + std::to_string(i) + (sign > 0 ? "+" : "-");
        if (cases.size() == 1) series[tag] = rats_json(got);
        t.expect(got == want, "Λ" + std::string(sign > 0 ? "+" : "-") + "(h_" + std::to_string(i) + ") on " +
                                  m->descriptor() + " gives " + rats_json(got).dump() + ", expected " +
                                  rats_json(want).dump());
      }
  }
  rep.details["modules"] = cases.size();
  if (cases.size() == 1) rep.details["series"] = series;
}

void tensor_closure(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = sl2();
  long depth = get_param<long>(p, "depth", 2);
  long trials = get_param<long>(p, "trials", 20);
  long seed = get_param<long>(p, "seed", 2024);
  auto w0 = TorWeight::affine(*g, {1, 0});
  auto distinct = rep::evaluation_tensor(g, {w0, w0}, {1, 2}, depth);
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  long proper = 0;
  for (long k = 0; k < trials; ++k) {
    SparseVector v;
    for (std::size_t i = 0; i < distinct->dim(); ++i)
      if (rng() % 3 == 0) v.add(i, Rational(static_cast<long>(rng() % 7) - 3));
    if (v.is_zero()) v.add(rng() % distinct->dim(), 1);
    auto c = rep::submodule_closure(*distinct, {v});
    if (c.dim() < distinct->dim()) {
      ++proper;
      t.fail("closure of a random vector in V_tor((w0,w0),(1,2)) has dim " + std::to_string(c.dim()) + " < " +
             std::to_string(distinct->dim()));
    }
  }
  // the hw vector nearest the top, other than the top itself
  auto equal = rep::evaluation_tensor(g, {w0, w0}, {1, 1}, depth);
  const auto top = SparseVector::unit(equal->top_index());
  std::optional<SparseVector> hw;
  Rational best = 0;
  for (auto& sp : rep::highest_weight_vectors(*equal))
    for (auto& v : sp.vectors)
      if (v != top && (!hw || sp.weight.d1 > best)) {
        hw = v;
        best = sp.weight.d1;
      }
  std::size_t proper_dim = equal->dim();
  if (!hw) {
    t.fail("V_tor((w0,w0),(1,1)) has no second hw vector in the window");
  } else {
    auto c = rep::submodule_closure(*equal, {*hw});
    proper_dim = c.dim();
    t.expect(c.dim() < equal->dim() && !rep::closure_contains(c, top),
             "closure of the hw vector of V_tor((w0,w0),(1,1)) reaches the top");
  }
  rep.details["dim"] = distinct->dim();
  rep.details["random_vectors"] = trials;
  rep.details["proper_closures"] = proper;
  rep.details["equal_points_hw_depth"] = dalie::to_string(-best);
  rep.details["equal_points_closure"] = proper_dim;
}

void tensor_irred_condition(CheckReport& rep, const Json&) {
  Tally t{rep};
  auto g = sl2();
  struct Case {
    std::vector<long> lambda;
    long mu;
    Rational a;
    bool met;
  };
  // (k+1)λ(c1) < (μ+λ)(h_α) or kλ(c1) < (μ*-λ)(h_α), k = 1
  const std::vector<Case> cases{{{1, 0}, 2, 5, true},  {{1, 0}, 0, 5, false}, {{1, 0}, 1, 5, false},
                                {{0, 1}, 3, 1, true},  {{0, 1}, 1, 1, false}, {{1, 1}, 4, -2, true},
                                {{2, 0}, 5, 3, true},  {{2, 0}, 3, 3, true},  {{2, 0}, 2, 3, false}};
  Json rows = Json::array();
  for (auto& c : cases) {
    auto lambda = TorWeight::affine(*g, c.lambda);
    bool met = rep::tensor_irreducibility_condition(*g, lambda, {liecore::fin_weight({c.mu})}, {c.a}) ==
               rep::TensorCriterion::met;
    rows.push_back({{"lambda", c.lambda}, {"mu", c.mu}, {"a", dalie::to_string(c.a)}, {"met", met}});
    t.expect(met == c.met, "condition for λ = " + lambda.to_string() + ", μ = " + std::to_string(c.mu) +
                               (met ? " met" : " not met") + ", expected the opposite");
  }
  rep.details["cases"] = rows;
}

// ---- loop modules

long brute_period(const rep::LoopModule& m) {
  auto c = rep::submodule_closure(m, {SparseVector::unit(m.top_index(0))});
  for (long r = 1; r <= m.spec().window; ++r)
    if (rep::closure_contains(c, SparseVector::unit(m.top_index(r)))) return r;
  return 0;
}

void loop_irred(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = sl2();
  long window = get_param<long>(p, "window", 3);
  auto pts = rationals(p, "points", {1, -1, 2, -2});
  std::vector<rep::LoopModuleSpec> specs;
  for (long l = 0; l <= 2; ++l)
    for (auto& a : pts) specs.push_back({{liecore::fin_weight({l})}, {a}, 0, window});
  for (long l1 = 0; l1 <= 2; ++l1)
    for (long l2 = 0; l2 <= 2; ++l2)
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
          if (i != j) specs.push_back({{liecore::fin_weight({l1}), liecore::fin_weight({l2})}, {pts[i], pts[j]}, 0, window});
  long reducible = 0;
  for (auto& spec : specs) {
    auto verdict = rep::loop_irreducibility(spec);
    auto m = rep::loop_module(g, spec);
    long period = brute_period(*m);
    long expected = verdict.irreducible ? 1 : (verdict.period == 2 ? 2 : 0);
    if (!verdict.irreducible) ++reducible;
    t.expect(period == expected, m->descriptor() + ": verdict " + verdict.to_string() + " but brute force finds period " +
                                     std::to_string(period));
  }
  // the two period-2 summands for λ = (1,1), a = (1,-1)
  auto m = rep::loop_module(g, {{liecore::fin_weight({1}), liecore::fin_weight({1})}, {1, -1}, 0, window});
  auto verdict = rep::loop_irreducibility(m->spec());
  t.expect(!verdict.irreducible && verdict.period == 2 && verdict.generator_degrees == std::vector<long>{0, 1},
           "a = (1,-1) verdict " + verdict.to_string());
  auto even = rep::submodule_closure(*m, {SparseVector::unit(m->top_index(0))});
  auto odd = rep::submodule_closure(*m, {SparseVector::unit(m->top_index(1))});
  auto [inter, rest] = intersect_and_quotient_dims(even.basis, odd.basis, m->dim());
  (void)rest;
  t.expect(inter == 0, "the period-2 summands intersect in dimension " + std::to_string(inter));
  t.expect(even.dim() + odd.dim() == m->dim(), "the period-2 summands do not exhaust the window");
  for (long r = -window; r <= window; ++r) {
    bool in_even = rep::closure_contains(even, SparseVector::unit(m->top_index(r)));
    bool in_odd = rep::closure_contains(odd, SparseVector::unit(m->top_index(r)));
    t.expect(in_even == (r % 2 == 0) && in_odd == (r % 2 != 0),
             "top ⊗ t^" + std::to_string(r) + " lies in the wrong period-2 summand");
  }
  rep.details["modules"] = specs.size();
  rep.details["reducible"] = reducible;
  rep.details["summand_dims"] = {even.dim(), odd.dim()};
}

void indecomposable_example(CheckReport& rep, const Json& p) {
  Tally t{rep};
  long window = get_param<long>(p, "window", 3);
  auto m = rep::example_indecomposable_sl2(window);
  auto axioms = rep::module_axiom_check(*m);
  t.expect(axioms.failures == 0, "relation fails: " + axioms.witness);
  t.expect(rep::grading_violations(*m) == 0, "grading violated");
  auto w = rep::submodule_closure(*m, {SparseVector::unit(m->index(3, 0))});
  auto v = rep::submodule_closure(*m, {SparseVector::unit(m->index(0, 0))});
  t.expect(w.dim() < m->dim(), "closure of w0 is everything");
  t.expect(v.dim() == m->dim(), "closure of v0 has dim " + std::to_string(v.dim()) + " < " + std::to_string(m->dim()));
  bool local = rep::endomorphism_algebra_is_local(rep::endomorphisms(*m), m->dim());
  t.expect(local, "the window module has a nontrivial idempotent endomorphism");
  auto hw = rep::highest_weight_vectors(*m);
  rep.details["dim"] = m->dim();
  rep.details["relations_checked"] = axioms.checked;
  rep.details["relations_skipped"] = axioms.skipped;
  rep.details["w0_closure"] = w.dim();
  rep.details["v0_closure"] = v.dim();
  rep.details["hw_spaces"] = hw.size();
  rep.details["local_endomorphisms"] = local;
}

// ---- Weyl modules

void irred_theorem(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = sl2();
  auto points = rationals(p, "a", {1, 2});
  auto depths = longs(p, "depth", {1, 2}), degrees = longs(p, "t2_degree", {1, 2}), heights = longs(p, "height", {1, 2});
  Json rows = Json::array();
  for (auto& a : points) {
    auto pi = weyl::fundamental_tuple(g, 1, a);
    for (long d : depths)
      for (long k : degrees)
        for (long h : heights) {
          weyl::WeylWindow win{d, k, h};
          auto w = weyl::weyl_module_truncated(pi, win);
          auto v = rep::evaluation_tensor(g, {pi.lambda()}, {a}, d);
          auto wt = weyl::without_zeros(w->key_table());
          auto vt = weyl::without_zeros(weyl::window_table(*v, pi.lambda(), d, h));
          auto hw = total(windowed_hw(*w, pi.lambda(), d, h));
          t.expect(wt == vt, "W(π_{1," + dalie::to_string(a) + "}) table " + table_json(wt).dump() +
                                 " differs from V_tor " + table_json(vt).dump() + " at " + window_json(win).dump());
          t.expect(hw == 1, std::to_string(hw) + " hw vectors in W(π_{1," + dalie::to_string(a) + "}) at " +
                                window_json(win).dump());
          rows.push_back({{"a", dalie::to_string(a)}, {"window", window_json(win)}, {"dim", w->dim()}, {"hw", hw}});
        }
  }
  rep.details["windows"] = rows;
}

void weyl_topdims(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto pi = tuple_of(p, "[1,(1-u)^2]");
  auto win = window_of(p);
  auto w = weyl::weyl_module_truncated(pi, win);
  auto dec = weyl::aff_decomposition(*w);
  auto table = w->key_table();
  std::vector<long> zero(static_cast<std::size_t>(pi.nodes()), 0);
  t.expect(table[zero] == 1, "top weight space has dim " + std::to_string(table[zero]));
  t.expect(dec.top_multiplicity() == 1, "top multiplicity " + std::to_string(dec.top_multiplicity()));
  t.expect(dec.q_reading, "a constituent lies outside λ_π - Q⁺");
  if (dec.loss) t.lost();
  rep.details["pi"] = pi.to_string();
  rep.details["window"] = window_json(win);
  rep.details["relation_degree"] = w->relation_degree();
  rep.details["max_basis_exponent"] = w->max_basis_exponent();
  rep.details["table"] = table_json(table);
  rep.details["decomposition"] = Json::parse(dec.to_json());
}

void gcur(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto pi = tuple_of(p, "[1,1-u]");
  auto depths = longs(p, "depth", {1, 2}), degrees = longs(p, "t2_degree", {1, 2}), heights = longs(p, "height", {1, 2});
  Json rows = Json::array();
  for (long d : depths)
    for (long k : degrees)
      for (long h : heights) {
        weyl::WeylWindow win{d, k, h};
        auto r = weyl::gcur_agreement(pi, win);
        t.expect(r.equal, "current " + table_json(r.current).dump() + " vs full " + table_json(r.full).dump() + " at " +
                              window_json(win).dump());
        rows.push_back({{"window", window_json(win)}, {"table", table_json(r.current)}});
      }
  rep.details["pi"] = pi.to_string();
  rep.details["windows"] = rows;
}

void factorization(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto pi = tuple_of(p, "[1,(1-u)*(1-u/2)]");
  auto heights = longs(p, "height", {1, 2});
  Json rows = Json::array();
  for (long h : heights) {
    auto win = window_of(p);
    win.height = h;
    auto r = weyl::factorization_check(pi, win);
    t.expect(r.equal, r.discrepancy + " at " + window_json(win).dump());
    rows.push_back(Json::parse(r.to_json()));
    rows.back()["window"] = window_json(win);
  }
  rep.details["pi"] = pi.to_string();
  rep.details["windows"] = rows;
}

void surjection_reducibility(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto pi = tuple_of(p, "[1,(1-u)^2]");
  auto win = window_of(p);
  auto s = weyl::surjection_check(pi, win);
  const auto& g = pi.algebra();
  const auto lambda = pi.lambda();
  // the fused generator before the shift
  long k = 0;
  for (int i = 0; i < pi.nodes(); ++i) k += pi.degree(i);
  std::vector<Rational> points;
  for (long j = 1; j <= k; ++j) points.emplace_back(j);
  const long max_degree = k * (win.height + 1);
  auto fused = weyl::fusion_W(g, lambda, points, max_degree, win.depth);
  auto rel = weyl::fusion_generator_relations(*fused, fused->top_index(), lambda, win.depth, std::min<long>(max_degree, 3));
  t.expect(rel.ok(), "fusion relation: " + rel.witness);
  if (rel.lost) t.lost();
  t.expect(s.relations.ok(), "Weyl relation on the shifted generator: " + s.relations.witness);
  auto gr = fused->filtered().graded_dims();
  std::size_t sum = 0;
  for (auto n : gr) sum += n;
  const std::size_t tensor_dim = fused->filtered().tensor().dim();
  t.expect(s.fusion_exhausts && sum == tensor_dim,
           "gr dims sum to " + std::to_string(sum) + ", tensor has dim " + std::to_string(tensor_dim));
  auto aff = rep::irreducible_aff_truncated(g, lambda, win.depth);
  std::size_t aff_hw = total(windowed_hw(*aff, lambda, win.depth, win.height));
  t.expect(s.fusion_hw >= 2, "only " + std::to_string(s.fusion_hw) + " hw vectors in W(λ, a)");
  t.expect(aff_hw == 1, "V_aff(λ) has " + std::to_string(aff_hw) + " hw vectors");
  t.expect(s.dominated, "W_tor(π) smaller than W(λ, a) somewhere: " + table_json(s.weyl).dump() + " vs " +
                            table_json(s.fusion).dump());
  t.expect(s.reducible, "W(λ, a) not larger than V_tor(λ, a) in the window");
  rep.details["pi"] = pi.to_string();
  rep.details["window"] = window_json(win);
  rep.details["surjection"] = Json::parse(s.to_json());
  rep.details["fusion_relations"] = {{"checked", rel.checked}, {"failures", rel.failures}, {"lost", rel.lost}};
  rep.details["gr_dims"] = gr;
  rep.details["tensor_dim"] = tensor_dim;
  rep.details["V_aff_hw"] = aff_hw;
}

void fusion_oracle(CheckReport& rep, const Json& p) {
  Tally t{rep};
  auto g = sl2();
  auto v1 = rep::irreducible_fin(g, liecore::fin_weight({1}));
  auto two = weyl::fusion_product({v1, v1}, rationals(p, "points2", {0, 1}), get_param<long>(p, "max_degree", 3));
  auto dims2 = two->filtered().graded_dims();
  while (dims2.size() > 1 && dims2.back() == 0) dims2.pop_back();
  t.expect(dims2 == std::vector<std::size_t>{3, 1}, "gr dims " + Json(dims2).dump() + ", expected [3,1]");
  t.expect(two->dim() == 4, "total " + std::to_string(two->dim()));
  auto three = weyl::fusion_product({v1, v1, v1}, rationals(p, "points3", {0, 1, 2}), get_param<long>(p, "max_degree", 4));
  t.expect(three->dim() == 8, "triple total " + std::to_string(three->dim()));
  auto fin_char = [](const rep::WeightModule& m) {
    std::map<std::string, std::size_t> c;
    for (auto& [mu, n] : rep::character(m)) c[liecore::FinWeight{mu.fin}.to_string()] += n;
    return c;
  };
  auto fc = fin_char(*three), tc = fin_char(three->filtered().tensor());
  t.expect(fc == tc, "triple fusion character differs from the tensor character");
  auto dims3 = three->filtered().graded_dims();
  while (dims3.size() > 1 && dims3.back() == 0) dims3.pop_back();
  rep.details["gr_dims_2"] = dims2;
  rep.details["gr_dims_3"] = dims3;
  rep.details["character_3"] = fc;
}

using Runner = void (*)(CheckReport&, const Json&);

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> r{
      {"jacobi", jacobi},
      {"form-invariance", form_invariance},
      {"c1-identity", c1_identity},
      {"lambda-newton", lambda_newton},
      {"garland", garland},
      {"eig-eigenvalue", eig_eigenvalue},
      {"loop-irred", loop_irred},
      {"tensor-closure", tensor_closure},
      {"tensor-irred-condition", tensor_irred_condition},
      {"indecomposable-example", indecomposable_example},
      {"weyl-topdims", weyl_topdims},
      {"gcur-agreement", gcur},
      {"factorization", factorization},
      {"irred-theorem", irred_theorem},
      {"surjection-reducibility", surjection_reducibility},
      {"fusion-oracle", fusion_oracle},
  };
  return r;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

CheckReport run_check(const std::string& name, const Json& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown check: " + name);
  if (!params.is_object()) throw Error("check params must be a JSON object");
  CheckReport rep;
  rep.name = name;
  rep.params = params;
  auto t0 = std::chrono::steady_clock::now();
  it->second(rep, params);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rep.verdict == Verdict::fail && rep.witness.empty()) rep.witness = "(no witness recorded)";
  return rep;
}

}  // namespace dalie::harness
