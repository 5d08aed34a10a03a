#include "dalie/rep/loop.hpp"

#include <set>

#include "json.hpp"

namespace dalie::rep {

namespace {

std::vector<HwPtr> fin_factors(const liecore::AlgebraPtr& g, const std::vector<liecore::FinWeight>& lambdas) {
  std::vector<HwPtr> out;
  for (auto& l : lambdas) out.push_back(irreducible_fin(g, l));
  return out;
}

}  // namespace

void LoopModuleSpec::validate() const {
  if (lambdas.empty()) throw Error("loop module needs k >= 1");
  if (points.size() != lambdas.size()) throw Error("one evaluation point per weight");
  std::set<Rational> seen;
  for (auto& a : points) {
    if (is_zero(a)) throw Error("evaluation points must be nonzero");
    if (!seen.insert(a).second) throw Error("evaluation points must be distinct");
  }
  for (auto& l : lambdas)
    if (!l.dominant()) throw Error("loop module weights must be dominant");
  if (window < 0) throw Error("negative Laurent window");
}

LoopModule::LoopModule(const liecore::AlgebraPtr& g, LoopModuleSpec spec)
    : WeightModule(g), spec_((spec.validate(), std::move(spec))), tensor_(fin_factors(g, spec_.lambdas), std::nullopt) {
  weights_.resize(dim());
  for (std::size_t t = 0; t < tensor_.size(); ++t)
    for (long s = -spec_.window; s <= spec_.window; ++s) {
      TorWeight w = tensor_.weight(t);
      w.c1 = 0;
      w.d1 = s + spec_.b;
      weights_[index(t, s)] = w;
    }
}

std::size_t LoopModule::index(std::size_t t, long s) const {
  if (s < -spec_.window || s > spec_.window || t >= tensor_.size()) throw Error("loop module index out of range");
  return t * static_cast<std::size_t>(2 * spec_.window + 1) + static_cast<std::size_t>(s + spec_.window);
}

long LoopModule::loop_degree(std::size_t i) const {
  return static_cast<long>(i % static_cast<std::size_t>(2 * spec_.window + 1)) - spec_.window;
}

std::string LoopModule::label(std::size_t i) const {
  std::size_t width = static_cast<std::size_t>(2 * spec_.window + 1);
  return tensor_.label(i / width) + " ⊗ t^" + std::to_string(loop_degree(i));
}

MaybeVector LoopModule::compute(const Letter& l, std::size_t i) const {
  using K = Letter::Kind;
  const std::size_t width = static_cast<std::size_t>(2 * spec_.window + 1);
  const long s = loop_degree(i);
  switch (l.kind) {
    case K::c2: return SparseVector{};
    case K::d2: throw Error("d2 does not act on loop modules");
    case K::c1:
      if (l.r2 != 0) throw Error("t2-graded letters do not act on loop modules");
      return SparseVector{};
    case K::d1: return SparseVector::unit(i, s + spec_.b);
    case K::fin: break;
  }
  if (l.r2 != 0) throw Error("t2-graded letters do not act on loop modules");
  long s2 = s + l.r1;
  if (s2 < -spec_.window || s2 > spec_.window) return std::nullopt;
  std::vector<Rational> coeff;
  for (auto& a : spec_.points) coeff.push_back(pow(a, l.r1));
  Letter base = l;
  base.r1 = 0;
  auto img = tensor_.act(base, coeff, i / width);
  SparseVector out;
  for (auto& [t, c] : img->entries()) out.add(index(t, s2), c);
  return out;
}

std::vector<TorElement> LoopModule::generators() const {
  const auto& g = algebra();
  std::vector<TorElement> out;
  for (int i = 0; i <= g->rank(); ++i) out.push_back(toralg::affine_e(g, i));
  for (int i = 0; i <= g->rank(); ++i) out.push_back(toralg::affine_f(g, i));
  for (int i = 0; i < g->rank(); ++i) out.emplace_back(g, toralg::fin_letter(g->cartan_index(i)));
  out.emplace_back(g, toralg::d1_letter());
  return out;
}

std::vector<TorElement> LoopModule::raising_generators() const {
  std::vector<TorElement> out;
  for (int i = 0; i <= algebra()->rank(); ++i) out.push_back(toralg::affine_e(algebra(), i));
  return out;
}

std::string LoopModule::descriptor() const {
  nlohmann::json j;
  j["kind"] = "V_aff(lambda,a,b)";
  j["type"] = algebra()->cartan().label();
  j["lambdas"] = nlohmann::json::array();
  for (auto& l : spec_.lambdas) {
    nlohmann::json w = nlohmann::json::array();
    for (auto& c : l.coords) w.push_back(c.get_str());
    j["lambdas"].push_back(w);
  }
  j["points"] = nlohmann::json::array();
  for (auto& a : spec_.points) j["points"].push_back(a.get_str());
  j["b"] = spec_.b.get_str();
  j["truncation"] = {{"laurent", spec_.window}};
  return j.dump();
}

std::shared_ptr<const LoopModule> loop_module(const liecore::AlgebraPtr& g, const LoopModuleSpec& spec) {
  return std::make_shared<LoopModule>(g, spec);
}

std::string LoopVerdict::to_string() const {
  if (irreducible) return "irreducible";
  std::string s = "reducible, r=" + std::to_string(period) + ", generators at t^{";
  for (std::size_t i = 0; i < generator_degrees.size(); ++i) s += (i ? "," : "") + std::to_string(generator_degrees[i]);
  return s + "}";
}

LoopVerdict loop_irreducibility(const LoopModuleSpec& spec) {
  spec.validate();
  auto nonzero = [](const liecore::FinWeight& w) {
    for (auto& c : w.coords)
      if (!is_zero(c)) return true;
    return false;
  };
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < spec.lambdas.size(); ++i)
    if (nonzero(spec.lambdas[i])) live.push_back(i);
  auto reducible = [](long r) {
    LoopVerdict v{false, r, {}};
    for (long l = 0; l < r; ++l) v.generator_degrees.push_back(l);
    return v;
  };
  if (live.empty()) return reducible(1);
  // f(m) vanishes for all odd m iff the live terms pair off as (a, λ), (-a, λ);
  // distinct points leave at most one partner for each term
  std::vector<bool> used(spec.lambdas.size(), false);
  for (auto i : live) {
    if (used[i]) continue;
    bool paired = false;
    for (auto j : live)
      if (!used[j] && j != i && spec.points[j] == -spec.points[i] && spec.lambdas[j] == spec.lambdas[i]) {
        used[i] = used[j] = true;
        paired = true;
        break;
      }
    if (!paired) return LoopVerdict{};
  }
  return reducible(2);
}

IndecomposableExample::IndecomposableExample(const liecore::AlgebraPtr& sl2, long window)
    : WeightModule(sl2), window_(window) {
  if (sl2->rank() != 1) throw Error("the indecomposable example is an sl2 module");
  if (window < 1) throw Error("window must be at least 1");
  weights_.resize(dim());
  for (int kind = 0; kind < 4; ++kind)
    for (long r = -window; r <= window; ++r) {
      TorWeight w = TorWeight::zero(1);
      w.fin[0] = kind == 3 ? 0 : 2 - 2 * kind;
      w.d1 = r;
      weights_[index(kind, r)] = w;
    }
}

std::size_t IndecomposableExample::index(int kind, long r) const {
  if (kind < 0 || kind > 3 || r < -window_ || r > window_) throw Error("example index out of range");
  return static_cast<std::size_t>(kind) * static_cast<std::size_t>(2 * window_ + 1) +
         static_cast<std::size_t>(r + window_);
}

std::string IndecomposableExample::label(std::size_t i) const {
  std::size_t width = static_cast<std::size_t>(2 * window_ + 1);
  int kind = static_cast<int>(i / width);
  long r = static_cast<long>(i % width) - window_;
  return (kind == 3 ? std::string("w0") : "v" + std::to_string(kind)) + " t^" + std::to_string(r);
}

MaybeVector IndecomposableExample::primitive(const Letter& l, std::size_t i) const {
  const auto& g = *algebra();
  const std::size_t width = static_cast<std::size_t>(2 * window_ + 1);
  const int kind = static_cast<int>(i / width);
  const long r = static_cast<long>(i % width) - window_;
  auto at = [&](int k, long rr) -> MaybeVector {
    if (rr < -window_ || rr > window_) return std::nullopt;
    return SparseVector::unit(index(k, rr));
  };
  auto scaled = [](MaybeVector v, Rational c) -> MaybeVector {
    if (v) *v *= c;
    return v;
  };
  const std::size_t x = g.raising(0), y = g.lowering(0), h = g.cartan_index(0);
  if (kind == 3) return SparseVector{};  // g_aff kills w0 t^r
  if (l.fin == h && l.r1 == 0) return SparseVector::unit(i, 2 - 2 * kind);
  if (l.fin == x && l.r1 == 0) return kind == 0 ? SparseVector{} : *scaled(at(kind - 1, r), 3 - kind);
  if (l.fin == y && l.r1 == 0) return kind == 2 ? SparseVector{} : *scaled(at(kind + 1, r), kind + 1);
  if (l.fin == x && l.r1 == -1) {
    if (kind == 0) return SparseVector{};
    if (kind == 1) return scaled(at(0, r - 1), 2);
    auto a = at(1, r - 1);
    if (!a) return std::nullopt;
    a->add(index(3, r - 1), 1);
    return a;
  }
  if (l.fin == y && l.r1 == 1) {
    if (kind == 2) return SparseVector{};
    if (kind == 1) return scaled(at(2, r + 1), 2);
    auto a = at(1, r + 1);
    if (!a) return std::nullopt;
    a->add(index(3, r + 1), 1);
    return a;
  }
  throw Error("not a primitive letter of the example module");
}

MaybeVector IndecomposableExample::commutator(const Letter& a, const Letter& b, std::size_t i) const {
  auto e = SparseVector::unit(i);
  auto bi = act(*this, b, e);
  auto ai = act(*this, a, e);
  if (!ai || !bi) return std::nullopt;
  auto ab = act(*this, a, *bi);
  auto ba = act(*this, b, *ai);
  if (!ab || !ba) return std::nullopt;
  return *ab - *ba;
}

MaybeVector IndecomposableExample::compute(const Letter& l, std::size_t i) const {
  using K = Letter::Kind;
  const auto& g = *algebra();
  const std::size_t width = static_cast<std::size_t>(2 * window_ + 1);
  switch (l.kind) {
    case K::c1:
    case K::c2: return SparseVector{};
    case K::d1: return SparseVector::unit(i, static_cast<long>(i % width) - window_);
    case K::d2: throw Error("d2 does not act on the example module");
    case K::fin: break;
  }
  if (l.r2 != 0) throw Error("t2-graded letters do not act on the example module");
  const std::size_t x = g.raising(0), y = g.lowering(0), h = g.cartan_index(0);
  const long r = l.r1;
  auto L = [](std::size_t f, long rr) { return toralg::fin_letter(f, rr); };
  if ((l.fin == x && (r == 0 || r == -1)) || (l.fin == y && (r == 0 || r == 1)) || (l.fin == h && r == 0))
    return primitive(l, i);
  // remaining loop letters through brackets of the generators
  auto half = [](MaybeVector v, Rational c) -> MaybeVector {
    if (v) *v *= c;
    return v;
  };
  if (l.fin == h) return r > 0 ? commutator(L(x, 0), L(y, r), i) : commutator(L(x, r), L(y, 0), i);
  if (l.fin == x)
    return r > 0 ? half(commutator(L(h, r), L(x, 0), i), Rational(1, 2))
                 : half(commutator(L(h, r + 1), L(x, -1), i), Rational(1, 2));
  return r > 1 ? half(commutator(L(h, r - 1), L(y, 1), i), Rational(-1, 2))
               : half(commutator(L(h, r), L(y, 0), i), Rational(-1, 2));
}

std::vector<TorElement> IndecomposableExample::generators() const {
  const auto& g = algebra();
  const std::size_t x = g->raising(0), y = g->lowering(0), h = g->cartan_index(0);
  return {TorElement(g, toralg::fin_letter(x)),     TorElement(g, toralg::fin_letter(y)),
          TorElement(g, toralg::fin_letter(h)),     TorElement(g, toralg::fin_letter(x, -1)),
          TorElement(g, toralg::fin_letter(y, 1)),  TorElement(g, toralg::c1_letter()),
          TorElement(g, toralg::d1_letter())};
}

std::vector<TorElement> IndecomposableExample::raising_generators() const {
  return {toralg::affine_e(algebra(), 0), toralg::affine_e(algebra(), 1)};
}

std::string IndecomposableExample::descriptor() const {
  nlohmann::json j;
  j["kind"] = "sl2-indecomposable";
  j["truncation"] = {{"laurent", window_}};
  return j.dump();
}

std::shared_ptr<const IndecomposableExample> example_indecomposable_sl2(long window) {
  return std::make_shared<IndecomposableExample>(liecore::build_algebra(liecore::CartanData::of_type('A', 1)), window);
}

TensorCriterion tensor_irreducibility_condition(const liecore::ChevalleyAlgebra& g, const TorWeight& lambda,
                                                const std::vector<liecore::FinWeight>& mus,
                                                const std::vector<Rational>& points) {
  if (mus.size() != points.size() || mus.empty()) throw Error("one point per finite weight");
  std::set<Rational> seen;
  for (auto& a : points)
    if (is_zero(a) || !seen.insert(a).second) throw Error("points must be distinct and nonzero");
  for (auto& m : mus)
    if (!m.dominant() || static_cast<int>(m.coords.size()) != g.rank()) throw Error("weights must be dominant");
  const int n = g.rank();
  const long k = static_cast<long>(mus.size());
  liecore::FinWeight mu{std::vector<Rational>(n, 0)};
  std::vector<Rational> weighted(n, 0);
  for (std::size_t j = 0; j < mus.size(); ++j)
    for (int i = 0; i < n; ++i) {
      mu.coords[i] += mus[j].coords[i];
      weighted[i] += points[j] * mus[j].coords[i];
    }
  bool cond1 = false;
  for (auto& c : weighted)
    if (!is_zero(c)) cond1 = true;
  if (!cond1) return TensorCriterion::not_met;
  auto mustar = liecore::dual_dominant_weight(g.cartan(), mu);
  for (auto& alpha : g.roots().positive) {
    // ν(h_α) = Σ α_i ν(h_i) in simply-laced types
    Rational plus = 0, minus = 0;
    for (int i = 0; i < n; ++i) {
      plus += alpha[i] * (mu.coords[i] + lambda.fin[i]);
      minus += alpha[i] * (mustar.coords[i] - lambda.fin[i]);
    }
    if ((k + 1) * lambda.c1 < plus || k * lambda.c1 < minus) return TensorCriterion::met;
  }
  return TensorCriterion::not_met;
}

}  // namespace dalie::rep
