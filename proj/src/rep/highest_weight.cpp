#include "dalie/rep/highest_weight.hpp"

#include <set>

#include "json.hpp"

namespace dalie::rep {

namespace {

Letter single_letter(const TorElement& e) {
  if (e.terms().size() != 1 || e.terms().begin()->second != 1) throw Error("expected a single basis letter");
  return e.terms().begin()->first;
}

bool is_cartan_letter(const liecore::ChevalleyAlgebra& g, const Letter& l) {
  using K = Letter::Kind;
  if (l.kind == K::d1) return true;
  if (l.kind == K::c1) return l.r2 == 0;
  return l.kind == K::fin && l.r1 == 0 && l.r2 == 0 && g.part(l.fin) == liecore::ChevalleyAlgebra::Part::cartan;
}

void check_nonneg_integer(const Rational& v, const char* what) {
  if (!is_integer(v) || sgn(v) < 0) throw Error(std::string("weight is not dominant: ") + what);
}

}  // namespace

HighestWeightModule::HighestWeightModule(liecore::AlgebraPtr g, Flavour flavour, const TorWeight& lambda, long depth)
    : WeightModule(std::move(g)), flavour_(flavour), depth_(depth), orient_(flavour == Flavour::affine_dual ? -1 : 1) {
  const auto& alg = *algebra();
  if (static_cast<int>(lambda.fin.size()) != alg.rank()) throw Error("weight rank mismatch");
  for (auto& v : lambda.fin) check_nonneg_integer(v, "finite part");
  if (flavour_ == Flavour::finite) {
    for (int i = 1; i <= alg.rank(); ++i) nodes_.push_back(i);
  } else {
    if (depth < 0) throw Error("negative depth");
    if (sgn(lambda.c1) <= 0) throw Error("zero level: affine highest weight needs λ(c1) > 0");
    check_nonneg_integer(lambda.h0(alg), "λ(h_0)");
    for (int i = 0; i <= alg.rank(); ++i) nodes_.push_back(i);
  }
  for (int node : nodes_) {
    up_letters_.push_back(single_letter(up(node)));
    down_letters_.push_back(single_letter(down(node)));
  }
  Vec top;
  top.key.assign(nodes_.size(), 0);
  if (flavour_ == Flavour::finite) top.weight = TorWeight{lambda.fin};
  else top.weight = flavour_ == Flavour::affine ? lambda : -lambda;
  top.label = "v";
  top.up_images.assign(nodes_.size(), SparseVector{});
  vectors_.push_back(std::move(top));
  build();
}

TorElement HighestWeightModule::up(int node) const {
  return orient_ > 0 ? toralg::affine_e(algebra(), node) : toralg::affine_f(algebra(), node);
}

TorElement HighestWeightModule::down(int node) const {
  return orient_ > 0 ? toralg::affine_f(algebra(), node) : toralg::affine_e(algebra(), node);
}

long HighestWeightModule::depth_of(std::size_t i) const {
  return flavour_ == Flavour::finite ? 0 : vectors_.at(i).key[0];
}

HighestWeightModule::Key HighestWeightModule::letter_shift(const Letter& l) const {
  const auto& g = *algebra();
  Key c(nodes_.size(), 0);
  if (l.kind != Letter::Kind::fin) return c;
  auto alpha = g.root_of(l.fin);
  if (flavour_ == Flavour::finite) {
    if (l.r1 != 0) throw Error("loop letters do not act on a finite-type module");
    for (std::size_t p = 0; p < nodes_.size(); ++p) c[p] = alpha[p];
  } else {
    const auto& theta = g.roots().theta();
    c[0] = l.r1;
    for (int i = 0; i < g.rank(); ++i) c[i + 1] = alpha[i] + l.r1 * theta[i];
  }
  for (auto& x : c) x *= -orient_;
  return c;
}

bool HighestWeightModule::key_valid(const Key& k) const {
  for (long x : k)
    if (x < 0) return false;
  return flavour_ == Flavour::finite || k[0] <= depth_;
}

TorWeight HighestWeightModule::weight_of(const Key& k) const {
  const auto& g = *algebra();
  TorWeight w = vectors_[0].weight;
  for (std::size_t p = 0; p < nodes_.size(); ++p) {
    if (k[p] == 0) continue;
    liecore::RootVector alpha(g.rank(), 0);
    if (nodes_[p] == 0) {
      for (int i = 0; i < g.rank(); ++i) alpha[i] = -g.roots().theta()[i];
      w.d1 -= orient_ * k[p];
    } else {
      alpha[nodes_[p] - 1] = 1;
    }
    auto vals = g.root_on_coroots(alpha);
    for (int i = 0; i < g.rank(); ++i) w.fin[i] -= orient_ * k[p] * vals[i];
  }
  return w;
}

void HighestWeightModule::build() {
  const auto& g = *algebra();
  const std::size_t np = nodes_.size();
  Space top_space;
  top_space.basis = {0};
  spaces_.emplace(vectors_[0].key, std::move(top_space));
  std::set<Key> frontier{vectors_[0].key};
  // [up_q, down_p] is Cartan; tabulate as TorElements
  std::vector<std::vector<TorElement>> brackets(np, std::vector<TorElement>(np));
  for (std::size_t q = 0; q < np; ++q)
    for (std::size_t p = 0; p < np; ++p)
      brackets[q][p] = toralg::bracket_letters(algebra(), up_letters_[q], down_letters_[p]);

  while (!frontier.empty()) {
    std::set<Key> candidates;
    for (auto& k : frontier)
      for (std::size_t p = 0; p < np; ++p) {
        Key kk = k;
        ++kk[p];
        if (key_valid(kk)) candidates.insert(kk);
      }
    std::set<Key> next;
    for (auto& K : candidates) {
      Space sp;
      const TorWeight wK = weight_of(K);
      for (std::size_t p = 0; p < np; ++p) {
        Key kk = K;
        --kk[p];
        auto src = spaces_.find(kk);
        if (src == spaces_.end()) continue;
        for (std::size_t u : src->second.basis) {
          std::vector<SparseVector> parts(np);
          SparseVector image;
          for (std::size_t q = 0; q < np; ++q) {
            for (auto& [w, c] : vectors_[u].up_images[q].entries()) parts[q].axpy(c, down_action_.at({p, w}));
            Rational scalar = 0;
            for (auto& [l, c] : brackets[q][p].terms()) scalar += c * vectors_[u].weight.eval(g, l);
            parts[q].add(u, scalar);
            image += parts[q];
          }
          if (sp.images.insert(image)) {
            std::size_t idx = vectors_.size();
            Vec v;
            v.key = K;
            v.weight = wK;
            v.label = std::string(orient_ > 0 ? "f" : "e") + std::to_string(nodes_[p]) + " " + vectors_[u].label;
            v.origin_node = static_cast<int>(p);
            v.origin = u;
            v.up_images = std::move(parts);
            vectors_.push_back(std::move(v));
            sp.basis.push_back(idx);
            sp.slot_basis.push_back(static_cast<long>(idx));
            down_action_[{p, u}] = SparseVector::unit(idx);
          } else {
            sp.slot_basis.push_back(-1);
            SparseVector res;
            auto red = sp.images.reduce(image);
            for (auto& [slot, c] : red.combination.entries())
              res.add(static_cast<std::size_t>(sp.slot_basis.at(slot)), c);
            down_action_[{p, u}] = res;
          }
        }
      }
      if (!sp.basis.empty()) {
        spaces_.emplace(K, std::move(sp));
        next.insert(K);
      }
    }
    frontier = std::move(next);
  }
}

SparseVector HighestWeightModule::solve(const Key& k, const SparseVector& image) const {
  const Space& sp = spaces_.at(k);
  auto red = sp.images.reduce(image);
  if (!red.remainder.is_zero()) throw Error("inconsistent highest-weight action");
  SparseVector out;
  for (auto& [slot, c] : red.combination.entries()) out.add(static_cast<std::size_t>(sp.slot_basis.at(slot)), c);
  return out;
}

SparseVector HighestWeightModule::act_known(const TorElement& e, const SparseVector& v) const {
  auto r = act(*this, e, v);
  if (!r) throw Error("unexpected window loss inside a highest-weight module");
  return *r;
}

MaybeVector HighestWeightModule::compute(const Letter& l, std::size_t i) const {
  const auto& g = *algebra();
  using K = Letter::Kind;
  if (l.kind == K::c2) return SparseVector{};
  if (l.kind == K::d2 || l.r2 != 0) throw Error("t2-graded letters act only through evaluation modules");
  if (is_cartan_letter(g, l)) return SparseVector::unit(i, vectors_[i].weight.eval(g, l));

  Key target = vectors_[i].key;
  Key shift = letter_shift(l);
  for (std::size_t p = 0; p < target.size(); ++p) target[p] += shift[p];
  for (long x : target)
    if (x < 0) return SparseVector{};
  if (flavour_ != Flavour::finite && target[0] > depth_) return std::nullopt;
  if (!spaces_.count(target)) return SparseVector{};

  for (std::size_t p = 0; p < nodes_.size(); ++p) {
    if (l == down_letters_[p]) return down_action_.at({p, i});
    if (l == up_letters_[p]) return vectors_[i].up_images[p];
  }
  TorElement X(algebra(), l);
  if (i == 0) {
    SparseVector image;
    for (std::size_t q = 0; q < nodes_.size(); ++q)
      image += act_known(toralg::bracket_letters(algebra(), up_letters_[q], l), SparseVector::unit(0));
    return solve(target, image);
  }
  const Vec& b = vectors_[i];
  const std::size_t p = static_cast<std::size_t>(b.origin_node);
  SparseVector out = act_known(TorElement(algebra(), down_letters_[p]), act_known(X, SparseVector::unit(b.origin)));
  out += act_known(toralg::bracket_letters(algebra(), l, down_letters_[p]), SparseVector::unit(b.origin));
  return out;
}

std::vector<TorElement> HighestWeightModule::generators() const {
  std::vector<TorElement> out;
  for (int node : nodes_) out.push_back(up(node));
  for (int node : nodes_) out.push_back(down(node));
  for (int i = 0; i < algebra()->rank(); ++i) out.emplace_back(algebra(), toralg::fin_letter(algebra()->cartan_index(i)));
  if (flavour_ != Flavour::finite) out.emplace_back(algebra(), toralg::d1_letter());
  return out;
}

std::vector<TorElement> HighestWeightModule::raising_generators() const {
  std::vector<TorElement> out;
  for (int node : nodes_) out.push_back(up(node));
  return out;
}

std::string HighestWeightModule::descriptor() const {
  const auto& g = *algebra();
  nlohmann::json j;
  j["kind"] = flavour_ == Flavour::finite ? "V_fin" : flavour_ == Flavour::affine ? "V_aff" : "V*_aff";
  j["type"] = g.cartan().label();
  TorWeight lam = orient_ > 0 ? vectors_[0].weight : -vectors_[0].weight;
  nlohmann::json nodes = nlohmann::json::array();
  if (flavour_ != Flavour::finite) nodes.push_back(lam.h0(g).get_str());
  for (auto& v : lam.fin) nodes.push_back(v.get_str());
  j["lambda"] = nodes;
  if (flavour_ != Flavour::finite) j["truncation"] = {{"depth", depth_}};
  return j.dump();
}

std::shared_ptr<const HighestWeightModule> irreducible_fin(const liecore::AlgebraPtr& g, const liecore::FinWeight& lambda) {
  return std::make_shared<HighestWeightModule>(g, HighestWeightModule::Flavour::finite, TorWeight::finite(lambda), 0);
}

std::shared_ptr<const HighestWeightModule> irreducible_aff_truncated(const liecore::AlgebraPtr& g,
                                                                     const TorWeight& lambda, long depth) {
  return std::make_shared<HighestWeightModule>(g, HighestWeightModule::Flavour::affine, lambda, depth);
}

std::shared_ptr<const HighestWeightModule> dual_aff_truncated(const liecore::AlgebraPtr& g, const TorWeight& lambda,
                                                              long depth) {
  return std::make_shared<HighestWeightModule>(g, HighestWeightModule::Flavour::affine_dual, lambda, depth);
}

}  // namespace dalie::rep
