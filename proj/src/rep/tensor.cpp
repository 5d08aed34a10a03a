#include "dalie/rep/tensor.hpp"

#include "json.hpp"

namespace dalie::rep {

TensorBasis::TensorBasis(std::vector<HwPtr> factors, std::optional<long> depth)
    : factors_(std::move(factors)), depth_(depth) {
  if (factors_.empty()) throw Error("tensor product needs at least one factor");
  for (auto& f : factors_)
    if (f->algebra()->cartan().matrix() != factors_[0]->algebra()->cartan().matrix())
      throw Error("tensor factors over different algebras");
  // enumerate tuples in lexicographic order, pruning by partial depth
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t j, long used) -> void {
    if (j == factors_.size()) {
      index_.emplace(cur, tuples_.size());
      tuples_.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < factors_[j]->dim(); ++b) {
      long d = used + factors_[j]->depth_of(b);
      if (depth_ && d > *depth_) continue;
      cur.push_back(b);
      self(self, j + 1, d);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::optional<std::size_t> TensorBasis::index(const std::vector<std::size_t>& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long TensorBasis::depth(std::size_t i) const {
  long d = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) d += factors_[j]->depth_of(tuples_[i][j]);
  return d;
}

TorWeight TensorBasis::weight(std::size_t i) const {
  TorWeight w = factors_[0]->weight(tuples_[i][0]);
  for (std::size_t j = 1; j < factors_.size(); ++j) w = w + factors_[j]->weight(tuples_[i][j]);
  return w;
}

std::string TensorBasis::label(std::size_t i) const {
  std::string s;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) s += " ⊗ ";
    s += "(" + factors_[j]->label(tuples_[i][j]) + ")";
  }
  return s;
}

MaybeVector TensorBasis::act(const Letter& l, const std::vector<Rational>& coeff, std::size_t i) const {
  SparseVector out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (is_zero(coeff[j])) continue;
    auto img = factors_[j]->act_basis(l, tuples_[i][j]);
    if (!img) return std::nullopt;
    auto t = tuples_[i];
    for (auto& [b, c] : img->entries()) {
      t[j] = b;
      auto idx = index(t);
      if (!idx) return std::nullopt;
      out.add(*idx, coeff[j] * c);
    }
  }
  return out;
}

EvaluationTensor::EvaluationTensor(std::vector<HwPtr> factors, std::vector<Rational> points, long depth)
    : WeightModule(factors.empty() ? nullptr : factors[0]->algebra()),
      basis_(factors, depth),
      points_(std::move(points)),
      depth_(depth) {
  if (points_.size() != basis_.factors().size()) throw Error("one evaluation point per factor");
  affine_ = basis_.factors()[0]->flavour() != HighestWeightModule::Flavour::finite;
  for (auto& f : basis_.factors())
    if ((f->flavour() != HighestWeightModule::Flavour::finite) != affine_)
      throw Error("cannot mix finite and affine factors");
  for (std::size_t i = 0; i < basis_.size(); ++i) weights_.push_back(basis_.weight(i));
}

MaybeVector EvaluationTensor::compute(const Letter& l, std::size_t i) const {
  using K = Letter::Kind;
  if (l.kind == K::c2) return SparseVector{};
  if (l.kind == K::d2) throw Error("d2 is not represented on evaluation modules");
  Letter base = l;
  std::vector<Rational> coeff(points_.size(), 1);
  if (l.kind == K::fin || l.kind == K::c1) {
    base.r2 = 0;
    for (std::size_t j = 0; j < points_.size(); ++j) coeff[j] = pow(points_[j], l.r2);
  }
  return basis_.act(base, coeff, i);
}

std::vector<TorElement> EvaluationTensor::generators() const {
  const auto& g = algebra();
  std::vector<TorElement> out;
  const int first = affine_ ? 0 : 1;
  const long kmax = static_cast<long>(points_.size()) - 1;
  for (long m = 0; m <= kmax; ++m) {
    for (int i = first; i <= g->rank(); ++i) out.push_back(toralg::affine_e(g, i, m));
    for (int i = first; i <= g->rank(); ++i) out.push_back(toralg::affine_f(g, i, m));
    for (int i = 0; i < g->rank(); ++i) out.emplace_back(g, toralg::fin_letter(g->cartan_index(i), 0, m));
  }
  if (affine_) out.emplace_back(g, toralg::d1_letter());
  return out;
}

std::vector<TorElement> EvaluationTensor::raising_generators() const {
  std::vector<TorElement> out;
  for (int i = affine_ ? 0 : 1; i <= algebra()->rank(); ++i) out.push_back(toralg::affine_e(algebra(), i));
  return out;
}

std::string EvaluationTensor::descriptor() const {
  nlohmann::json j;
  j["kind"] = affine_ ? "V_tor" : "V_fin[t]";
  j["factors"] = nlohmann::json::array();
  for (auto& f : basis_.factors()) j["factors"].push_back(nlohmann::json::parse(f->descriptor()));
  j["points"] = nlohmann::json::array();
  for (auto& a : points_) j["points"].push_back(a.get_str());
  if (affine_) j["truncation"] = {{"depth", depth_}};
  return j.dump();
}

std::shared_ptr<const EvaluationTensor> evaluation_tensor(std::vector<HwPtr> factors, std::vector<Rational> points,
                                                          long depth) {
  return std::make_shared<EvaluationTensor>(std::move(factors), std::move(points), depth);
}

std::shared_ptr<const EvaluationTensor> evaluation_tensor(const liecore::AlgebraPtr& g,
                                                          const std::vector<TorWeight>& lambdas,
                                                          std::vector<Rational> points, long depth) {
  std::vector<HwPtr> factors;
  for (auto& l : lambdas) factors.push_back(irreducible_aff_truncated(g, l, depth));
  return evaluation_tensor(std::move(factors), std::move(points), depth);
}

}  // namespace dalie::rep
