#include "dalie/weyl/fusion.hpp"

#include <deque>
#include "json.hpp"
#include <set>

namespace dalie::weyl {

using rep::MaybeVector;

namespace {

std::vector<TorElement> chevalley(const rep::EvaluationTensor& t, bool lowering, long s) {
  const auto& g = t.algebra();
  std::vector<TorElement> out;
  if (t.affine()) {
    for (int i = 0; i <= g->rank(); ++i) out.push_back(lowering ? toralg::affine_f(g, i, s) : toralg::affine_e(g, i, s));
  } else {
    for (int i = 0; i < g->rank(); ++i) {
      auto root = g->simple_root_index(i);
      out.emplace_back(g, toralg::fin_letter(lowering ? g->lowering(root) : g->raising(root), 0, s));
    }
  }
  return out;
}

TorWeight weight_of(const rep::WeightModule& m, const SparseVector& v) { return m.weight(v.entries().begin()->first); }

}  // namespace

FilteredModule::FilteredModule(std::shared_ptr<const rep::EvaluationTensor> tensor, long max_degree)
    : tensor_(std::move(tensor)) {
  if (max_degree < 0) throw Error("fusion degree bound must be >= 0");
  const auto& t = *tensor_;
  std::vector<std::vector<TorElement>> lower;
  for (long s = 0; s <= max_degree; ++s) lower.push_back(chevalley(t, true, s));
  for (long r = 0; r <= max_degree; ++r) {
    std::map<TorWeight, EchelonBasis> cur = r > 0 ? levels_.back() : std::map<TorWeight, EchelonBasis>{};
    std::deque<SparseVector> queue;
    auto add = [&](const MaybeVector& v) {
      if (!v || v->is_zero()) return;
      if (cur[weight_of(t, *v)].insert(*v)) queue.push_back(*v);
    };
    if (r == 0) add(SparseVector::unit(t.top_index()));
    for (long s = 1; s <= r; ++s)
      for (auto& [mu, e] : levels_[static_cast<std::size_t>(r - s)])
        for (auto& row : e.rows())
          for (auto& f : lower[static_cast<std::size_t>(s)]) add(rep::act(t, f, row));
    while (!queue.empty()) {
      SparseVector v = queue.front();
      queue.pop_front();
      for (auto& f : lower[0]) add(rep::act(t, f, v));
    }
    levels_.push_back(std::move(cur));
  }
}

std::size_t FilteredModule::level_dim(long r) const {
  if (r < 0) return 0;
  r = std::min(r, max_degree());
  std::size_t d = 0;
  for (auto& [mu, e] : levels_[static_cast<std::size_t>(r)]) d += e.rank();
  return d;
}

std::map<TorWeight, std::vector<std::size_t>> FilteredModule::graded_table() const {
  std::map<TorWeight, std::vector<std::size_t>> out;
  for (long r = 0; r <= max_degree(); ++r)
    for (auto& [mu, e] : levels_[static_cast<std::size_t>(r)]) {
      auto& dims = out[mu];
      dims.resize(static_cast<std::size_t>(max_degree()) + 1, 0);
      std::size_t prev = 0;
      if (r > 0)
        if (auto it = levels_[static_cast<std::size_t>(r - 1)].find(mu); it != levels_[static_cast<std::size_t>(r - 1)].end())
          prev = it->second.rank();
      dims[static_cast<std::size_t>(r)] = e.rank() - prev;
    }
  return out;
}

std::vector<std::size_t> FilteredModule::graded_dims() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_degree()) + 1, 0);
  for (auto& [mu, dims] : graded_table())
    for (std::size_t r = 0; r < dims.size(); ++r) out[r] += dims[r];
  return out;
}

std::vector<SparseVector> FilteredModule::level_rows(long r, const TorWeight& mu) const {
  if (r < 0) return {};
  r = std::min(r, max_degree());
  auto& lvl = levels_[static_cast<std::size_t>(r)];
  auto it = lvl.find(mu);
  return it == lvl.end() ? std::vector<SparseVector>{} : it->second.rows();
}

GradedFusion::GradedFusion(std::shared_ptr<const FilteredModule> filtered)
    : rep::WeightModule(filtered->tensor().algebra()), filtered_(std::move(filtered)) {
  const auto& f = *filtered_;
  const TorWeight top = f.tensor().weight(f.tensor().top_index());
  for (long r = 0; r <= f.max_degree(); ++r) {
    std::vector<TorWeight> weights;
    for (auto& [mu, dims] : f.graded_table())
      if (!f.level_rows(r, mu).empty()) weights.push_back(mu);
    std::stable_partition(weights.begin(), weights.end(), [&](const TorWeight& w) { return w == top; });
    for (auto& mu : weights) {
      Piece p;
      for (auto& row : f.level_rows(r - 1, mu)) {
        p.span.insert(row);
        p.slot_basis.push_back(-1);
      }
      for (auto& row : f.level_rows(r, mu)) {
        if (p.span.insert(row)) {
          p.slot_basis.push_back(static_cast<long>(reps_.size()));
          TorWeight w = mu;
          w.d2 = r;
          reps_.push_back({row, r, w});
        } else {
          p.slot_basis.push_back(-1);
        }
      }
      pieces_.emplace(std::make_pair(r, mu), std::move(p));
    }
  }
}

std::string GradedFusion::label(std::size_t i) const {
  std::string s = "[" + std::to_string(reps_[i].degree) + "] ";
  bool first = true;
  for (auto& [j, c] : reps_[i].vec.entries()) {
    s += (first ? "" : " + ") + to_string(c) + "*" + filtered_->tensor().label(j);
    first = false;
  }
  return s;
}

std::vector<TorElement> GradedFusion::generators() const {
  std::vector<TorElement> out;
  for (long s : {0L, 1L})
    for (bool low : {false, true})
      for (auto& e : chevalley(filtered_->tensor(), low, s)) out.push_back(e);
  return out;
}

std::vector<TorElement> GradedFusion::raising_generators() const { return chevalley(filtered_->tensor(), false, 0); }

std::string GradedFusion::descriptor() const {
  nlohmann::ordered_json j;
  j["kind"] = "fusion";
  j["tensor"] = nlohmann::ordered_json::parse(filtered_->tensor().descriptor());
  j["max_degree"] = filtered_->max_degree();
  return j.dump();
}

MaybeVector GradedFusion::compute(const Letter& l, std::size_t i) const {
  using K = Letter::Kind;
  const auto& rep = reps_[i];
  if (l.kind == K::d2) return SparseVector::unit(i, rep.degree);
  long s = (l.kind == K::fin || l.kind == K::c1) ? l.r2 : 0;
  if (s < 0) throw Error("negative t2 powers do not act on a fusion product");
  auto img = rep::act(filtered_->tensor(), l, rep.vec);
  if (!img) return std::nullopt;
  if (img->is_zero()) return SparseVector{};
  long q = rep.degree + s;
  if (q > filtered_->max_degree()) return std::nullopt;
  TorWeight mu = weight_of(filtered_->tensor(), *img);
  auto it = pieces_.find({q, mu});
  if (it == pieces_.end()) throw Error("internal: image outside the filtration");
  auto red = it->second.span.reduce(*img);
  if (!red.remainder.is_zero()) throw Error("internal: image outside the filtration");
  SparseVector out;
  const auto combo = red.combination;
  for (auto& [slot, c] : combo.entries()) {
    long b = it->second.slot_basis[slot];
    if (b >= 0) out.add(static_cast<std::size_t>(b), c);
  }
  return out;
}

std::shared_ptr<const GradedFusion> fusion_product(std::vector<rep::HwPtr> factors, std::vector<Rational> points,
                                                   long max_degree, long depth) {
  if (factors.empty()) throw Error("fusion needs at least one factor");
  if (std::set<Rational>(points.begin(), points.end()).size() != points.size())
    throw Error("fusion points must be distinct");
  auto tensor = rep::evaluation_tensor(std::move(factors), std::move(points), depth);
  return std::make_shared<const GradedFusion>(std::make_shared<const FilteredModule>(tensor, max_degree));
}

std::shared_ptr<const GradedFusion> fusion_W(const liecore::AlgebraPtr& g, const TorWeight& lambda,
                                             std::vector<Rational> points, long max_degree, long depth) {
  std::vector<rep::HwPtr> factors;
  for (int i = 0; i <= g->rank(); ++i) {
    Rational v = lambda.node(*g, i);
    if (!is_integer(v) || v < 0) throw Error("W(λ) needs a dominant integral λ");
    std::vector<long> unit(static_cast<std::size_t>(g->rank()) + 1, 0);
    unit[static_cast<std::size_t>(i)] = 1;
    auto omega = rep::irreducible_aff_truncated(g, TorWeight::affine(*g, unit), depth);
    for (long j = 0; j < v.get_num().get_si(); ++j) factors.push_back(omega);
  }
  if (factors.size() != points.size()) throw Error("W(λ) needs one point per fundamental factor");
  return fusion_product(std::move(factors), std::move(points), max_degree, depth);
}

PullbackModule::PullbackModule(rep::ModulePtr base, Rational a)
    : rep::WeightModule(base->algebra()), base_(std::move(base)), a_(std::move(a)) {
  for (std::size_t i = 0; i < base_->dim(); ++i) {
    TorWeight w = base_->weight(i);
    if (a_ != 0) w.d2 = 0;
    weights_.push_back(w);
  }
}

std::string PullbackModule::descriptor() const {
  nlohmann::ordered_json j;
  j["kind"] = "pullback";
  j["shift"] = to_string(a_);
  j["base"] = nlohmann::ordered_json::parse(base_->descriptor());
  return j.dump();
}

MaybeVector PullbackModule::compute(const Letter& l, std::size_t i) const {
  using K = Letter::Kind;
  if (a_ == 0) return base_->act_basis(l, i);
  if (l.kind == K::d2) throw Error("d2 does not act after a nonzero shift");
  if ((l.kind != K::fin && l.kind != K::c1) || l.r2 == 0) return base_->act_basis(l, i);
  if (l.r2 < 0) throw Error("negative t2 powers do not act on a pullback");
  SparseVector out;
  const unsigned long s = static_cast<unsigned long>(l.r2);
  for (unsigned long k = 0; k <= s; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), s, k);
    Letter lk = l;
    lk.r2 = static_cast<long>(k);
    auto v = base_->act_basis(lk, i);
    if (!v) return std::nullopt;
    out += *v * (Rational(binom) * pow(-a_, static_cast<long>(s - k)));
  }
  return out;
}

std::shared_ptr<const PullbackModule> pullback_shift(rep::ModulePtr w, const Rational& a) {
  return std::make_shared<const PullbackModule>(std::move(w), a);
}

}  // namespace dalie::weyl
