#pragma once

#include "dalie/rep/tensor.hpp"

namespace dalie::weyl {

using rep::TorWeight;
using toralg::Letter;
using toralg::TorElement;

/// The t-degree filtration of V_1(a_1) ⊗ ... ⊗ V_k(a_k) (t = t2, points
/// distinct). Since n⁺[t] kills v = v_1 ⊗ ... ⊗ v_k and h[t] acts on it by
/// scalars, V_r is spanned by lowering words f_i t^s of total degree <= r
/// applied to v; lowering never re-enters a depth window, so each V_r is exact
/// inside the tensor's truncation.
class FilteredModule {
 public:
  FilteredModule(std::shared_ptr<const rep::EvaluationTensor> tensor, long max_degree);

  const rep::EvaluationTensor& tensor() const { return *tensor_; }
  const std::shared_ptr<const rep::EvaluationTensor>& tensor_ptr() const { return tensor_; }
  long max_degree() const { return static_cast<long>(levels_.size()) - 1; }
  std::size_t level_dim(long r) const;
  /// weight -> dims of gr_0 .. gr_R
  std::map<TorWeight, std::vector<std::size_t>> graded_table() const;
  /// Σ over weights of dim gr_r, r = 0..R
  std::vector<std::size_t> graded_dims() const;
  /// V_R is the whole truncated tensor.
  bool exhausts() const { return level_dim(max_degree()) == tensor_->dim(); }
  /// V_r ∩ V_μ as echelon rows.
  std::vector<SparseVector> level_rows(long r, const TorWeight& mu) const;

 private:
  std::shared_ptr<const rep::EvaluationTensor> tensor_;
  std::vector<std::map<TorWeight, EchelonBasis>> levels_;
};

/// gr V = ⊕_r V_r / V_{r-1} with x t^s : gr_r -> gr_{r+s}. The d2 eigenvalue
/// of a basis vector is its degree r. Images beyond the last level are lost.
class GradedFusion : public rep::WeightModule {
 public:
  explicit GradedFusion(std::shared_ptr<const FilteredModule> filtered);

  std::size_t dim() const override { return reps_.size(); }
  const TorWeight& weight(std::size_t i) const override { return reps_[i].weight; }
  std::string label(std::size_t i) const override;
  std::vector<TorElement> generators() const override;
  std::vector<TorElement> raising_generators() const override;
  std::string descriptor() const override;

  const FilteredModule& filtered() const { return *filtered_; }
  long degree(std::size_t i) const { return reps_[i].degree; }
  /// Image of v_1 ⊗ ... ⊗ v_k.
  std::size_t top_index() const { return 0; }

 protected:
  rep::MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  struct Rep {
    SparseVector vec;
    long degree;
    TorWeight weight;
  };
  struct Piece {
    EchelonBasis span;  // V_{r-1,μ} rows, then the representatives
    std::vector<long> slot_basis;
  };
  std::shared_ptr<const FilteredModule> filtered_;
  std::vector<Rep> reps_;
  std::map<std::pair<long, TorWeight>, Piece> pieces_;
};

/// V_1(a_1) * ... * V_k(a_k); points must be distinct.
std::shared_ptr<const GradedFusion> fusion_product(std::vector<rep::HwPtr> factors, std::vector<Rational> points,
                                                   long max_degree, long depth = 0);

/// W(λ) = V_aff(ω_0)(c_01) * ... * V_aff(ω_n)(c_{n λ_n}), factors in node
/// order, each truncated at `depth`.
std::shared_ptr<const GradedFusion> fusion_W(const liecore::AlgebraPtr& g, const TorWeight& lambda,
                                             std::vector<Rational> points, long max_degree, long depth);

/// Pullback through x t^r -> x (t - a)^r (t = t2). a = 0 is the identity.
class PullbackModule : public rep::WeightModule {
 public:
  PullbackModule(rep::ModulePtr base, Rational a);

  std::size_t dim() const override { return base_->dim(); }
  const TorWeight& weight(std::size_t i) const override { return weights_[i]; }
  std::string label(std::size_t i) const override { return base_->label(i); }
  std::vector<TorElement> generators() const override { return base_->generators(); }
  std::vector<TorElement> raising_generators() const override { return base_->raising_generators(); }
  std::string descriptor() const override;
  bool d2_graded() const override { return a_ == 0 && base_->d2_graded(); }

  const rep::WeightModule& base() const { return *base_; }
  const Rational& shift() const { return a_; }

 protected:
  rep::MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  rep::ModulePtr base_;
  Rational a_;
  std::vector<TorWeight> weights_;
};

std::shared_ptr<const PullbackModule> pullback_shift(rep::ModulePtr w, const Rational& a);

}  // namespace dalie::weyl
