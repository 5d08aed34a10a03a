#pragma once

#include <optional>

#include "dalie/rep/highest_weight.hpp"

namespace dalie::rep {

using HwPtr = std::shared_ptr<const HighestWeightModule>;

/// Tuples of factor basis indices with total d1-depth <= a bound.
class TensorBasis {
 public:
  TensorBasis(std::vector<HwPtr> factors, std::optional<long> depth);

  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::size_t>& tuple(std::size_t i) const { return tuples_[i]; }
  /// Index of a tuple, or nullopt when it lies outside the depth bound.
  std::optional<std::size_t> index(const std::vector<std::size_t>& t) const;
  long depth(std::size_t i) const;
  const std::vector<HwPtr>& factors() const { return factors_; }
  TorWeight weight(std::size_t i) const;
  std::string label(std::size_t i) const;
  /// Σ_j coeff_j · (letter acting on factor j) applied to tuple i; nullopt on loss.
  MaybeVector act(const Letter& l, const std::vector<Rational>& coeff, std::size_t i) const;

 private:
  std::vector<HwPtr> factors_;
  std::optional<long> depth_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// V_tor(λ⃗, a⃗): x t1^r t2^m acts by Σ_j a_j^m (x t1^r)_j, c1 t2^m by
/// Σ_j a_j^m λ_j(c1), c2 by 0. Factors may also be finite-type modules, giving
/// an evaluation module of g_fin[t2]. Total d1-depth is capped at `depth`.
class EvaluationTensor : public WeightModule {
 public:
  EvaluationTensor(std::vector<HwPtr> factors, std::vector<Rational> points, long depth);

  std::size_t dim() const override { return basis_.size(); }
  const TorWeight& weight(std::size_t i) const override { return weights_[i]; }
  std::string label(std::size_t i) const override { return basis_.label(i); }
  std::vector<TorElement> generators() const override;
  std::vector<TorElement> raising_generators() const override;
  std::string descriptor() const override;
  bool d2_graded() const override { return false; }

  const std::vector<Rational>& points() const { return points_; }
  const TensorBasis& basis() const { return basis_; }
  long depth_bound() const { return depth_; }
  bool affine() const { return affine_; }
  /// v_{λ_1} ⊗ ... ⊗ v_{λ_k}
  std::size_t top_index() const { return 0; }

 protected:
  MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  TensorBasis basis_;
  std::vector<Rational> points_;
  long depth_;
  bool affine_;
  std::vector<TorWeight> weights_;
};

std::shared_ptr<const EvaluationTensor> evaluation_tensor(std::vector<HwPtr> factors, std::vector<Rational> points,
                                                          long depth);
/// V_tor(λ⃗, a⃗) from affine weights, each factor truncated at `depth`.
std::shared_ptr<const EvaluationTensor> evaluation_tensor(const liecore::AlgebraPtr& g,
                                                          const std::vector<TorWeight>& lambdas,
                                                          std::vector<Rational> points, long depth);

}  // namespace dalie::rep
