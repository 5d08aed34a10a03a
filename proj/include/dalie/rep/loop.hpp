#pragma once

#include "dalie/rep/tensor.hpp"

namespace dalie::rep {

struct LoopModuleSpec {
  std::vector<liecore::FinWeight> lambdas;
  std::vector<Rational> points;
  Rational b = 0;
  long window = 3;  // |s| <= window

  void validate() const;
};

/// V_aff(λ⃗, a⃗, b) = V_fin(λ_1) ⊗ ... ⊗ V_fin(λ_k) ⊗ C[t, t⁻¹] truncated to
/// |s| <= window: x t1^r acts by Σ_i a_i^r x_i and shifts s by r, d1 by s + b,
/// c1 by 0.
class LoopModule : public WeightModule {
 public:
  LoopModule(const liecore::AlgebraPtr& g, LoopModuleSpec spec);

  std::size_t dim() const override { return tensor_.size() * static_cast<std::size_t>(2 * spec_.window + 1); }
  const TorWeight& weight(std::size_t i) const override { return weights_[i]; }
  std::string label(std::size_t i) const override;
  std::vector<TorElement> generators() const override;
  std::vector<TorElement> raising_generators() const override;
  std::string descriptor() const override;

  const LoopModuleSpec& spec() const { return spec_; }
  std::size_t index(std::size_t tensor_index, long s) const;
  long loop_degree(std::size_t i) const;
  /// v_{λ_1} ⊗ ... ⊗ v_{λ_k} ⊗ t^s
  std::size_t top_index(long s) const { return index(0, s); }

 protected:
  MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  LoopModuleSpec spec_;
  TensorBasis tensor_;
  std::vector<TorWeight> weights_;
};

std::shared_ptr<const LoopModule> loop_module(const liecore::AlgebraPtr& g, const LoopModuleSpec& spec);

struct LoopVerdict {
  bool irreducible = true;
  long period = 0;                  // failing r when reducible
  std::vector<long> generator_degrees;  // ℓ with v_λ ⊗ t^ℓ generating the summands, 0 <= ℓ < r
  std::string to_string() const;
};

/// Exact decision over Q. f(m) = Σ a_i^m λ_i: the only obstructions are r = 1
/// (all λ_i = 0) and r = 2 (nonzero terms cancel in pairs a_j = -a_i with
/// λ_j = λ_i), because two rationals with a root-of-unity ratio differ by ±1.
LoopVerdict loop_irreducibility(const LoopModuleSpec& spec);

/// The four-generator indecomposable sl2 module (basis v0, v1, v2, w0 over
/// C[t1, t1⁻¹]) truncated to |r| <= window. Letters outside
/// {x, y, h, x t1⁻¹, y t1, c1, d1} act through iterated brackets of these.
class IndecomposableExample : public WeightModule {
 public:
  IndecomposableExample(const liecore::AlgebraPtr& sl2, long window);

  std::size_t dim() const override { return static_cast<std::size_t>(4 * (2 * window_ + 1)); }
  const TorWeight& weight(std::size_t i) const override { return weights_[i]; }
  std::string label(std::size_t i) const override;
  std::vector<TorElement> generators() const override;
  std::vector<TorElement> raising_generators() const override;
  std::string descriptor() const override;

  /// kind 0..2 = v_kind, 3 = w0
  std::size_t index(int kind, long r) const;
  long window() const { return window_; }

 protected:
  MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  MaybeVector primitive(const Letter& l, std::size_t i) const;
  MaybeVector commutator(const Letter& a, const Letter& b, std::size_t i) const;
  long window_;
  std::vector<TorWeight> weights_;
};

std::shared_ptr<const IndecomposableExample> example_indecomposable_sl2(long window);

enum class TensorCriterion { met, not_met };

/// Sufficient condition for V_aff(λ) ⊗ V_aff(μ⃗, a⃗) to be irreducible:
/// Σ a_i μ_i ≠ 0 and some α ∈ R⁺_fin with (k+1)λ(c1) < (μ+λ)(h_α) or
/// kλ(c1) < (μ*-λ)(h_α), μ = Σ μ_i.
TensorCriterion tensor_irreducibility_condition(const liecore::ChevalleyAlgebra& g, const TorWeight& lambda,
                                                const std::vector<liecore::FinWeight>& mus,
                                                const std::vector<Rational>& points);

}  // namespace dalie::rep
