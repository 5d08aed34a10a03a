#pragma once

#include <map>
#include <optional>

#include "dalie/rep/module.hpp"

namespace dalie::rep {

/// Irreducible highest-weight module L(λ) over g_fin or g^e_aff, built weight
/// space by weight space: L_μ is spanned by f_j L_{μ+α_j}, and a vector of L_μ
/// (μ ≠ λ) is zero iff all e_i kill it, so each L_μ is realized as the image of
/// its candidates under (e_i)_i. The dual flavour exchanges e_i and f_i and
/// negates the top weight.
///
/// Weights are indexed by k ∈ Z^nodes with μ = top - Σ k_i α_i (top + Σ k_i α_i
/// for the dual); affine modules keep k_0 <= depth.
class HighestWeightModule : public WeightModule {
 public:
  enum class Flavour { finite, affine, affine_dual };

  HighestWeightModule(liecore::AlgebraPtr g, Flavour flavour, const TorWeight& lambda, long depth);

  std::size_t dim() const override { return vectors_.size(); }
  const TorWeight& weight(std::size_t i) const override { return vectors_[i].weight; }
  std::string label(std::size_t i) const override { return vectors_[i].label; }
  std::vector<TorElement> generators() const override;
  std::vector<TorElement> raising_generators() const override;
  std::string descriptor() const override;

  Flavour flavour() const { return flavour_; }
  long depth_bound() const { return depth_; }
  /// d1-depth (k_0) of a basis vector; 0 for finite modules.
  long depth_of(std::size_t i) const;
  /// Top weight (λ, or -λ for the dual).
  const TorWeight& top_weight() const { return vectors_[0].weight; }
  /// Chevalley generators in this module's orientation: up_i kills the top.
  TorElement up(int node) const;
  TorElement down(int node) const;
  const std::vector<int>& nodes() const { return nodes_; }

 protected:
  MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  using Key = std::vector<long>;
  struct Vec {
    Key key;
    TorWeight weight;
    std::string label;
    int origin_node = -1;  // position in nodes_
    std::size_t origin = 0;
    std::vector<SparseVector> up_images;  // per node position
  };
  struct Space {
    std::vector<std::size_t> basis;
    EchelonBasis images;
    std::vector<long> slot_basis;  // insertion slot -> basis index or -1
  };

  void build();
  Key letter_shift(const Letter& l) const;  // change of k under the letter
  bool key_valid(const Key& k) const;
  TorWeight weight_of(const Key& k) const;
  /// Express a concatenated (e_i)-image as a vector of space k.
  SparseVector solve(const Key& k, const SparseVector& image) const;
  SparseVector act_known(const TorElement& e, const SparseVector& v) const;

  Flavour flavour_;
  long depth_;
  int orient_;  // +1 highest weight, -1 lowest weight (dual)
  std::vector<int> nodes_;
  std::vector<Letter> up_letters_, down_letters_;
  std::vector<Vec> vectors_;
  std::map<Key, Space> spaces_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> down_action_;  // (node pos, basis) -> f u
};

/// V_fin(λ); λ dominant.
std::shared_ptr<const HighestWeightModule> irreducible_fin(const liecore::AlgebraPtr& g, const liecore::FinWeight& lambda);
/// V_aff(λ) truncated to d1-depth <= depth; λ ∈ P⁺_aff with λ(c1) > 0.
std::shared_ptr<const HighestWeightModule> irreducible_aff_truncated(const liecore::AlgebraPtr& g,
                                                                     const TorWeight& lambda, long depth);
/// V*_aff(λ): top vector killed by n⁻_aff, h acting by -λ(h).
std::shared_ptr<const HighestWeightModule> dual_aff_truncated(const liecore::AlgebraPtr& g, const TorWeight& lambda,
                                                              long depth);

}  // namespace dalie::rep
