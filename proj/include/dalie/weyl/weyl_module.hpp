#pragma once

#include <map>
#include <memory>

#include "dalie/rep/module.hpp"
#include "dalie/weyl/polytuple.hpp"

namespace dalie::weyl {

using toralg::Letter;
using toralg::TorElement;

/// Affine simple-root coordinates k of λ - μ (μ = λ - Σ k_i α_i), i = 0..n.
std::vector<long> depth_key(const liecore::ChevalleyAlgebra& g, const rep::TorWeight& lambda, const rep::TorWeight& mu);
long key_height(const std::vector<long>& key);

/// Weight window and t2 bounds of a truncated Weyl module.
struct WeylWindow {
  long depth = 2;      // D: α_0-coefficient (d1-depth) of λ_π - μ
  long t2_degree = 2;  // K: |t2 exponent| of each letter in the spanning monomials
  long height = 2;     // H: height of λ_π - μ in affine simple roots
  /// T: |t2 exponent| of the generators applied to relations; < 0 picks
  /// K + max deg π_i + 2.
  long relation_degree = -1;
  /// Full g_tor presentation (t2 exponents of both signs) instead of the
  /// current algebra g_aff[t2].
  bool full = false;
};

/// Graded dimension table keyed by depth_key.
using KeyTable = std::map<std::vector<long>, std::size_t>;

/// Truncation of W_tor(π) (or of W⁺_tor(π) for the current presentation).
///
/// M = U(n⁻) w is realized on PBW monomials in the letters of negative affine
/// roots times t2^k, with an exact normal-ordering action; h ⊗ t2^k acts on w
/// by the power sums of π, n⁺ kills w. The relation submodule
/// N = U(n⁻) U(n⁺) U(h[t2]) {(x⁻_i)^{deg π_i + 1} w} is computed in that order,
/// so in the weight window only the Cartan step needs a t2 cap (relation_degree).
/// Each W_μ is then span(monomials with |k| <= K) modulo N_μ; an action whose
/// image leaves that span returns nullopt.
class WeylModule : public rep::WeightModule {
 public:
  WeylModule(PolyTuple pi, WeylWindow window);
  ~WeylModule() override;

  std::size_t dim() const override;
  const rep::TorWeight& weight(std::size_t i) const override;
  std::string label(std::size_t i) const override;
  std::vector<TorElement> generators() const override;
  std::vector<TorElement> raising_generators() const override;
  std::string descriptor() const override;
  bool d2_graded() const override { return false; }

  const PolyTuple& tuple() const { return pi_; }
  const WeylWindow& window() const { return window_; }
  long relation_degree() const { return relation_degree_; }
  std::size_t top_index() const { return 0; }
  const std::vector<long>& key(std::size_t i) const;
  KeyTable key_table() const;
  /// Largest |t2 exponent| among the basis monomials.
  long max_basis_exponent() const;
  /// dim of the relation space N_μ found in the window at a key.
  std::size_t relation_dim(const std::vector<long>& key) const;
  /// Coordinates of letters[0] ... letters.back() w (last letter first), or
  /// nullopt when it leaves the window or the span of the basis.
  rep::MaybeVector word(const std::vector<Letter>& letters) const;

 protected:
  rep::MaybeVector compute(const Letter& l, std::size_t i) const override;

 private:
  struct Engine;
  PolyTuple pi_;
  WeylWindow window_;
  long relation_degree_;
  std::unique_ptr<Engine> engine_;
};

std::shared_ptr<const WeylModule> weyl_module_truncated(const PolyTuple& pi, const WeylWindow& window);

/// g_aff-constituents read from highest-weight vectors.
struct AffDecomposition {
  std::map<std::vector<long>, std::size_t> multiplicity;  // depth key -> m(μ)
  std::map<std::vector<long>, rep::TorWeight> weights;
  bool loss = false;
  /// λ_π - μ ∈ Q⁺_aff for every constituent (the form used in the proof)
  bool q_reading = true;
  /// λ_π - μ ∈ P⁺_aff for every constituent (the form as printed)
  bool p_reading = true;
  std::size_t top_multiplicity() const;
  std::string to_json() const;
};
AffDecomposition aff_decomposition(const WeylModule& w);

}  // namespace dalie::weyl
