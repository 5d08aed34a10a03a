#pragma once

#include <string>

#include "dalie/weyl/fusion.hpp"
#include "dalie/weyl/weyl_module.hpp"

namespace dalie::weyl {

/// Outcome of checking relations on one vector.
struct RelationReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t lost = 0;
  std::string witness;
  bool ok() const { return failures == 0; }
};

/// Defining relations of the fused generator of a fusion product of affine
/// irreducibles with total weight λ: n⁺_aff[t] v = 0 (r1 <= max_r1, t-degree <= max_s),
/// h t^s v = 0 (1 <= s <= max_s), h v = λ(h) v, (f_i)^{λ(h_i)+1} v = 0.
RelationReport fusion_generator_relations(const rep::WeightModule& m, std::size_t v, const TorWeight& lambda,
                                          long max_r1, long max_s);

/// Defining relations of w_π on a vector of a g_aff[t2]-module: n⁺_aff[t2] v = 0,
/// h v = λ_π(h) v, Λ⁺(h_i, r) v = p⁺_r(h_i) v for r <= order, (f_i)^{deg π_i + 1} v = 0.
RelationReport weyl_generator_relations(const rep::WeightModule& m, std::size_t v, const PolyTuple& pi, long max_r1,
                                        long max_s, long order);

/// Keys of a module's weights relative to λ, restricted to a window.
KeyTable window_table(const rep::WeightModule& m, const TorWeight& lambda, long depth, long height);
KeyTable without_zeros(KeyTable t);
/// Σ over k1 + k2 = k, inside the height/depth window.
KeyTable convolve(const KeyTable& a, const KeyTable& b, long depth, long height);

struct FactorizationReport {
  bool equal = false;
  std::vector<PolyTuple> factors;
  KeyTable whole, product;
  std::string discrepancy;
  std::string to_json() const;
};
/// W(π) against W(π_1) ⊗ ... ⊗ W(π_k), π_{j,i} = (1 - a_j⁻¹ u)^{m_ij}.
FactorizationReport factorization_check(const PolyTuple& pi, const WeylWindow& window);

/// i = 0, or m_i = 1 in h_θ = Σ m_i h_i.
bool irred_condition(const liecore::ChevalleyAlgebra& g, int i);

struct SurjectionReport {
  Rational a = 0;
  RelationReport relations;
  KeyTable weyl, fusion, irreducible;
  std::size_t fusion_hw = 0, irreducible_hw = 0;
  bool fusion_exhausts = false;
  bool dominated = false;  // dim W_tor(π)_μ >= dim W(λ_π, a)_μ in the window
  bool reducible = false;  // W(λ_π, a) larger than V_tor(λ_π, a) somewhere
  std::string to_json() const;
};
/// π_i = (1 - a u)^{n_i} for every node. W(λ_π, a) is built from W(λ) with
/// points 1, 2, ... and pulled back with shift -a, which gives Λ⁺ = π.
SurjectionReport surjection_check(const PolyTuple& pi, const WeylWindow& window);

struct GcurReport {
  bool equal = false;
  KeyTable current, full;
  std::string to_json() const;
};
GcurReport gcur_agreement(const PolyTuple& pi, const WeylWindow& window);

/// The window table with relation_degree T and T + 1 agree.
struct StabilityReport {
  bool stable = false;
  long relation_degree = 0;
  KeyTable table, next;
};
StabilityReport weyl_stability(const PolyTuple& pi, const WeylWindow& window);

std::string key_table_json(const KeyTable& t);

}  // namespace dalie::weyl
