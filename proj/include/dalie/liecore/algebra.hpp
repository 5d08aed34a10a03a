#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dalie/exactla/rational.hpp"
#include "dalie/exactla/sparse.hpp"

namespace dalie::liecore {

using IntMatrix = std::vector<std::vector<int>>;
/// Coordinates of a root in the simple-root basis.
using RootVector = std::vector<int>;

/// Cartan type and matrix of a finite simple Lie algebra.
class CartanData {
 public:
  /// Supported families: A (n>=1), D (n>=4), E (n=6,7,8).
  static CartanData of_type(char type, int rank);
  /// Arbitrary matrix; validated. `type` is informational.
  static CartanData from_matrix(IntMatrix matrix, char type = '?');
  /// {"type":"A","rank":1}
  static CartanData from_json(const std::string& json_text);

  int rank() const { return static_cast<int>(matrix_.size()); }
  char type() const { return type_; }
  const IntMatrix& matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[i][j]; }
  bool simply_laced() const;
  std::string label() const;

 private:
  CartanData(IntMatrix m, char t) : matrix_(std::move(m)), type_(t) {}
  IntMatrix matrix_;
  char type_;
};

/// Positive roots ordered by (height, lexicographic coordinates).
struct RootSystem {
  std::vector<RootVector> positive;
  std::size_t highest;        // index of θ in `positive`
  std::vector<int> marks;     // h_θ = Σ marks[i] h_i
  std::vector<int> heights;

  const RootVector& theta() const { return positive[highest]; }
  /// Index of a positive root, or -1.
  int index_of(const RootVector& r) const;
};

/// Finite weight: values λ(h_i).
struct FinWeight {
  std::vector<Rational> coords;

  bool dominant() const;
  friend bool operator==(const FinWeight&, const FinWeight&) = default;
  std::string to_string() const;
};

FinWeight fin_weight(std::initializer_list<long> values);

/// Chevalley basis: x⁺_α (0..N-1), x⁻_α (N..2N-1), h_i (2N..2N+n-1), with
/// structure constants from the Frenkel–Kac sign cocycle
///   ε(α_i, α_j) = -1 iff i == j or (i < j and a_ij = -1),
/// realized as E_α = x⁺_α, E_{-α} = -x⁻_α, [E_α, E_β] = ε(α,β) E_{α+β},
/// [E_α, E_{-α}] = -h_α. The invariant form has ⟨x⁺_α, x⁻_α⟩ = 1 and
/// ⟨h_i, h_j⟩ = a_ij, so ⟨h_θ, h_θ⟩ = 2.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(CartanData data);

  const CartanData& cartan() const { return data_; }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return data_.rank(); }
  std::size_t num_positive() const { return roots_.positive.size(); }
  std::size_t dim() const { return 2 * num_positive() + static_cast<std::size_t>(rank()); }

  std::size_t raising(std::size_t root) const { return root; }
  std::size_t lowering(std::size_t root) const { return num_positive() + root; }
  std::size_t cartan_index(int i) const { return 2 * num_positive() + static_cast<std::size_t>(i); }
  std::size_t simple_root_index(int i) const;

  enum class Part { raising, lowering, cartan };
  Part part(std::size_t basis) const;
  /// Root of a basis element as signed coordinates (zero vector for Cartan).
  RootVector root_of(std::size_t basis) const;
  /// α(h_i) for a signed root vector.
  std::vector<int> root_on_coroots(const RootVector& r) const;
  std::string basis_name(std::size_t basis) const;

  /// h_α for a positive root index, as a Cartan element.
  SparseVector coroot(std::size_t root) const;
  /// h_θ
  SparseVector theta_coroot() const { return coroot(roots_.highest); }

  const SparseVector& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
  Rational form_basis(std::size_t a, std::size_t b) const;

  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  Rational form(const SparseVector& x, const SparseVector& y) const;

 private:
  int epsilon(const RootVector& a, const RootVector& b) const;
  CartanData data_;
  RootSystem roots_;
  std::vector<SparseVector> table_;
};

using AlgebraPtr = std::shared_ptr<const ChevalleyAlgebra>;

AlgebraPtr build_algebra(const CartanData& data);

/// Checked entry points: throw when an argument does not belong to `g`.
SparseVector bracket_fin(const ChevalleyAlgebra& g, const SparseVector& x, const SparseVector& y);
Rational invariant_form(const ChevalleyAlgebra& g, const SparseVector& x, const SparseVector& y);

/// μ* = -w₀(μ), computed by reflecting -μ into the dominant chamber.
FinWeight dual_dominant_weight(const CartanData& data, const FinWeight& mu);

/// Weyl dimension formula (simply-laced), used as an oracle for V_fin(λ).
mpz_class weyl_dimension(const ChevalleyAlgebra& g, const FinWeight& lambda);

}  // namespace dalie::liecore
