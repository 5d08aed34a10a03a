#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dalie/liecore/algebra.hpp"

namespace dalie::toralg {

/// One basis element of the extended toroidal algebra:
/// x t1^r1 t2^r2 (x a Chevalley basis element), c1 t2^r2, c2, d1, d2.
struct Letter {
  enum class Kind : std::uint8_t { fin, c1, c2, d1, d2 };
  Kind kind = Kind::fin;
  std::size_t fin = 0;
  long r1 = 0;
  long r2 = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Weight of a letter under h_fin ⊕ d1 ⊕ d2: finite root, δ1 and δ2 parts.
struct TorRoot {
  liecore::RootVector fin;
  long r1 = 0;
  long r2 = 0;

  bool is_zero() const;
  friend auto operator<=>(const TorRoot&, const TorRoot&) = default;
};

/// Sparse linear combination of letters.
class TorElement {
 public:
  using Terms = std::map<Letter, Rational>;

  TorElement() = default;
  explicit TorElement(liecore::AlgebraPtr g) : g_(std::move(g)) {}
  TorElement(liecore::AlgebraPtr g, const Letter& l, Rational c = 1);

  const liecore::AlgebraPtr& algebra() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Letter& l) const;

  void add(const Letter& l, const Rational& c);
  TorElement& operator+=(const TorElement& o);
  TorElement& operator-=(const TorElement& o);
  TorElement& operator*=(const Rational& c);
  friend TorElement operator+(TorElement a, const TorElement& b) { return a += b; }
  friend TorElement operator-(TorElement a, const TorElement& b) { return a -= b; }
  friend TorElement operator*(TorElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const TorElement& a, const TorElement& b) { return a.terms_ == b.terms_; }

  /// Multiplies every fin/c1 letter by t1^dr1 t2^dr2 (c1 only shifts t2).
  TorElement shifted(long dr1, long dr2) const;

  std::string to_string() const;

 private:
  void check_same(const TorElement& o) const;
  liecore::AlgebraPtr g_;
  Terms terms_;
};

std::string letter_name(const liecore::ChevalleyAlgebra& g, const Letter& l);
TorRoot letter_root(const liecore::ChevalleyAlgebra& g, const Letter& l);

/// Bracket of two letters, including the c1 ⊗ t2^s and c2 cocycles.
TorElement bracket_letters(const liecore::AlgebraPtr& g, const Letter& a, const Letter& b);
TorElement bracket_tor(const TorElement& a, const TorElement& b);

/// ⟨·,·⟩_aff on letters with r2 = 0; extended by ⟨c1, d1⟩ = 1.
Rational form_aff(const liecore::ChevalleyAlgebra& g, const Letter& a, const Letter& b);
Rational form_aff(const TorElement& a, const TorElement& b);

/// Letter constructors.
Letter fin_letter(std::size_t basis, long r1 = 0, long r2 = 0);
Letter c1_letter(long r2 = 0);
Letter c2_letter();
Letter d1_letter();
Letter d2_letter();

/// Affine Chevalley data, i = 0..n. With
///   e_0 = x⁻_θ t1, f_0 = x⁺_θ t1⁻¹, h_0 = c1 - h_θ,
/// and e_i = x⁺_{α_i}, f_i = x⁻_{α_i}, h_i for i >= 1. `r2` multiplies by t2^r2.
TorElement affine_e(const liecore::AlgebraPtr& g, int i, long r2 = 0);
TorElement affine_f(const liecore::AlgebraPtr& g, int i, long r2 = 0);
TorElement affine_h(const liecore::AlgebraPtr& g, int i, long r2 = 0);

/// Element of the affine Cartan h_aff = h_fin ⊕ C c1 (fin letters at r1 = r2 = 0
/// of Cartan type, plus c1).
bool in_affine_cartan(const TorElement& h);

/// An affine real root α + r1 δ1, α a nonzero finite root.
struct AffineRealRoot {
  liecore::RootVector alpha;  // signed
  long r1 = 0;
};

/// x⁺_β = x_α t1^r1 and x⁻_β = x_{-α} t1^{-r1}; throws if β is not in R⁺_aff.
TorElement root_vector_plus(const liecore::AlgebraPtr& g, const AffineRealRoot& beta, long r2 = 0);
TorElement root_vector_minus(const liecore::AlgebraPtr& g, const AffineRealRoot& beta, long r2 = 0);
/// h_β = [x⁺_β, x⁻_β]
TorElement root_coroot(const liecore::AlgebraPtr& g, const AffineRealRoot& beta, long r2 = 0);

/// Seeded sparse element with `terms` letters of every kind, loop powers in
/// [-range, range] and small integer coefficients. Portable across standard
/// libraries (no distribution objects).
TorElement random_element(const liecore::AlgebraPtr& g, std::mt19937_64& rng, int terms, long range);

}  // namespace dalie::toralg
