#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dalie/exactla/polynomial.hpp"
#include "dalie/rep/weight.hpp"

namespace dalie::weyl {

/// (π_0, ..., π_n): polynomials in u with constant term 1, one per affine node.
class PolyTuple {
 public:
  PolyTuple(liecore::AlgebraPtr g, std::vector<SparsePolynomial> pis);

  const liecore::AlgebraPtr& algebra() const { return g_; }
  const std::vector<SparsePolynomial>& polys() const { return pis_; }
  const SparsePolynomial& pi(int i) const { return pis_.at(static_cast<std::size_t>(i)); }
  int nodes() const { return static_cast<int>(pis_.size()); }
  long degree(int i) const;
  /// λ_π = Σ deg π_i ω_i
  rep::TorWeight lambda() const;
  /// p^±_r(h_i) for r = 0..deg π_i
  std::vector<Rational> p_plus(int i) const;
  std::vector<Rational> p_minus(int i) const;
  /// Eigenvalue of h_i t2^{±r} (r >= 1) on w_π: the power sums of the inverse
  /// roots of π_i^±, read off from -u (π^±)'/π^± = Σ_r c_r u^r.
  Rational power_sum(int i, int sign, long r) const;

  friend bool operator==(const PolyTuple& a, const PolyTuple& b) { return a.pis_ == b.pis_; }
  /// "[1,1-3u+2u^2]"
  std::string to_string() const;

 private:
  liecore::AlgebraPtr g_;
  std::vector<SparsePolynomial> pis_;
  mutable std::map<std::pair<int, int>, std::vector<Rational>> sums_;
};

/// π⁻(u) = u^deg π(u⁻¹), normalized to constant term 1.
SparsePolynomial reversed_normalized(const SparsePolynomial& p);

/// π_{i,a}: π_i = 1 - a u, all others 1.
PolyTuple fundamental_tuple(const liecore::AlgebraPtr& g, int i, const Rational& a);

/// Which defining condition of an integrable quotient failed, and where.
struct PdataRejection {
  int node = 0;
  std::string condition;  // "i" (degree) or "ii" (p⁻ versus p⁺)
  std::string message;
};

using PdataFamily = std::map<long, Rational>;  // r -> p_r(h_i), r >= 1

/// Accepts (λ, p±) iff λ(h_i) = deg π_i and p⁻ is the reversed normalization
/// of p⁺ at every node, where π_i = 1 + Σ_r p⁺_r(h_i) u^r.
std::variant<PolyTuple, PdataRejection> poly_tuple_from_pdata(const liecore::AlgebraPtr& g, const rep::TorWeight& lambda,
                                                              const std::vector<PdataFamily>& p_plus,
                                                              const std::vector<PdataFamily>& p_minus);

/// Inverse roots with multiplicity, π = Π (1 - a u)^m; nullopt unless π splits over Q.
std::optional<std::map<Rational, long>> split_over_q(const SparsePolynomial& p);

}  // namespace dalie::weyl
