#pragma once

#include <map>
#include <string>
#include <vector>

#include "dalie/toralg/element.hpp"

namespace dalie::toralg {

/// Coefficient Λ±(h, r) of u^r in exp(-Σ_s h t2^{±s} u^s / s), as a
/// commutative polynomial in the symbols P_s = h t2^{±s}. The symbols commute
/// on every module where c2 acts as zero.
struct LambdaCoefficient {
  /// exponent vector (index s-1 holds the power of P_s, trailing zeros
  /// trimmed) -> coefficient
  using Monomial = std::vector<int>;

  TorElement h;
  int sign = 1;
  long order = 0;
  std::map<Monomial, Rational> terms;

  /// The element P_s = h t2^{sign*s}.
  TorElement symbol(long s) const { return h.shifted(0, sign * s); }
  /// Replaces P_s by values[s-1].
  Rational evaluate(const std::vector<Rational>& values) const;
  std::string to_string() const;
};

/// Λ±(h, r) for r = 0..max_order by the Newton recursion
///   r Λ(r) = -Σ_{s=1}^{r} P_s Λ(r-s),  Λ(0) = 1.
/// h must lie in the affine Cartan h_aff.
std::vector<LambdaCoefficient> lambda_series(const TorElement& h, int sign, long max_order);

/// Coefficients of exp(-Σ_s p_s u^s / s) given scalar power sums p_1..p_R.
std::vector<Rational> lambda_scalar_series(const std::vector<Rational>& power_sums);

}  // namespace dalie::toralg
