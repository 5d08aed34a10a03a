#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dalie/toralg/lambda.hpp"

namespace dalie::toralg {

/// coeff · factors[0] factors[1] ... factors.back(); the last factor acts first.
struct OperatorWord {
  Rational coeff = 1;
  std::vector<TorElement> factors;

  std::string to_string() const;
};

/// Garland identity modulo the left ideal generated by g_tor(>), with divided
/// powers X^(k) = X^k / k!:
///   (x⁺_β t2^{±1})^(s) (x⁻_β)^(s+1)   = (-1)^s     Σ_{m=0}^{s} (x⁻_β t2^{±m}) Λ±(h_β, s-m)
///   (x⁺_β t2^{±1})^(s+1) (x⁻_β)^(s+1) = (-1)^{s+1} Λ±(h_β, s+1)          (degree variant)
struct GarlandIdentity {
  struct Term {
    Rational coeff;
    std::optional<TorElement> lowering;  // absent in the degree variant
    LambdaCoefficient lambda;
  };

  AffineRealRoot beta;
  long s = 1;
  int sign = 1;
  bool degree_variant = false;
  OperatorWord lhs;
  std::vector<Term> rhs;

  std::string to_string() const;
};

GarlandIdentity garland_pair(const liecore::AlgebraPtr& g, const AffineRealRoot& beta, long s, int sign,
                             bool degree_variant = false);

}  // namespace dalie::toralg
