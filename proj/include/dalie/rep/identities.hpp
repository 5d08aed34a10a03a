#pragma once

#include "dalie/rep/module.hpp"
#include "dalie/toralg/garland.hpp"

namespace dalie::rep {

/// Λ±(h, r) applied to v, each monomial as a product of the commuting P_s.
MaybeVector apply_lambda(const WeightModule& m, const toralg::LambdaCoefficient& lam, const SparseVector& v);

struct IdentitySides {
  MaybeVector lhs;
  MaybeVector rhs;
  bool holds() const { return lhs && rhs && *lhs == *rhs; }
};

/// Both sides of a Garland identity applied to v.
IdentitySides garland_sides(const WeightModule& m, const toralg::GarlandIdentity& id, const SparseVector& v);

/// Coefficients of Λ±(h, u) acting on an eigenvector v, up to u^order; throws
/// if some coefficient does not act by a scalar on v.
std::vector<Rational> lambda_eigenvalues(const WeightModule& m, const TorElement& h, int sign, long order,
                                         const SparseVector& v);

/// Operator identity c1 = [x0⁺, x0⁻] + h_θ on every basis vector; returns the
/// number of loss-free basis vectors where it fails, and counts checked ones.
std::size_t c1_identity_failures(const WeightModule& m, std::size_t* checked = nullptr);
/// Same, on the given basis vectors only.
std::size_t c1_identity_failures(const WeightModule& m, const std::vector<std::size_t>& basis,
                                 std::size_t* checked = nullptr);

}  // namespace dalie::rep
