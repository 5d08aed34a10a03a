#include "dalie/rep/identities.hpp"

namespace dalie::rep {

MaybeVector apply_lambda(const WeightModule& m, const toralg::LambdaCoefficient& lam, const SparseVector& v) {
  SparseVector out;
  for (auto& [mono, c] : lam.terms) {
    std::vector<TorElement> word;
    for (std::size_t s = 0; s < mono.size(); ++s)
      for (int e = 0; e < mono[s]; ++e) word.push_back(lam.symbol(static_cast<long>(s) + 1));
    auto img = act_word(m, word, v);
    if (!img) return std::nullopt;
    out.axpy(c, *img);
  }
  return out;
}

IdentitySides garland_sides(const WeightModule& m, const toralg::GarlandIdentity& id, const SparseVector& v) {
  IdentitySides sides;
  sides.lhs = act_word(m, id.lhs.factors, v);
  if (sides.lhs) *sides.lhs *= id.lhs.coeff;
  SparseVector rhs;
  for (auto& t : id.rhs) {
    auto img = apply_lambda(m, t.lambda, v);
    if (img && t.lowering) img = act(m, *t.lowering, *img);
    if (!img) return sides;
    rhs.axpy(t.coeff, *img);
  }
  sides.rhs = rhs;
  return sides;
}

std::vector<Rational> lambda_eigenvalues(const WeightModule& m, const TorElement& h, int sign, long order,
                                         const SparseVector& v) {
  if (v.is_zero()) throw Error("eigenvalue of the zero vector");
  std::size_t lead = *v.leading_index();
  std::vector<Rational> out;
  for (auto& lam : toralg::lambda_series(h, sign, order)) {
    auto img = apply_lambda(m, lam, v);
    if (!img) throw Error("window loss while applying a Λ coefficient");
    Rational c = (*img)[lead] / v[lead];
    if (*img != v * c) throw Error("Λ coefficient does not act by a scalar");
    out.push_back(c);
  }
  return out;
}

std::size_t c1_identity_failures(const WeightModule& m, std::size_t* checked) {
  std::vector<std::size_t> all(m.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return c1_identity_failures(m, all, checked);
}

std::size_t c1_identity_failures(const WeightModule& m, const std::vector<std::size_t>& basis, std::size_t* checked) {
  const auto& g = m.algebra();
  TorElement e0 = toralg::affine_e(g, 0), f0 = toralg::affine_f(g, 0), c1(g, toralg::c1_letter());
  TorElement htheta(g);
  auto ht = g->theta_coroot();
  for (auto& [idx, c] : ht.entries()) htheta.add(toralg::fin_letter(idx), c);
  std::size_t bad = 0, n = 0;
  for (std::size_t i : basis) {
    auto e = SparseVector::unit(i);
    auto ef = act_word(m, {e0, f0}, e), fe = act_word(m, {f0, e0}, e);
    auto hv = act(m, htheta, e), cv = act(m, c1, e);
    if (!ef || !fe || !hv || !cv) continue;
    ++n;
    if (*cv != *ef - *fe + *hv) ++bad;
  }
  if (checked) *checked = n;
  return bad;
}

}  // namespace dalie::rep
