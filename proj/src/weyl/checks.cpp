#include "dalie/weyl/checks.hpp"

#include "json.hpp"

#include "dalie/rep/identities.hpp"

namespace dalie::weyl {

using nlohmann::ordered_json;

namespace {

std::string vector_string(const rep::WeightModule& m, const SparseVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (auto& [i, c] : v.entries()) s += (s.empty() ? "" : " + ") + to_string(c) + "*{" + m.label(i) + "}";
  return s;
}

void expect(RelationReport& rep, const rep::WeightModule& m, const std::string& what, const rep::MaybeVector& got,
            const SparseVector& want) {
  ++rep.checked;
  if (!got) {
    ++rep.lost;
    return;
  }
  if (*got == want) return;
  if (rep.failures++ == 0) rep.witness = what + " = " + vector_string(m, *got) + ", expected " + vector_string(m, want);
}

// n⁺_aff[t2] letters, imaginary ones included
void positive_part(RelationReport& rep, const rep::WeightModule& m, std::size_t v, long max_r1, long max_s) {
  const auto& g = m.algebra();
  for (long r1 = 0; r1 <= max_r1; ++r1)
    for (std::size_t b = 0; b < g->dim(); ++b) {
      bool positive = r1 > 0 || g->part(b) == liecore::ChevalleyAlgebra::Part::raising;
      if (!positive) continue;
      for (long s = 0; s <= max_s; ++s) {
        Letter l = toralg::fin_letter(b, r1, s);
        expect(rep, m, toralg::letter_name(*g, l) + "·v", m.act_basis(l, v), SparseVector{});
      }
    }
}

void cartan_part(RelationReport& rep, const rep::WeightModule& m, std::size_t v, const TorWeight& lambda) {
  const auto& g = m.algebra();
  const auto u = SparseVector::unit(v);
  for (int j = 0; j < g->rank(); ++j) {
    Letter h = toralg::fin_letter(g->cartan_index(j));
    expect(rep, m, toralg::letter_name(*g, h) + "·v", m.act_basis(h, v), u * lambda.fin[j]);
  }
  expect(rep, m, "c1·v", m.act_basis(toralg::c1_letter(), v), u * lambda.c1);
}

void integrability_part(RelationReport& rep, const rep::WeightModule& m, std::size_t v, const TorWeight& lambda) {
  const auto& g = m.algebra();
  for (int i = 0; i <= g->rank(); ++i) {
    long n = lambda.node(*g, i).get_num().get_si();
    std::vector<TorElement> word(static_cast<std::size_t>(n + 1), toralg::affine_f(g, i));
    expect(rep, m, "(f_" + std::to_string(i) + ")^" + std::to_string(n + 1) + "·v",
           rep::act_word(m, word, SparseVector::unit(v)), SparseVector{});
  }
}

ordered_json table_json(const KeyTable& t) {
  ordered_json a = ordered_json::array();
  for (auto& [k, n] : t) a.push_back({{"key", k}, {"dim", n}});
  return a;
}

ordered_json relation_json(const RelationReport& r) {
  return {{"checked", r.checked}, {"failures", r.failures}, {"lost", r.lost}, {"witness", r.witness}};
}

}  // namespace

RelationReport fusion_generator_relations(const rep::WeightModule& m, std::size_t v, const TorWeight& lambda,
                                          long max_r1, long max_s) {
  RelationReport rep;
  const auto& g = m.algebra();
  positive_part(rep, m, v, max_r1, max_s);
  for (long s = 1; s <= max_s; ++s) {
    for (int j = 0; j < g->rank(); ++j) {
      Letter h = toralg::fin_letter(g->cartan_index(j), 0, s);
      expect(rep, m, toralg::letter_name(*g, h) + "·v", m.act_basis(h, v), SparseVector{});
    }
    Letter c = toralg::c1_letter(s);
    expect(rep, m, toralg::letter_name(*g, c) + "·v", m.act_basis(c, v), SparseVector{});
  }
  cartan_part(rep, m, v, lambda);
  integrability_part(rep, m, v, lambda);
  return rep;
}

RelationReport weyl_generator_relations(const rep::WeightModule& m, std::size_t v, const PolyTuple& pi, long max_r1,
                                        long max_s, long order) {
  RelationReport rep;
  const auto& g = m.algebra();
  positive_part(rep, m, v, max_r1, max_s);
  cartan_part(rep, m, v, pi.lambda());
  for (int i = 0; i <= g->rank(); ++i) {
    ++rep.checked;
    auto want = pi.p_plus(i);
    want.resize(static_cast<std::size_t>(order) + 1, 0);
    try {
      auto got = rep::lambda_eigenvalues(m, toralg::affine_h(g, i), 1, order, SparseVector::unit(v));
      if (got != want && rep.failures++ == 0) rep.witness = "Λ⁺(h_" + std::to_string(i) + ", u) differs from π_" + std::to_string(i);
    } catch (const Error& e) {
      if (rep.failures++ == 0) rep.witness = std::string("Λ⁺(h_") + std::to_string(i) + ", u): " + e.what();
    }
  }
  integrability_part(rep, m, v, pi.lambda());
  return rep;
}

KeyTable window_table(const rep::WeightModule& m, const TorWeight& lambda, long depth, long height) {
  KeyTable t;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto k = depth_key(*m.algebra(), lambda, m.weight(i));
    if (k[0] <= depth && key_height(k) <= height) ++t[k];
  }
  return t;
}

KeyTable without_zeros(KeyTable t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

KeyTable convolve(const KeyTable& a, const KeyTable& b, long depth, long height) {
  KeyTable out;
  for (auto& [ka, na] : a)
    for (auto& [kb, nb] : b) {
      std::vector<long> k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      if (k[0] <= depth && key_height(k) <= height && na * nb > 0) out[k] += na * nb;
    }
  return out;
}

std::string key_table_json(const KeyTable& t) { return table_json(t).dump(); }

std::string FactorizationReport::to_json() const {
  ordered_json j;
  j["equal"] = equal;
  j["factors"] = ordered_json::array();
  for (auto& f : factors) j["factors"].push_back(f.to_string());
  j["whole"] = table_json(whole);
  j["product"] = table_json(product);
  j["discrepancy"] = discrepancy;
  return j.dump();
}

FactorizationReport factorization_check(const PolyTuple& pi, const WeylWindow& window) {
  const auto& g = pi.algebra();
  std::map<Rational, std::vector<long>> roots;  // inverse root -> multiplicity per node
  for (int i = 0; i < pi.nodes(); ++i) {
    auto split = split_over_q(pi.pi(i));
    if (!split) throw Error("factorization needs polynomials with rational roots: " + pi.pi(i).to_string());
    for (auto& [c, m] : *split) {
      auto& mult = roots[c];
      mult.resize(static_cast<std::size_t>(pi.nodes()), 0);
      mult[static_cast<std::size_t>(i)] = m;
    }
  }
  FactorizationReport rep;
  rep.whole = without_zeros(weyl_module_truncated(pi, window)->key_table());
  KeyTable product{{std::vector<long>(static_cast<std::size_t>(pi.nodes()), 0), 1}};
  for (auto& [c, mult] : roots) {
    std::vector<SparsePolynomial> polys;
    for (long m : mult) {
      SparsePolynomial lin = SparsePolynomial::constant(Variable::u, 1) + SparsePolynomial::monomial(Variable::u, 1, -c);
      polys.push_back(lin.pow(static_cast<unsigned>(m)));
    }
    rep.factors.emplace_back(g, polys);
    auto t = weyl_module_truncated(rep.factors.back(), window)->key_table();
    product = convolve(product, t, window.depth, window.height);
  }
  rep.product = without_zeros(product);
  rep.equal = rep.whole == rep.product;
  if (!rep.equal) {
    KeyTable all = rep.whole;
    for (auto& [k, n] : rep.product) all[k];
    for (auto& [k, n] : all) {
      std::size_t a = rep.whole.count(k) ? rep.whole.at(k) : 0, b = rep.product.count(k) ? rep.product.at(k) : 0;
      if (a != b) {
        rep.discrepancy = "key " + ordered_json(k).dump() + ": W(π) has " + std::to_string(a) + ", product has " +
                          std::to_string(b);
        break;
      }
    }
  }
  return rep;
}

bool irred_condition(const liecore::ChevalleyAlgebra& g, int i) {
  if (i < 0 || i > g.rank()) throw Error("node index out of range");
  return i == 0 || g.roots().marks[static_cast<std::size_t>(i - 1)] == 1;
}

std::string SurjectionReport::to_json() const {
  ordered_json j;
  j["a"] = dalie::to_string(a);
  j["relations"] = relation_json(relations);
  j["weyl"] = table_json(weyl);
  j["fusion"] = table_json(fusion);
  j["irreducible"] = table_json(irreducible);
  j["fusion_hw"] = fusion_hw;
  j["irreducible_hw"] = irreducible_hw;
  j["fusion_exhausts"] = fusion_exhausts;
  j["dominated"] = dominated;
  j["reducible"] = reducible;
  return j.dump();
}

SurjectionReport surjection_check(const PolyTuple& pi, const WeylWindow& window) {
  const auto& g = pi.algebra();
  std::optional<Rational> a;
  for (int i = 0; i < pi.nodes(); ++i) {
    auto split = split_over_q(pi.pi(i));
    if (!split || split->size() > 1) throw Error("π is not of the form (1 - a u)^n: " + pi.to_string());
    for (auto& [c, m] : *split) {
      if (a && *a != c) throw Error("π is not of the form (1 - a u)^n with a common a: " + pi.to_string());
      a = c;
    }
  }
  if (!a) throw Error("π has no roots");
  SurjectionReport rep;
  rep.a = *a;
  const TorWeight lambda = pi.lambda();
  long k = 0;
  for (int i = 0; i < pi.nodes(); ++i) k += pi.degree(i);
  std::vector<Rational> points;
  for (long j = 1; j <= k; ++j) points.emplace_back(j);
  const long max_degree = k * (window.height + 1);
  auto fused = fusion_W(g, lambda, points, max_degree, window.depth);
  rep.fusion_exhausts = fused->filtered().exhausts();
  auto pulled = pullback_shift(fused, -*a);
  long maxdeg = 0;
  for (int i = 0; i < pi.nodes(); ++i) maxdeg = std::max(maxdeg, pi.degree(i));
  rep.relations = weyl_generator_relations(*pulled, 0, pi, window.depth,
                                           std::min<long>(max_degree, 3), maxdeg + 2);
  rep.weyl = without_zeros(weyl_module_truncated(pi, window)->key_table());
  rep.fusion = without_zeros(window_table(*pulled, lambda, window.depth, window.height));
  auto irr = rep::evaluation_tensor(g, {lambda}, {*a}, window.depth);
  rep.irreducible = without_zeros(window_table(*irr, lambda, window.depth, window.height));
  auto count_hw = [&](const rep::WeightModule& m) {
    std::size_t n = 0;
    for (auto& sp : rep::highest_weight_vectors(m)) {
      auto key = depth_key(*g, lambda, sp.weight);
      if (key[0] <= window.depth && key_height(key) <= window.height) n += sp.vectors.size();
    }
    return n;
  };
  rep.fusion_hw = count_hw(*pulled);
  rep.irreducible_hw = count_hw(*irr);
  rep.dominated = true;
  for (auto& [key, n] : rep.fusion) {
    std::size_t w = rep.weyl.count(key) ? rep.weyl.at(key) : 0;
    std::size_t v = rep.irreducible.count(key) ? rep.irreducible.at(key) : 0;
    rep.dominated = rep.dominated && w >= n;
    rep.reducible = rep.reducible || n > v;
  }
  return rep;
}

std::string GcurReport::to_json() const {
  ordered_json j;
  j["equal"] = equal;
  j["current"] = table_json(current);
  j["full"] = table_json(full);
  return j.dump();
}

GcurReport gcur_agreement(const PolyTuple& pi, const WeylWindow& window) {
  GcurReport rep;
  WeylWindow cur = window, full = window;
  cur.full = false;
  full.full = true;
  rep.current = weyl_module_truncated(pi, cur)->key_table();
  rep.full = weyl_module_truncated(pi, full)->key_table();
  rep.equal = rep.current == rep.full;
  return rep;
}

StabilityReport weyl_stability(const PolyTuple& pi, const WeylWindow& window) {
  StabilityReport rep;
  auto first = weyl_module_truncated(pi, window);
  rep.relation_degree = first->relation_degree();
  rep.table = first->key_table();
  WeylWindow next = window;
  next.relation_degree = rep.relation_degree + 1;
  rep.next = weyl_module_truncated(pi, next)->key_table();
  rep.stable = rep.table == rep.next;
  return rep;
}

}  // namespace dalie::weyl
