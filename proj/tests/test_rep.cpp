#include <random>
#include <set>

#include "dalie/rep/identities.hpp"
#include "dalie/rep/loop.hpp"
#include "dalie/toralg/roots.hpp"
#include "doctest.h"

using namespace dalie;
using namespace dalie::rep;
using liecore::CartanData;
using liecore::fin_weight;
using toralg::fin_letter;

namespace {

liecore::AlgebraPtr sl2() { return liecore::build_algebra(CartanData::of_type('A', 1)); }

long partitions(long n) {
  if (n < 0) return 0;
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

std::size_t dim_at(const WeightModule& m, const std::vector<long>& fin, long d1) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto& w = m.weight(i);
    if (w.d1 != d1) continue;
    bool same = true;
    for (std::size_t k = 0; k < fin.size(); ++k) same = same && w.fin[k] == fin[k];
    if (same) ++n;
  }
  return n;
}

SparseVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  SparseVector v;
  for (std::size_t i = 0; i < dim; ++i)
    if (rng() % 3 == 0) v.add(i, Rational(static_cast<long>(rng() % 7) - 3));
  if (v.is_zero()) v.add(rng() % dim, 1);
  return v;
}

// Smallest r >= 1 with top ⊗ t^r in the closure of top ⊗ t^0, or 0.
long brute_period(const LoopModule& m) {
  auto c = submodule_closure(m, {SparseVector::unit(m.top_index(0))});
  for (long r = 1; r <= m.spec().window; ++r)
    if (closure_contains(c, SparseVector::unit(m.top_index(r)))) return r;
  return 0;
}

}  // namespace

TEST_CASE("finite irreducibles") {
  auto g = sl2();
  auto v2 = irreducible_fin(g, fin_weight({2}));
  CHECK(v2->dim() == 3);
  CHECK(character(*v2).size() == 3);
  CHECK(irreducible_fin(g, fin_weight({1}))->dim() == 2);
  auto g2 = liecore::build_algebra(CartanData::of_type('A', 2));
  CHECK(irreducible_fin(g2, fin_weight({1, 0}))->dim() == 3);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      auto w = fin_weight({a, b});
      auto m = irreducible_fin(g2, w);
      CHECK(mpz_class(m->dim()) == liecore::weyl_dimension(*g2, w));
      CHECK(module_axiom_check(*m).failures == 0);
    }
  auto g3 = liecore::build_algebra(CartanData::of_type('A', 3));
  CHECK(mpz_class(irreducible_fin(g3, fin_weight({1, 1, 0}))->dim()) ==
        liecore::weyl_dimension(*g3, fin_weight({1, 1, 0})));
  auto d4 = liecore::build_algebra(CartanData::of_type('D', 4));
  CHECK(irreducible_fin(d4, fin_weight({0, 1, 0, 0}))->dim() == 28);
  CHECK_THROWS_AS(irreducible_fin(g, liecore::FinWeight{{Rational(-1)}}), Error);
}

TEST_CASE("level one sl2 characters match partition counts") {
  auto g = sl2();
  const long D = 5;
  auto basic = irreducible_aff_truncated(g, TorWeight::affine(*g, {1, 0}), D);
  auto other = irreducible_aff_truncated(g, TorWeight::affine(*g, {0, 1}), D);
  for (long n = 0; n <= D; ++n)
    for (long m = -3; m <= 3; ++m) {
      CHECK(dim_at(*basic, {2 * m}, -n) == static_cast<std::size_t>(partitions(n - m * m)));
      CHECK(dim_at(*other, {1 + 2 * m}, -n) == static_cast<std::size_t>(partitions(n - m * m - m)));
    }
  // depth 0, 1, 2 along the weight-zero string
  auto d2 = irreducible_aff_truncated(g, TorWeight::affine(*g, {1, 0}), 2);
  CHECK(dim_at(*d2, {0}, 0) == 1);
  CHECK(dim_at(*d2, {0}, -1) == 1);
  CHECK(dim_at(*d2, {0}, -2) == 2);
  CHECK(highest_weight_vectors(*d2).size() == 1);
}

TEST_CASE("affine irreducible relations and truncation") {
  auto g = sl2();
  auto m = irreducible_aff_truncated(g, TorWeight::affine(*g, {1, 0}), 2);
  auto v = SparseVector::unit(0);
  auto f0 = toralg::affine_f(g, 0);
  CHECK(!act(*m, f0, v)->is_zero());
  CHECK(act_word(*m, {f0, f0}, v)->is_zero());
  CHECK(act(*m, toralg::affine_f(g, 1), v)->is_zero());
  // D = 0 is the finite top
  auto top = irreducible_aff_truncated(g, TorWeight::affine(*g, {1, 2}), 0);
  CHECK(top->dim() == 3);
  // loss outside the window
  CHECK_FALSE(m->act_basis(fin_letter(g->raising(0), -3), 0).has_value());
  auto ax = module_axiom_check(*m);
  CHECK(ax.failures == 0);
  CHECK(ax.checked > 0);
  CHECK(grading_violations(*m) == 0);
  CHECK_THROWS_AS(irreducible_aff_truncated(g, TorWeight::affine(*g, {0, 0}), 1), Error);
  CHECK_THROWS_AS(irreducible_aff_truncated(g, TorWeight::affine(*g, {-1, 2}), 1), Error);
  // a rank-2 level-2 module
  auto g2 = liecore::build_algebra(CartanData::of_type('A', 2));
  auto m2 = irreducible_aff_truncated(g2, TorWeight::affine(*g2, {1, 1, 0}), 2);
  CHECK(module_axiom_check(*m2).failures == 0);
  CHECK(c1_identity_failures(*m2) == 0);
}

TEST_CASE("dual affine module") {
  auto g = sl2();
  auto lam = TorWeight::affine(*g, {1, 0});
  auto m = irreducible_aff_truncated(g, lam, 2);
  auto d = dual_aff_truncated(g, lam, 2);
  std::map<TorWeight, std::size_t> negated;
  for (auto& [w, n] : character(*m)) negated[-w] = n;
  CHECK(character(*d) == negated);
  CHECK(d->weight(0).c1 == -1);
  for (int i = 0; i <= 1; ++i) CHECK(act(*d, toralg::affine_f(g, i), SparseVector::unit(0))->is_zero());
  CHECK(module_axiom_check(*d).failures == 0);
}

TEST_CASE("finite tensor highest weight vectors") {
  auto g = sl2();
  auto v1 = irreducible_fin(g, fin_weight({1}));
  auto t = evaluation_tensor({v1, v1}, {1, 1}, 0);
  auto hw = highest_weight_vectors(*t);
  REQUIRE(hw.size() == 2);
  std::set<Rational> weights;
  for (auto& s : hw) {
    CHECK(s.vectors.size() == 1);
    weights.insert(s.weight.fin[0]);
  }
  CHECK(weights == std::set<Rational>{0, 2});
  auto ch = character(*v1);
  CHECK(ch.size() == 2);
  CHECK(character_json(*v1).find("\"dim\":2") != std::string::npos);
}

TEST_CASE("loop module actions") {
  auto g = sl2();
  auto m = loop_module(g, {{fin_weight({1})}, {1}, 0, 3});
  CHECK(m->weight(m->top_index(3)).d1 == 3);
  auto two = loop_module(g, {{fin_weight({1}), fin_weight({1})}, {1, -1}, 0, 3});
  // (y t1)(v ⊗ v ⊗ t^0) = (y v ⊗ v - v ⊗ y v) ⊗ t^1
  auto img = *act(*two, TorElement(g, fin_letter(g->lowering(0), 1)), SparseVector::unit(two->top_index(0)));
  CHECK(img.nnz() == 2);
  Rational sum = 0;
  for (auto& [i, c] : img.entries()) {
    CHECK(two->loop_degree(i) == 1);
    sum += c;
  }
  CHECK(sum == 0);
  CHECK(act(*two, TorElement(g, toralg::c1_letter()), SparseVector::unit(5))->is_zero());
  CHECK(module_axiom_check(*two).failures == 0);
  CHECK(grading_violations(*two) == 0);
  CHECK_THROWS_AS(loop_module(g, {{fin_weight({1}), fin_weight({1})}, {1, 1}, 0, 3}), Error);
  CHECK_THROWS_AS(loop_module(g, {{fin_weight({1})}, {0}, 0, 3}), Error);
}

TEST_CASE("loop irreducibility verdicts") {
  CHECK(loop_irreducibility({{fin_weight({1})}, {2}, 0, 3}).irreducible);
  auto red = loop_irreducibility({{fin_weight({1}), fin_weight({1})}, {1, -1}, 0, 3});
  CHECK_FALSE(red.irreducible);
  CHECK(red.period == 2);
  CHECK(red.generator_degrees == std::vector<long>{0, 1});
  auto triv = loop_irreducibility({{fin_weight({0})}, {1}, 0, 3});
  CHECK_FALSE(triv.irreducible);
  CHECK(triv.period == 1);
}

TEST_CASE("loop irreducibility agrees with brute-force closures") {
  auto g = sl2();
  const std::vector<Rational> pts{1, -1, 2, -2};
  std::vector<LoopModuleSpec> specs;
  for (long l = 0; l <= 2; ++l)
    for (auto& a : pts) specs.push_back({{fin_weight({l})}, {a}, 0, 3});
  for (long l1 = 0; l1 <= 2; ++l1)
    for (long l2 = 0; l2 <= 2; ++l2)
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
          if (i != j) specs.push_back({{fin_weight({l1}), fin_weight({l2})}, {pts[i], pts[j]}, 0, 3});
  for (auto& spec : specs) {
    auto verdict = loop_irreducibility(spec);
    auto m = loop_module(g, spec);
    long p = brute_period(*m);
    if (verdict.irreducible) CHECK(p == 1);
    else if (verdict.period == 2) CHECK(p == 2);
    else CHECK(p == 0);
  }
}

TEST_CASE("period-two summands") {
  auto g = sl2();
  auto m = loop_module(g, {{fin_weight({1}), fin_weight({1})}, {1, -1}, 0, 3});
  auto even = submodule_closure(*m, {SparseVector::unit(m->top_index(0))});
  auto odd = submodule_closure(*m, {SparseVector::unit(m->top_index(1))});
  auto [inter, rest] = intersect_and_quotient_dims(even.basis, odd.basis, m->dim());
  CHECK(inter == 0);
  for (long r = -3; r <= 3; ++r) {
    CHECK(closure_contains(even, SparseVector::unit(m->top_index(r))) == (r % 2 == 0));
    CHECK(closure_contains(odd, SparseVector::unit(m->top_index(r))) == (r % 2 != 0));
  }
  // together they exhaust the window
  CHECK(even.dim() + odd.dim() == m->dim());
}

TEST_CASE("indecomposable example") {
  auto m = example_indecomposable_sl2(3);
  const auto& g = m->algebra();
  auto x = TorElement(g, fin_letter(g->raising(0)));
  CHECK(*act(*m, x, SparseVector::unit(m->index(1, 0))) == SparseVector::unit(m->index(0, 0), 2));
  auto xt = TorElement(g, fin_letter(g->raising(0), -1));
  CHECK(act(*m, xt, SparseVector::unit(m->index(0, 2)))->is_zero());
  auto v1w0 = SparseVector::unit(m->index(1, 0)) + SparseVector::unit(m->index(3, 0));
  CHECK(*act(*m, xt, SparseVector::unit(m->index(2, 1))) == v1w0);
  auto w = submodule_closure(*m, {SparseVector::unit(m->index(3, 0))});
  CHECK(w.dim() == 1);
  auto all = submodule_closure(*m, {SparseVector::unit(m->index(0, 0))});
  CHECK(all.dim() == m->dim());
  CHECK(module_axiom_check(*m).failures == 0);
  CHECK(grading_violations(*m) == 0);
  CHECK(c1_identity_failures(*m) == 0);
  CHECK(endomorphism_algebra_is_local(endomorphisms(*m), m->dim()));
}

TEST_CASE("endomorphisms detect decomposable modules") {
  auto g = sl2();
  auto v1 = irreducible_fin(g, fin_weight({1}));
  auto t = evaluation_tensor({v1, v1}, {1, 1}, 0);
  CHECK_FALSE(endomorphism_algebra_is_local(endomorphisms(*t), t->dim()));
  CHECK(endomorphism_algebra_is_local(endomorphisms(*v1), v1->dim()));
}

TEST_CASE("evaluation tensor") {
  auto g = sl2();
  auto w0 = TorWeight::affine(*g, {1, 0}), w1 = TorWeight::affine(*g, {0, 1});
  auto single = evaluation_tensor(g, {w1}, {3}, 2);
  auto aff = irreducible_aff_truncated(g, w1, 2);
  CHECK(character(*single) == character(*aff));
  auto m = evaluation_tensor(g, {w0, w1}, {2, -3}, 2);
  CHECK(module_axiom_check(*m).failures == 0);
  CHECK(grading_violations(*m) == 0);
  CHECK(c1_identity_failures(*m) == 0);
  CHECK(act(*m, TorElement(g, toralg::c2_letter()), SparseVector::unit(3))->is_zero());
  // g_tor(>) kills the top
  auto top = SparseVector::unit(m->top_index());
  for (std::size_t b = 0; b < g->dim(); ++b)
    for (long r1 = 0; r1 <= 2; ++r1)
      for (long r2 = -2; r2 <= 2; ++r2) {
        Letter l = fin_letter(b, r1, r2);
        auto root = toralg::letter_root(*g, l);
        if (root.is_zero() || toralg::classify_root(*g, root) != toralg::RootClass::positive) continue;
        auto img = act(*m, TorElement(g, l), top);
        REQUIRE(img);
        CHECK(img->is_zero());
      }
  // Λ eigenvalues Π (1 - a_j^{±1} u)^{λ_j(h_i)}
  for (int sign : {1, -1})
    for (int i = 0; i <= 1; ++i) {
      auto eig = lambda_eigenvalues(*m, toralg::affine_h(g, i), sign, 4, top);
      Rational a = i == 0 ? Rational(2) : Rational(-3);
      if (sign < 0) a = 1 / a;
      CHECK(eig == std::vector<Rational>{1, -a, 0, 0, 0});
    }
  CHECK_THROWS_AS(act(*m, TorElement(g, toralg::d2_letter()), top), Error);
}

TEST_CASE("Garland identities on evaluation modules") {
  auto g = sl2();
  auto w1 = TorWeight::affine(*g, {0, 1});
  for (Rational a : {Rational(1), Rational(2), Rational(-3)}) {
    auto m = evaluation_tensor(g, {w1}, {a}, 4);
    auto top = SparseVector::unit(m->top_index());
    for (auto beta : {toralg::AffineRealRoot{{1}, 0}, toralg::AffineRealRoot{{1}, 1}, toralg::AffineRealRoot{{-1}, 1}})
      for (long s = 1; s <= 3; ++s)
        for (int sign : {1, -1})
          for (bool deg : {false, true}) {
            auto sides = garland_sides(*m, toralg::garland_pair(g, beta, s, sign, deg), top);
            CHECK(sides.holds());
          }
  }
}

TEST_CASE("evaluation tensor irreducibility") {
  auto g = sl2();
  auto w0 = TorWeight::affine(*g, {1, 0});
  auto distinct = evaluation_tensor(g, {w0, w0}, {1, 2}, 2);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    auto c = submodule_closure(*distinct, {random_vector(rng, distinct->dim())});
    CHECK(c.dim() == distinct->dim());
  }
  auto equal = evaluation_tensor(g, {w0, w0}, {1, 1}, 2);
  auto hw = highest_weight_vectors(*equal);
  REQUIRE(hw.size() >= 2);
  auto c = submodule_closure(*equal, {hw.back().vectors[0]});
  CHECK(c.dim() < equal->dim());
}

TEST_CASE("tensor irreducibility condition") {
  auto g = sl2();
  auto w0 = TorWeight::affine(*g, {1, 0});
  CHECK(tensor_irreducibility_condition(*g, w0, {fin_weight({2})}, {5}) == TensorCriterion::met);
  CHECK(tensor_irreducibility_condition(*g, w0, {fin_weight({0})}, {5}) == TensorCriterion::not_met);
  CHECK(tensor_irreducibility_condition(*g, w0, {fin_weight({1})}, {5}) == TensorCriterion::not_met);
}
