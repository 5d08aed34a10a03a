#include <random>

#include "dalie/liecore/algebra.hpp"
#include "doctest.h"

using namespace dalie;
using namespace dalie::liecore;

namespace {

// Jacobi and antisymmetry on all basis triples.
void check_lie_axioms(const ChevalleyAlgebra& g) {
  const std::size_t d = g.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto x = SparseVector::unit(a), y = SparseVector::unit(b);
      CHECK(g.bracket(x, y) == g.bracket(y, x) * Rational(-1));
      CHECK(g.form(x, y) == g.form(y, x));
      for (std::size_t c = 0; c < d; ++c) {
        auto z = SparseVector::unit(c);
        auto jac = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        CHECK(jac.is_zero());
        CHECK(g.form(g.bracket(x, y), z) == g.form(x, g.bracket(y, z)));
      }
    }
}

// sl_{n+1} matrices: E_ij, used to cross-check structure constants up to
// the rescaling x⁺_α ↦ ±E_ij fixed by the simple roots.
using Mat = std::vector<std::vector<Rational>>;

Mat commutator(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat out(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return out;
}

}  // namespace

TEST_CASE("A1 is sl2") {
  auto g = build_algebra(CartanData::of_type('A', 1));
  CHECK(g->dim() == 3);
  auto x = SparseVector::unit(g->raising(0)), y = SparseVector::unit(g->lowering(0)), h = SparseVector::unit(g->cartan_index(0));
  CHECK(g->bracket(x, y) == h);
  CHECK(g->bracket(h, x) == x * Rational(2));
  CHECK(g->bracket(h, y) == y * Rational(-2));
  CHECK(g->roots().marks == std::vector<int>{1});
  CHECK(g->roots().theta() == RootVector{1});
  // normalized form
  CHECK(g->form(h, h) == 2);
  CHECK(g->form(x, y) == 1);
  CHECK(g->form(x, x) == 0);
  check_lie_axioms(*g);
}

TEST_CASE("A2 structure constants match the matrix realization") {
  auto g = build_algebra(CartanData::of_type('A', 2));
  CHECK(g->dim() == 8);
  CHECK(g->num_positive() == 3);
  check_lie_axioms(*g);
  auto a1 = g->raising(g->simple_root_index(0)), a2 = g->raising(g->simple_root_index(1));
  auto sum = g->bracket(SparseVector::unit(a1), SparseVector::unit(a2));
  int theta = g->roots().index_of({1, 1});
  REQUIRE(theta >= 0);
  CHECK(sum.nnz() == 1);
  Rational c = sum[g->raising(theta)];
  CHECK((c == 1 || c == -1));

  // Matrix realization: e1 = E12, e2 = E23, f_i transposes, so
  // [e1, e2] = E13 and [f2, f1] = E31 ... compare the composite brackets.
  auto E = [](int i, int j) {
    Mat m(3, std::vector<Rational>(3, 0));
    m[i][j] = 1;
    return m;
  };
  Mat e13 = commutator(E(0, 1), E(1, 2));
  Mat f13 = commutator(E(2, 1), E(1, 0));
  // [[e1,e2],[f2,f1]] should be h_θ = h1 + h2 in both realizations
  Mat h = commutator(e13, f13);
  CHECK(h[0][0] == 1);
  CHECK(h[2][2] == -1);
  auto f1 = g->lowering(g->simple_root_index(0)), f2 = g->lowering(g->simple_root_index(1));
  auto fsum = g->bracket(SparseVector::unit(f2), SparseVector::unit(f1));
  auto hh = g->bracket(sum, fsum);
  CHECK(hh == g->theta_coroot());
}

TEST_CASE("rank 3 and D4 satisfy the Lie axioms") {
  check_lie_axioms(*build_algebra(CartanData::of_type('A', 3)));
  auto d4 = build_algebra(CartanData::of_type('D', 4));
  CHECK(d4->num_positive() == 12);
  CHECK(d4->roots().marks == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("sampled Jacobi for E6") {
  auto g = build_algebra(CartanData::of_type('E', 6));
  CHECK(g->num_positive() == 36);
  std::mt19937 rng(1);
  for (int t = 0; t < 1000; ++t) {
    auto x = SparseVector::unit(rng() % g->dim()), y = SparseVector::unit(rng() % g->dim()),
         z = SparseVector::unit(rng() % g->dim());
    auto jac = g->bracket(x, g->bracket(y, z)) + g->bracket(y, g->bracket(z, x)) + g->bracket(z, g->bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("[x+_θ, x-_θ] = h_θ and form normalization") {
  for (int n : {1, 2, 3}) {
    auto g = build_algebra(CartanData::of_type('A', n));
    auto t = g->roots().highest;
    CHECK(g->bracket(SparseVector::unit(g->raising(t)), SparseVector::unit(g->lowering(t))) == g->theta_coroot());
    CHECK(g->form(g->theta_coroot(), g->theta_coroot()) == 2);
  }
}

TEST_CASE("Cartan validation") {
  CHECK_THROWS_AS(CartanData::from_matrix({{2, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(CartanData::from_matrix({{2, -1}, {0, 2}}), Error);
  CHECK_THROWS_AS(CartanData::from_matrix({{1}}), Error);
  CHECK_THROWS_AS(build_algebra(CartanData::from_matrix({{2, -2}, {-1, 2}})), Error);
  auto c = CartanData::from_json(R"({"type":"A","rank":2})");
  CHECK(c.rank() == 2);
  CHECK(c.entry(0, 1) == -1);
}

TEST_CASE("dual dominant weight") {
  auto a1 = CartanData::of_type('A', 1), a2 = CartanData::of_type('A', 2), a3 = CartanData::of_type('A', 3);
  CHECK(dual_dominant_weight(a1, fin_weight({3})) == fin_weight({3}));
  CHECK(dual_dominant_weight(a2, fin_weight({1, 0})) == fin_weight({0, 1}));
  CHECK(dual_dominant_weight(a2, fin_weight({0, 0})) == fin_weight({0, 0}));
  CHECK(dual_dominant_weight(a3, fin_weight({2, 1, 0})) == fin_weight({0, 1, 2}));
  CHECK_THROWS_AS(dual_dominant_weight(a2, fin_weight({-1, 0})), Error);
  // involution
  std::mt19937 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto w = fin_weight({static_cast<long>(rng() % 4), static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)});
    CHECK(dual_dominant_weight(a3, dual_dominant_weight(a3, w)) == w);
  }
}

TEST_CASE("Weyl dimension oracle") {
  auto a2 = build_algebra(CartanData::of_type('A', 2));
  CHECK(weyl_dimension(*a2, fin_weight({1, 0})) == 3);
  CHECK(weyl_dimension(*a2, fin_weight({1, 1})) == 8);
  auto a1 = build_algebra(CartanData::of_type('A', 1));
  CHECK(weyl_dimension(*a1, fin_weight({4})) == 5);
}
