#include <random>

#include "dalie/exactla/polynomial.hpp"
#include "dalie/exactla/sparse.hpp"
#include "doctest.h"

using namespace dalie;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> val(-3, 3), zero(0, 2);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (zero(rng) == 0) m.set(r, c, val(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and powers") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow(Rational(0), 0) == 1);
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix::from_dense({{1, 0}, {0, 1}})) == 2);
  CHECK(rank(SparseMatrix(3, 5)) == 0);
  CHECK(rank(SparseMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(SparseMatrix::from_dense({{1, 0}, {0, 1}})).empty());
  auto k = kernel_basis(SparseMatrix::from_dense({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 1);
  CHECK(k[0][1] == -1);
  auto z = kernel_basis(SparseMatrix(2, 2));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == SparseVector::unit(0));
  CHECK(z[1] == SparseVector::unit(1));
}

TEST_CASE("intersect and quotient examples") {
  auto e = [](std::size_t i) { return SparseVector::unit(i); };
  CHECK(intersect_and_quotient_dims({e(0)}, {e(0)}, 1) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(intersect_and_quotient_dims({e(0), e(1)}, {e(1)}, 3) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(intersect_and_quotient_dims({}, {e(0), e(2)}, 3) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK_THROWS_AS(intersect_and_quotient_dims({e(4)}, {}, 3), Error);
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    auto m = random_matrix(rng, rows, cols);
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    for (auto& k : ker) CHECK(m.multiply(k).is_zero());
    // rank is invariant under transposition
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("elimination reproduces its input exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    auto m = random_matrix(rng, rows, cols);
    EchelonBasis e;
    for (std::size_t r = 0; r < rows; ++r) e.insert(m.row(r));
    for (std::size_t r = 0; r < rows; ++r) {
      auto red = e.reduce(m.row(r));
      CHECK(red.remainder.is_zero());
      SparseVector rebuilt;
      for (auto& [k, c] : red.combination.entries()) rebuilt.axpy(c, m.row(k));
      CHECK(rebuilt == m.row(r));
    }
  }
}

TEST_CASE("intersection basis agrees with dimension formula") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_matrix(rng, 3, 5), b = random_matrix(rng, 3, 5);
    std::vector<SparseVector> va, vb;
    for (std::size_t r = 0; r < 3; ++r) {
      va.push_back(a.row(r));
      vb.push_back(b.row(r));
    }
    auto basis = intersection_basis(va, vb);
    auto [inter, quot] = intersect_and_quotient_dims(va, vb, 5);
    CHECK(basis.size() == inter);
    EchelonBasis ea, eb;
    for (auto& v : va) ea.insert(v);
    for (auto& v : vb) eb.insert(v);
    for (auto& v : basis) {
      CHECK(ea.contains(v));
      CHECK(eb.contains(v));
    }
    CHECK(inter + quot == ea.rank());
  }
}

TEST_CASE("polynomial algebra") {
  using P = SparsePolynomial;
  auto t = P::monomial(Variable::t1, 3, 2);
  auto tinv = P::monomial(Variable::t1, -3, make_rational(1, 2));
  CHECK(t * tinv == P::constant(Variable::t1, 1));
  CHECK_THROWS_AS(P::monomial(Variable::u, -1), Error);

  std::mt19937 rng(5);
  auto random_poly = [&] {
    P p(Variable::t2);
    for (int i = 0; i < 4; ++i) p += P::monomial(Variable::t2, static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 9) - 4);
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  auto one_minus_u = P::constant(Variable::u, 1) - P::monomial(Variable::u, 1);
  auto sq = one_minus_u.pow(2);
  CHECK(sq.coefficient(1) == -2);
  CHECK(sq.degree() == 2);
  CHECK(sq.evaluate(1) == 0);
}
