#include <random>

#include "dalie/toralg/garland.hpp"
#include "dalie/toralg/roots.hpp"
#include "doctest.h"

using namespace dalie;
using namespace dalie::toralg;
using liecore::CartanData;

namespace {

liecore::AlgebraPtr sl2() { return liecore::build_algebra(CartanData::of_type('A', 1)); }

// Truncated multivariate series exp(-Σ_s P_s u^s / s) expanded as Σ_k (-X)^k / k!.
// Series are maps u-degree -> polynomial in P_1..P_R (exponent vectors).
using Poly = std::map<std::vector<int>, Rational>;
using Series = std::vector<Poly>;

void trim(std::vector<int>& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      std::vector<int> m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      trim(m);
      out[m] += ca * cb;
    }
  std::erase_if(out, [](auto& kv) { return kv.second == 0; });
  return out;
}

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i <= order; ++i)
    for (std::size_t j = 0; i + j <= order; ++j)
      for (auto& [m, c] : poly_mul(a[i], b[j])) {
        out[i + j][m] += c;
        if (out[i + j][m] == 0) out[i + j].erase(m);
      }
  return out;
}

Series exp_oracle(std::size_t order) {
  Series minus_x(order + 1);
  for (std::size_t s = 1; s <= order; ++s) {
    std::vector<int> m(s, 0);
    m[s - 1] = 1;
    minus_x[s][m] = Rational(-1, static_cast<long>(s));
  }
  Series result(order + 1), power(order + 1);
  result[0][{}] = 1;
  power[0][{}] = 1;
  Rational fact = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    power = series_mul(power, minus_x, order);
    fact *= static_cast<long>(k);
    for (std::size_t i = 0; i <= order; ++i)
      for (auto& [m, c] : power[i]) {
        result[i][m] += c / fact;
        if (result[i][m] == 0) result[i].erase(m);
      }
  }
  return result;
}

TorElement el(const liecore::AlgebraPtr& g, const Letter& l, Rational c = 1) { return TorElement(g, l, c); }

}  // namespace

TEST_CASE("bracket examples") {
  auto g = sl2();
  auto x = g->raising(0), y = g->lowering(0), h = g->cartan_index(0);
  auto b1 = bracket_tor(el(g, fin_letter(x, 1)), el(g, fin_letter(y, -1)));
  CHECK(b1 == el(g, fin_letter(h)) + el(g, c1_letter()));
  auto b2 = bracket_tor(el(g, fin_letter(x, 0, 1)), el(g, fin_letter(y, 0, -1)));
  CHECK(b2 == el(g, fin_letter(h)) + el(g, c2_letter()));
  CHECK(bracket_tor(el(g, d1_letter()), el(g, fin_letter(x, 3, 1))) == el(g, fin_letter(x, 3, 1), 3));
  CHECK(bracket_tor(el(g, c2_letter()), el(g, fin_letter(y, 2, -4))).is_zero());
  // mixed cocycle lands on c1 t2^s
  auto b3 = bracket_tor(el(g, fin_letter(x, 1, 2)), el(g, fin_letter(y, -1, 3)));
  CHECK(b3 == el(g, fin_letter(h, 0, 5)) + el(g, c1_letter(5)));
  CHECK(bracket_tor(el(g, d2_letter()), el(g, c1_letter(4))) == el(g, c1_letter(4), 4));
}

TEST_CASE("random antisymmetry and Jacobi over A1 and A2") {
  for (int rank : {1, 2}) {
    auto g = liecore::build_algebra(CartanData::of_type('A', rank));
    std::mt19937_64 rng(1234 + rank);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_element(g, rng, 3, 2), b = random_element(g, rng, 3, 2), c = random_element(g, rng, 3, 2);
      if (!(bracket_tor(a, b) + bracket_tor(b, a)).is_zero()) ++failures;
      auto jac = bracket_tor(a, bracket_tor(b, c)) + bracket_tor(b, bracket_tor(c, a)) + bracket_tor(c, bracket_tor(a, b));
      if (!jac.is_zero()) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("affine form invariance") {
  for (int rank : {1, 2}) {
    auto g = liecore::build_algebra(CartanData::of_type('A', rank));
    std::mt19937_64 rng(77 + rank);
    auto aff = [&] {
      TorElement e(g);
      for (int k = 0; k < 3; ++k) {
        long r1 = static_cast<long>(rng() % 5) - 2;
        switch (rng() % 5) {
          case 0: e.add(c1_letter(), Rational(static_cast<long>(rng() % 5) - 2)); break;
          case 1: e.add(d1_letter(), Rational(static_cast<long>(rng() % 5) - 2)); break;
          default: e.add(fin_letter(rng() % g->dim(), r1), Rational(static_cast<long>(rng() % 5) - 2));
        }
      }
      return e;
    };
    for (int trial = 0; trial < 300; ++trial) {
      auto a = aff(), b = aff(), c = aff();
      CHECK(form_aff(bracket_tor(a, b), c) + form_aff(b, bracket_tor(a, c)) == 0);
      CHECK(form_aff(a, b) == form_aff(b, a));
    }
  }
}

TEST_CASE("affine Chevalley generators") {
  auto g = liecore::build_algebra(CartanData::of_type('A', 2));
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      auto b = bracket_tor(affine_e(g, i), affine_f(g, j));
      if (i == j) CHECK(b == affine_h(g, i));
      else CHECK(b.is_zero());
    }
  // c1 = h0 + hθ
  auto sum = affine_h(g, 0);
  auto htheta = g->theta_coroot();
  for (auto& [idx, c] : htheta.entries()) sum.add(fin_letter(idx), c);
  CHECK(sum == TorElement(g, c1_letter()));
}

TEST_CASE("root classification") {
  auto g = sl2();
  CHECK(classify_root(*g, {{1}, 0, -5}) == RootClass::positive);
  CHECK(classify_root(*g, {{0}, 0, 3}) == RootClass::imaginary);
  CHECK(classify_root(*g, {{-1}, 0, 2}) == RootClass::negative);
  CHECK(classify_root(*g, {{-1}, 1, 0}) == RootClass::positive);
  CHECK(classify_root(*g, {{0}, -1, 7}) == RootClass::negative);
  CHECK_THROWS_AS(classify_root(*g, {{0}, 0, 0}), Error);
  CHECK_THROWS_AS(classify_root(*g, {{2}, 0, 0}), Error);
}

TEST_CASE("lambda series examples") {
  auto g = sl2();
  TorElement h(g, fin_letter(g->cartan_index(0)));
  auto lam = lambda_series(h, 1, 2);
  CHECK(lam[0].terms == std::map<std::vector<int>, Rational>{{{}, 1}});
  CHECK(lam[1].terms == std::map<std::vector<int>, Rational>{{{1}, -1}});
  CHECK(lam[2].terms == std::map<std::vector<int>, Rational>{{{2}, Rational(1, 2)}, {{0, 1}, Rational(-1, 2)}});
  CHECK(lam[1].symbol(1) == TorElement(g, fin_letter(g->cartan_index(0), 0, 1)));
  CHECK(lambda_series(h, -1, 1)[1].symbol(1) == TorElement(g, fin_letter(g->cartan_index(0), 0, -1)));
  CHECK_THROWS_AS(lambda_series(TorElement(g, fin_letter(g->raising(0))), 1, 2), Error);
}

TEST_CASE("Newton recursion matches the exponential expansion") {
  auto g = sl2();
  TorElement h(g, fin_letter(g->cartan_index(0)));
  auto oracle = exp_oracle(6);
  for (int sign : {1, -1}) {
    auto lam = lambda_series(h, sign, 6);
    for (std::size_t r = 0; r <= 6; ++r) CHECK(lam[r].terms == oracle[r]);
  }
  // scalar version: power sums of roots 1, 2 give (1-u)(1-2u)
  auto sc = lambda_scalar_series({3, 5, 9, 17});
  CHECK(sc == std::vector<Rational>{1, -3, 2, 0, 0});
}

TEST_CASE("Garland identity records") {
  auto g = sl2();
  auto id = garland_pair(g, {{1}, 0}, 1, 1);
  REQUIRE(id.lhs.factors.size() == 3);
  CHECK(id.lhs.factors[0] == TorElement(g, fin_letter(g->raising(0), 0, 1)));
  CHECK(id.lhs.factors[2] == TorElement(g, fin_letter(g->lowering(0))));
  CHECK(id.lhs.coeff == Rational(1, 2));
  REQUIRE(id.rhs.size() == 2);
  CHECK(id.rhs[0].lambda.order == 1);
  CHECK(*id.rhs[1].lowering == TorElement(g, fin_letter(g->lowering(0), 0, 1)));
  auto deg = garland_pair(g, {{1}, 0}, 1, -1, true);
  CHECK(deg.lhs.factors.size() == 4);
  CHECK(deg.rhs.size() == 1);
  CHECK(deg.rhs[0].lambda.order == 2);
  CHECK(deg.rhs[0].lambda.sign == -1);
  auto aff = garland_pair(g, {{-1}, 1}, 2, 1);
  CHECK(aff.rhs[0].lambda.h == TorElement(g, c1_letter()) - TorElement(g, fin_letter(g->cartan_index(0))));
  CHECK_THROWS_AS(garland_pair(g, {{0}, 1}, 1, 1), Error);
}
