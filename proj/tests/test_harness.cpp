#include "dalie/harness/harness.hpp"
#include "doctest.h"

using namespace dalie;
using namespace dalie::harness;

namespace {

SparsePolynomial poly(std::initializer_list<Rational> coeffs) {
  SparsePolynomial p(Variable::u);
  long e = 0;
  for (auto& c : coeffs) p += SparsePolynomial::monomial(Variable::u, e++, c);
  return p;
}

}  // namespace

TEST_CASE("polynomial parser") {
  CHECK(parse_polynomial("(1-u)^2*(1-2u)") == poly({1, -4, 5, -2}));
  CHECK(parse_polynomial("1-3u+2u^2") == poly({1, -3, 2}));
  CHECK(parse_polynomial("(1-u/2)") == poly({1, Rational(-1, 2)}));
  CHECK(parse_polynomial(" 1 ") == poly({1}));
  CHECK(parse_polynomial("(1-u)(1+u)") == poly({1, 0, -1}));
  CHECK(parse_polynomial("-u+1") == poly({1, -1}));
  CHECK(parse_polynomial("(1 - 3/4 u)^0") == poly({1}));
  for (auto bad : {"", "(1-u", "1-u)", "1-x", "u^", "1/0", "1 -"}) CHECK_THROWS_AS(parse_polynomial(bad), Error);
  auto list = parse_polynomial_list("[1,(1-u)^2]");
  REQUIRE(list.size() == 2);
  CHECK(list[1] == poly({1, -2, 1}));
  CHECK(parse_polynomial_list("[1, (1-u)*(1-u/2), 1-3u]").size() == 3);
  CHECK_THROWS_AS(parse_polynomial_list("1,2"), Error);
  CHECK(algebra_from_name("A2")->rank() == 2);
  CHECK_THROWS_AS(algebra_from_name("2A"), Error);
}

TEST_CASE("check reports") {
  CHECK_THROWS_AS(run_check("no-such-check"), Error);
  CHECK_THROWS_AS(run_check("jacobi", Json::array()), Error);
  CHECK_THROWS_AS(run_check("jacobi", {{"trials", "many"}}), Error);
  auto names = check_names();
  for (auto n : {"jacobi", "form-invariance", "c1-identity", "lambda-newton", "garland", "eig-eigenvalue", "loop-irred",
                 "tensor-irred-condition", "indecomposable-example", "weyl-topdims", "gcur-agreement", "factorization",
                 "irred-theorem", "surjection-reducibility"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (auto& n : names) {
    auto r = run_check(n);
    CHECK_MESSAGE(r.verdict == Verdict::pass, n << ": " << r.witness);
    if (r.verdict == Verdict::fail) CHECK_FALSE(r.witness.empty());
    CHECK(r.to_json()["schema"] == 1);
    CHECK_FALSE(r.to_json().contains("seconds"));
    CHECK(run_check(n).to_json().dump() == r.to_json().dump());
  }
}

TEST_CASE("check examples") {
  auto g = run_check("garland", {{"type", "A1"}, {"s", 2}, {"sign", "+"}, {"a", 3}});
  CHECK(g.verdict == Verdict::pass);
  CHECK(g.details["identities"] == 6);
  auto e = run_check("eig-eigenvalue", {{"lambdas", {"w0", "w0"}}, {"a", {1, 2}}, {"order", 4}});
  CHECK(e.verdict == Verdict::pass);
  CHECK(e.details["series"]["h0+"] == Json({"1", "-3", "2", "0", "0"}));
  auto j = run_check("jacobi", {{"seed", 42}, {"trials", 500}});
  CHECK(j.verdict == Verdict::pass);
  auto w = run_check("weyl-topdims", {{"pi", "[1,1-u]"}, {"depth", 1}, {"height", 1}});
  CHECK(w.verdict == Verdict::pass);
  CHECK_THROWS_AS(run_check("factorization", {{"pi", "[1,1+u^2]"}}), Error);
  CHECK_THROWS_AS(run_check("surjection-reducibility", {{"pi", "[1,(1-u)*(1-2u)]"}}), Error);
}

TEST_CASE("criteria list") {
  auto& list = acceptance_criteria();
  REQUIRE(list.size() == 13);
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(list[i].number == static_cast<int>(i) + 1);
  CHECK(list[9].time_limit == 300);
}
