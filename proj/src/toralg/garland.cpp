#include "dalie/toralg/garland.hpp"

#include <algorithm>
#include <sstream>

namespace dalie::toralg {

namespace {

Rational factorial(long n) {
  Rational f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::string OperatorWord::to_string() const {
  std::ostringstream os;
  os << "(" << coeff.get_str() << ")";
  for (auto& f : factors) os << " [" << f.to_string() << "]";
  return os.str();
}

std::string GarlandIdentity::to_string() const {
  std::ostringstream os;
  os << lhs.to_string() << " = ";
  bool first = true;
  for (auto& t : rhs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.get_str() << ")";
    if (t.lowering) os << " [" << t.lowering->to_string() << "]";
    os << " {" << t.lambda.to_string() << "}";
  }
  return os.str();
}

GarlandIdentity garland_pair(const liecore::AlgebraPtr& g, const AffineRealRoot& beta, long s, int sign,
                             bool degree_variant) {
  if (std::all_of(beta.alpha.begin(), beta.alpha.end(), [](int c) { return c == 0; }))
    throw Error("Garland identity needs a real root");
  if (s < 1) throw Error("Garland identity needs s >= 1");
  if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");

  GarlandIdentity id;
  id.beta = beta;
  id.s = s;
  id.sign = sign;
  id.degree_variant = degree_variant;

  TorElement xp = root_vector_plus(g, beta, sign);
  TorElement xm = root_vector_minus(g, beta);
  TorElement hb = root_coroot(g, beta);
  long raise = degree_variant ? s + 1 : s;
  id.lhs.coeff = 1 / (factorial(raise) * factorial(s + 1));
  id.lhs.factors.assign(raise, xp);
  id.lhs.factors.insert(id.lhs.factors.end(), s + 1, xm);

  auto lambdas = lambda_series(hb, sign, s + 1);
  Rational parity = (s % 2 == 0) ? 1 : -1;
  if (degree_variant) {
    id.rhs.push_back({-parity, std::nullopt, lambdas[s + 1]});
  } else {
    for (long m = 0; m <= s; ++m)
      id.rhs.push_back({parity, root_vector_minus(g, beta, sign * m), lambdas[s - m]});
  }
  return id;
}

}  // namespace dalie::toralg
