#include "dalie/weyl/polytuple.hpp"

#include <sstream>

namespace dalie::weyl {

namespace {

void check_constant_one(const SparsePolynomial& p) {
  if (p.variable() != Variable::u) throw Error("tuple polynomials must be in u");
  if (p.coefficient(0) != 1) throw Error("tuple polynomial without constant term 1: " + p.to_string());
  if (p.low_degree() < 0) throw Error("tuple polynomial with negative exponent");
}

std::vector<Rational> coefficients(const SparsePolynomial& p) {
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 1, 0);
  for (auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
  return out;
}

// c_r from p_r by Newton's identities: c_r = -r p_r - Σ_{k<r} p_k c_{r-k}
std::vector<Rational> newton_sums(const std::vector<Rational>& p, long order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, 0);
  auto coef = [&](long k) { return k < static_cast<long>(p.size()) ? p[static_cast<std::size_t>(k)] : Rational(0); };
  for (long r = 1; r <= order; ++r) {
    Rational v = -Rational(r) * coef(r);
    for (long k = 1; k < r; ++k) v -= coef(k) * c[static_cast<std::size_t>(r - k)];
    c[static_cast<std::size_t>(r)] = v;
  }
  return c;
}

mpz_class abs_z(const mpz_class& z) { return z < 0 ? mpz_class(-z) : z; }

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs_z(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace

PolyTuple::PolyTuple(liecore::AlgebraPtr g, std::vector<SparsePolynomial> pis) : g_(std::move(g)), pis_(std::move(pis)) {
  if (static_cast<int>(pis_.size()) != g_->rank() + 1) throw Error("tuple needs one polynomial per affine node");
  for (auto& p : pis_) check_constant_one(p);
}

long PolyTuple::degree(int i) const { return pi(i).degree(); }

rep::TorWeight PolyTuple::lambda() const {
  std::vector<long> values;
  for (int i = 0; i < nodes(); ++i) values.push_back(degree(i));
  return rep::TorWeight::affine(*g_, values);
}

std::vector<Rational> PolyTuple::p_plus(int i) const { return coefficients(pi(i)); }
std::vector<Rational> PolyTuple::p_minus(int i) const { return coefficients(reversed_normalized(pi(i))); }

Rational PolyTuple::power_sum(int i, int sign, long r) const {
  if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
  if (r < 1) throw Error("power sums start at r = 1");
  auto& cache = sums_[{i, sign}];
  if (static_cast<long>(cache.size()) <= r) cache = newton_sums(sign > 0 ? p_plus(i) : p_minus(i), 2 * r + 4);
  return cache[static_cast<std::size_t>(r)];
}

std::string PolyTuple::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < nodes(); ++i) os << (i ? "," : "") << pi(i).to_string();
  os << ']';
  return os.str();
}

SparsePolynomial reversed_normalized(const SparsePolynomial& p) {
  check_constant_one(p);
  long d = p.degree();
  Rational lead = p.coefficient(d);
  SparsePolynomial out(Variable::u);
  for (auto& [e, c] : p.terms()) out += SparsePolynomial::monomial(Variable::u, d - e, c / lead);
  return out;
}

PolyTuple fundamental_tuple(const liecore::AlgebraPtr& g, int i, const Rational& a) {
  if (i < 0 || i > g->rank()) throw Error("node index out of range");
  if (a == 0) throw Error("fundamental tuple needs a nonzero point");
  std::vector<SparsePolynomial> pis(static_cast<std::size_t>(g->rank()) + 1,
                                    SparsePolynomial::constant(Variable::u, 1));
  pis[static_cast<std::size_t>(i)] += SparsePolynomial::monomial(Variable::u, 1, -a);
  return PolyTuple(g, pis);
}

std::variant<PolyTuple, PdataRejection> poly_tuple_from_pdata(const liecore::AlgebraPtr& g, const rep::TorWeight& lambda,
                                                              const std::vector<PdataFamily>& p_plus,
                                                              const std::vector<PdataFamily>& p_minus) {
  const int nodes = g->rank() + 1;
  if (static_cast<int>(p_plus.size()) != nodes || static_cast<int>(p_minus.size()) != nodes)
    throw Error("p-data needs one family per affine node");
  std::vector<SparsePolynomial> pis;
  for (int i = 0; i < nodes; ++i) {
    auto build = [&](const PdataFamily& fam) {
      SparsePolynomial p = SparsePolynomial::constant(Variable::u, 1);
      for (auto& [r, c] : fam) {
        if (r < 1) throw Error("p-data indices start at r = 1");
        p += SparsePolynomial::monomial(Variable::u, r, c);
      }
      return p;
    };
    auto plus = build(p_plus[static_cast<std::size_t>(i)]);
    auto minus = build(p_minus[static_cast<std::size_t>(i)]);
    Rational v = lambda.node(*g, i);
    if (v.get_den() != 1 || v < 0)
      return PdataRejection{i, "i", "λ(h_" + std::to_string(i) + ") = " + v.get_str() + " is not a non-negative integer"};
    if (plus.degree() != v.get_num().get_si())
      return PdataRejection{i, "i", "deg π_" + std::to_string(i) + " = " + std::to_string(plus.degree()) +
                                        " but λ(h_" + std::to_string(i) + ") = " + v.get_str()};
    if (!(reversed_normalized(plus) == minus))
      return PdataRejection{i, "ii", "p⁻ at node " + std::to_string(i) + " is " + minus.to_string() + ", expected " +
                                         reversed_normalized(plus).to_string()};
    pis.push_back(plus);
  }
  return PolyTuple(g, pis);
}

std::optional<std::map<Rational, long>> split_over_q(const SparsePolynomial& p) {
  check_constant_one(p);
  // inverse roots of p are the roots of the reversed polynomial
  std::vector<Rational> rev;
  long d = p.degree();
  for (long e = d; e >= 0; --e) rev.push_back(p.coefficient(e));  // rev[k] = coefficient of x^k
  std::map<Rational, long> out;
  auto deflate = [](std::vector<Rational>& q, const Rational& a) {
    // q(x) / (x - a), exact division assumed
    std::vector<Rational> res(q.size() - 1);
    Rational carry = 0;
    for (std::size_t k = q.size() - 1; k-- > 0;) {
      carry = q[k + 1] + carry * a;
      res[k] = carry;
    }
    q = res;
  };
  auto eval = [](const std::vector<Rational>& q, const Rational& x) {
    Rational v = 0;
    for (std::size_t k = q.size(); k-- > 0;) v = v * x + q[k];
    return v;
  };
  while (rev.size() > 1) {
    mpz_class lcm = 1;
    for (auto& c : rev) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Rational s0 = rev.front() * lcm, sn = rev.back() * lcm;
    mpz_class c0 = s0.get_num(), cn = sn.get_num();
    bool found = false;
    for (auto& num : divisors(c0)) {
      for (auto& den : divisors(cn)) {
        for (int s : {1, -1}) {
          Rational a(mpz_class(s * num), den);
          a.canonicalize();
          if (eval(rev, a) == 0) {
            ++out[a];
            deflate(rev, a);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return out;
}

}  // namespace dalie::weyl
