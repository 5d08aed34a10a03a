#include "dalie/exactla/polynomial.hpp"

#include <sstream>

namespace dalie {

std::string to_string(Variable v) {
  switch (v) {
    case Variable::t1: return "t1";
    case Variable::t2: return "t2";
    case Variable::u: return "u";
    case Variable::t: return "t";
  }
  return "?";
}

SparsePolynomial::SparsePolynomial(Variable var, Terms terms) : var_(var) {
  for (auto& [e, c] : terms) add_term(e, c);
}

SparsePolynomial SparsePolynomial::constant(Variable var, const Rational& c) {
  SparsePolynomial p(var);
  p.add_term(0, c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(Variable var, long exponent, Rational c) {
  SparsePolynomial p(var);
  p.add_term(exponent, c);
  return p;
}

void SparsePolynomial::check_exponent(long e) const {
  if (e < 0 && var_ != Variable::t1 && var_ != Variable::t2)
    throw Error("negative exponent in non-Laurent variable " + dalie::to_string(var_));
}

void SparsePolynomial::add_term(long e, const Rational& c) {
  if (dalie::is_zero(c)) return;
  check_exponent(e);
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (dalie::is_zero(it->second)) terms_.erase(it);
  }
}

Rational SparsePolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

long SparsePolynomial::degree() const {
  if (terms_.empty()) throw Error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

long SparsePolynomial::low_degree() const {
  if (terms_.empty()) throw Error("low degree of zero polynomial");
  return terms_.begin()->first;
}

Rational SparsePolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto& [e, c] : terms_) acc += c * dalie::pow(x, e);
  return acc;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  if (o.var_ != var_) throw Error("polynomial variable mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  if (o.var_ != var_) throw Error("polynomial variable mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (dalie::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.var_ != b.var_) throw Error("polynomial variable mismatch");
  SparsePolynomial out(a.var_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
  SparsePolynomial out = constant(var_, 1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

SparsePolynomial SparsePolynomial::truncated(long max_exponent) const {
  SparsePolynomial out(var_);
  for (auto& [e, c] : terms_)
    if (e <= max_exponent) out.add_term(e, c);
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << dalie::to_string(var_);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace dalie
