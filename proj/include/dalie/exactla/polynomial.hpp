#pragma once

#include <map>
#include <string>

#include "dalie/exactla/rational.hpp"

namespace dalie {

enum class Variable { t1, t2, u, t };

std::string to_string(Variable v);

/// Sparse (Laurent) polynomial in one named variable. Negative exponents are
/// only legal for t1 and t2.
class SparsePolynomial {
 public:
  using Terms = std::map<long, Rational>;

  explicit SparsePolynomial(Variable var = Variable::u) : var_(var) {}
  SparsePolynomial(Variable var, Terms terms);

  static SparsePolynomial constant(Variable var, const Rational& c);
  static SparsePolynomial monomial(Variable var, long exponent, Rational c = 1);

  Variable variable() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(long exponent) const;
  /// Highest exponent; throws on the zero polynomial.
  long degree() const;
  long low_degree() const;

  Rational evaluate(const Rational& x) const;

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  SparsePolynomial pow(unsigned e) const;
  /// Keeps only exponents <= max_exponent.
  SparsePolynomial truncated(long max_exponent) const;

  std::string to_string() const;

 private:
  void add_term(long e, const Rational& c);
  void check_exponent(long e) const;

  Variable var_;
  Terms terms_;
};

}  // namespace dalie
