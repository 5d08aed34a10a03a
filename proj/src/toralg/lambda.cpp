#include "dalie/toralg/lambda.hpp"

#include <sstream>

namespace dalie::toralg {

namespace {

using Monomial = LambdaCoefficient::Monomial;

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

void add_term(std::map<Monomial, Rational>& terms, Monomial m, const Rational& c) {
  if (is_zero(c)) return;
  trim(m);
  auto [it, inserted] = terms.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

}  // namespace

Rational LambdaCoefficient::evaluate(const std::vector<Rational>& values) const {
  Rational acc = 0;
  for (auto& [m, c] : terms) {
    Rational t = c;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] == 0) continue;
      if (s >= values.size()) throw Error("not enough symbol values to evaluate a Λ coefficient");
      t *= pow(values[s], m[s]);
    }
    acc += t;
  }
  return acc;
}

std::string LambdaCoefficient::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] > 0) os << "*P" << (sign > 0 ? "+" : "-") << (s + 1) << (m[s] > 1 ? "^" + std::to_string(m[s]) : "");
  }
  return os.str();
}

std::vector<LambdaCoefficient> lambda_series(const TorElement& h, int sign, long max_order) {
  if (sign != 1 && sign != -1) throw Error("Λ sign must be +1 or -1");
  if (max_order < 0) throw Error("negative Λ order");
  if (!h.algebra() || !in_affine_cartan(h)) throw Error("Λ series needs an element of the affine Cartan");
  std::vector<LambdaCoefficient> out;
  for (long r = 0; r <= max_order; ++r) {
    LambdaCoefficient lc{h, sign, r, {}};
    if (r == 0) {
      lc.terms[{}] = 1;
    } else {
      for (long s = 1; s <= r; ++s)
        for (auto& [m, c] : out[r - s].terms) {
          Monomial mm = m;
          if (static_cast<long>(mm.size()) < s) mm.resize(s, 0);
          mm[s - 1] += 1;
          add_term(lc.terms, std::move(mm), -c / r);
        }
    }
    out.push_back(std::move(lc));
  }
  return out;
}

std::vector<Rational> lambda_scalar_series(const std::vector<Rational>& power_sums) {
  std::vector<Rational> out{1};
  for (std::size_t r = 1; r <= power_sums.size(); ++r) {
    Rational acc = 0;
    for (std::size_t s = 1; s <= r; ++s) acc -= power_sums[s - 1] * out[r - s];
    out.push_back(acc / static_cast<long>(r));
  }
  return out;
}

}  // namespace dalie::toralg
