#include <cctype>

#include "dalie/harness/harness.hpp"

namespace dalie::harness {

namespace {

// sum     := ['+'|'-'] product (('+'|'-') product)*
// product := power (('*' power) | ('/' number) | power)*
// power   := primary ['^' number]
// primary := '(' sum ')' | number | 'u'
class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  SparsePolynomial parse() {
    auto p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("polynomial \"" + s_ + "\" at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary() {
    char c = peek();
    return c == '(' || c == 'u' || std::isdigit(static_cast<unsigned char>(c));
  }

  long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("number expected");
    if (pos_ - start > 18) fail("number too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  SparsePolynomial sum() {
    SparsePolynomial out(Variable::u);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      auto p = product();
      out += sign < 0 ? p * Rational(-1) : p;
      first = false;
    }
    return out;
  }

  SparsePolynomial product() {
    auto p = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * power();
      } else if (c == '/') {
        ++pos_;
        long d = number();
        if (d == 0) fail("division by zero");
        p *= Rational(1, d);
      } else if (starts_primary()) {
        p = p * power();
      } else {
        break;
      }
    }
    return p;
  }

  SparsePolynomial power() {
    auto p = primary();
    if (peek() == '^') {
      ++pos_;
      p = p.pow(static_cast<unsigned>(number()));
    }
    return p;
  }

  SparsePolynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto p = sum();
      if (peek() != ')') fail("')' expected");
      ++pos_;
      return p;
    }
    if (c == 'u') {
      ++pos_;
      return SparsePolynomial::monomial(Variable::u, 1);
    }
    return SparsePolynomial::constant(Variable::u, Rational(number()));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text) { return Parser(text).parse(); }

std::vector<SparsePolynomial> parse_polynomial_list(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos || text[first] != '[' || text[last] != ']')
    throw Error("polynomial list must look like [p0,p1,...]: " + text);
  std::vector<SparsePolynomial> out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = first + 1; i < last; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_polynomial(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.find_first_not_of(" \t") != std::string::npos || !out.empty()) out.push_back(parse_polynomial(cur));
  return out;
}

liecore::AlgebraPtr algebra_from_name(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw Error("algebra name like A1 or D4 expected: " + name);
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw Error("");
  } catch (...) {
    throw Error("algebra name like A1 or D4 expected: " + name);
  }
  return liecore::build_algebra(liecore::CartanData::of_type(static_cast<char>(std::toupper(name[0])), rank));
}

}  // namespace dalie::harness
