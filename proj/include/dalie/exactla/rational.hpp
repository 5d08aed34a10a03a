#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dalie {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

/// Parses "p", "-p/q" and similar. Throws on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// q^e for any integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dalie
