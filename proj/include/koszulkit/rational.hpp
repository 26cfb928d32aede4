#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kzk {

// Arbitrary-precision rational scalar. GMP canonical form guarantees lowest
// terms and positive denominator after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Accepts "p" or "p/q" with optional leading '-'. Throws on malformed input
// or zero denominator.
inline Rational rational_from_string(const std::string& s) {
  mpq_class x;
  if (s.empty() || x.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  x.canonicalize();
  return x;
}

// Checked narrowing for values that must fit a machine integer (dimensions,
// deviation entries).
inline long long to_long_checked(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("expected integer, got " + to_string(x));
  if (!x.get_num().fits_slong_p()) throw std::domain_error("integer out of machine range");
  return x.get_num().get_si();
}

}  // namespace kzk
