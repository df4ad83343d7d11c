#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "toricrep/common.hpp"

namespace toricrep {

// Arbitrary-precision exact scalars. mpq_class keeps every value canonical:
// gcd(|num|, den) = 1 and den > 0 after each operation.
using Int = mpz_class;
using Rational = mpq_class;

inline Int numerator(const Rational& q) { return q.get_num(); }
inline Int denominator(const Rational& q) { return q.get_den(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_from(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(Int(num), Int(den));
  q.canonicalize();
  return q;
}

// Canonical "num/den" form, always including the denominator ("3/1", "-2/5").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "a", "-a", "a/b"; canonicalizes.
inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw InputError("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw InputError("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace toricrep
