#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "arcv/errors.hpp"

namespace arcv {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw SingularError("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Binomial coefficient C(m, k) as an exact integer; zero outside 0 <= k <= m.
inline Integer binomial(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(long m) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
  return out;
}

}  // namespace arcv
