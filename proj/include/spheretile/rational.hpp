#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spheretile {

// All exact scalar arithmetic runs on GMP rationals: canonical lowest terms,
// positive denominator.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline long to_long(const Rational& r) {
  if (r.get_den() != 1) throw std::invalid_argument("not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
  return r.get_num().get_si();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace spheretile
