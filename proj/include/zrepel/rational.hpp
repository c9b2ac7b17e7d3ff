#pragma once

#include <boost/multiprecision/gmp.hpp>

#include "zrepel/interval.hpp"

namespace zrepel {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Interval to_interval(const BigInt& n) {
  Interval r;
  mpfr_set_z(r.lo_raw(), n.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi_raw(), n.backend().data(), MPFR_RNDU);
  return r;
}

inline Interval to_interval(const Rational& q) {
  Interval r;
  mpfr_set_q(r.lo_raw(), q.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_raw(), q.backend().data(), MPFR_RNDU);
  return r;
}

// |a| <= |b| exactly for rationals, convenience for weight bound checks.
inline bool abs_leq_one(const Rational& q) {
  return boost::multiprecision::abs(numerator(q)) <= denominator(q);
}

}  // namespace zrepel
