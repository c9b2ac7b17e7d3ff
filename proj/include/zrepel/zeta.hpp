#pragma once

#include <cmath>
#include <mutex>
#include <vector>

#include "zrepel/complex_interval.hpp"

namespace zrepel {

struct PoleProximity : std::domain_error {
  explicit PoleProximity(const std::string& what) : std::domain_error(what) {}
};

struct EvalParams {
  unsigned truncation = 0;   // N; 0 selects automatically from Im(s)
  unsigned em_order = 14;    // K, number of Bernoulli correction terms
  double target_abs_error = 1e-22;
};

// Exact B_{2j}/(2j)! for the Euler-Maclaurin tail, cached.
inline const Rational& bernoulli_over_factorial(unsigned two_j) {
  static std::mutex mu;
  static std::vector<Rational> cache;  // index m -> B_m/m!
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() <= two_j) {
    static std::vector<Rational> bern{Rational(1)};  // B_0
    while (bern.size() <= two_j) {
      size_t m = bern.size();
      // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
      Rational s(0);
      BigInt c(1);  // C(m+1, j), updated incrementally
      for (size_t j = 0; j < m; ++j) {
        if (j > 0) c = c * BigInt(m + 2 - j) / BigInt(j);
        s += Rational(c) * bern[j];
      }
      bern.push_back(-s / Rational(static_cast<long>(m) + 1));
    }
    Rational fact(1);
    cache.assign(two_j + 1, Rational(0));
    for (unsigned m = 0; m <= two_j; ++m) {
      if (m > 0) fact *= static_cast<long>(m);
      cache[m] = bern[m] / fact;
    }
  }
  return cache[two_j];
}

namespace detail {

// Shared Euler-Maclaurin core for zeta(s, a). With deflate=true computes the
// entire function zeta(s, a) - 1/(s-1); the pole sits solely in the
// (N+a)^{1-s}/(s-1) term and is removed through (e^z - 1)/z.
inline ComplexInterval hurwitz_core(const ComplexInterval& s, const Rational& a, EvalParams params,
                                    bool deflate) {
  if (!(a > 0) || a > 1) throw std::invalid_argument("hurwitz a must be in (0, 1]");
  if (!deflate && s.re.contains(1L) && s.im.contains(0L)) {
    throw PoleProximity("s-box contains the pole at 1");
  }
  double im_hi = std::max(std::abs(s.im.lo_d()), std::abs(s.im.hi_d()));
  unsigned N = params.truncation;
  if (N == 0) N = static_cast<unsigned>(32 + 0.8 * im_hi);
  unsigned K = params.em_order;
  if (mpfr_cmp_si(s.re.lo(), -static_cast<long>(2 * K + 1)) <= 0) {
    throw std::invalid_argument("Re(s) too small for the chosen correction order");
  }

  ComplexInterval minus_s = -s;
  ComplexInterval sum(0L);
  for (unsigned k = 0; k < N; ++k) {
    Interval base = to_interval(Rational(static_cast<long>(k)) + a);
    sum = sum + cpow_real(base, minus_s);
  }

  Interval Na = to_interval(Rational(static_cast<long>(N)) + a);
  Interval logNa = log(Na);
  ComplexInterval one_minus_s = ComplexInterval(1L) - s;

  ComplexInterval t1;
  if (deflate) {
    // (N+a)^{1-s}/(s-1) - 1/(s-1) = -log(N+a) * phi((1-s) log(N+a))
    ComplexInterval z{one_minus_s.re * logNa, one_minus_s.im * logNa};
    t1 = -(expm1_over(z) * logNa);
  } else {
    t1 = cpow_real(Na, one_minus_s) / (s - ComplexInterval(1L));
  }

  ComplexInterval na_minus_s = cpow_real(Na, minus_s);
  ComplexInterval t2 = na_minus_s / 2L;

  // Bernoulli corrections: sum_j B_{2j}/(2j)! * (s)_{2j-1} * (N+a)^{-s-2j+1}
  ComplexInterval em(0L);
  ComplexInterval poch = s;                       // (s)_1
  ComplexInterval pw = na_minus_s * Na;           // (N+a)^{-s+1}
  Interval na2 = pow_si(Na, 2);
  for (unsigned j = 1; j <= K; ++j) {
    pw = pw / na2;  // (N+a)^{-s-2j+1}
    em = em + to_interval(bernoulli_over_factorial(2 * j)) * poch * pw;
    if (j < K) {
      ComplexInterval s2j1{s.re + Interval(static_cast<long>(2 * j - 1)), s.im};
      ComplexInterval s2j{s.re + Interval(static_cast<long>(2 * j)), s.im};
      poch = poch * s2j1 * s2j;
    }
  }

  // Remainder: |B_{2K+2}/(2K+2)!| |(s)_{2K+1}| (N+a)^{-Re(s)-2K-1} |s+2K+1|/(Re(s)+2K+1)
  ComplexInterval p1{s.re + Interval(static_cast<long>(2 * K - 1)), s.im};
  ComplexInterval p2{s.re + Interval(static_cast<long>(2 * K)), s.im};
  ComplexInterval poch_next = poch * p1 * p2;  // (s)_{2K+1}
  Interval sigma = s.re;
  Interval expo = -sigma - Interval(static_cast<long>(2 * K + 1));
  Interval mag = pow(Na, expo);
  ComplexInterval s_shift{s.re + Interval(static_cast<long>(2 * K + 1)), s.im};
  Interval ratio = abs(s_shift) / (sigma + Interval(static_cast<long>(2 * K + 1)));
  Interval rem = abs(to_interval(bernoulli_over_factorial(2 * K + 2))) * abs(poch_next) * mag * ratio;
  Interval rem_hi(0L);
  mpfr_set(rem_hi.hi_raw(), rem.hi(), MPFR_RNDU);

  ComplexInterval result = sum + t1 + t2 + em;
  return result.padded(rem_hi);
}

}  // namespace detail

// Hurwitz zeta(s, a), rigorous enclosure for Re(s) > 0 (and beyond, down to
// Re(s) > -(2K+1)); the enclosure must exclude the pole at s = 1.
inline ComplexInterval hurwitz_zeta(const ComplexInterval& s, const Rational& a,
                                    const EvalParams& params = {}) {
  return detail::hurwitz_core(s, a, params, false);
}

// zeta(s, a) - 1/(s-1): entire in s, usable across s = 1.
inline ComplexInterval hurwitz_zeta_deflated(const ComplexInterval& s, const Rational& a,
                                             const EvalParams& params = {}) {
  return detail::hurwitz_core(s, a, params, true);
}

inline ComplexInterval zeta(const ComplexInterval& s, const EvalParams& params = {}) {
  return hurwitz_zeta(s, Rational(1), params);
}

inline Interval zeta_real(const Interval& s, const EvalParams& params = {}) {
  return zeta(ComplexInterval{s, Interval(0L)}, params).re;
}

}  // namespace zrepel
