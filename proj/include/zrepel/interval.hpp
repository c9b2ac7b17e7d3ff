#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zrepel {

// Working precision in bits for newly computed interval endpoints.
// Thread-local so concurrent sweeps can retry at higher precision
// independently; the process-wide default is set once at startup.
class Precision {
 public:
  static long& bits() {
    thread_local long bits_ = default_bits_ref();
    return bits_;
  }
  static void set_bits(long b) {
    if (b < 16 || b > 16384) throw std::invalid_argument("precision bits out of range");
    bits() = b;
  }
  static void set_default_bits(long b) {
    if (b < 16 || b > 16384) throw std::invalid_argument("precision bits out of range");
    default_bits_ref() = b;
    bits() = b;
  }

 private:
  static long& default_bits_ref() {
    static long d = 80;
    return d;
  }
};

// Scoped precision change (used by the inconclusive-retry path).
class ScopedPrecision {
 public:
  explicit ScopedPrecision(long bits) : saved_(Precision::bits()) { Precision::set_bits(bits); }
  ~ScopedPrecision() { Precision::bits() = saved_; }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  long saved_;
};

// A closed real enclosure [lo, hi] with outward rounding: every operation
// returns an interval containing the exact image of its operands.
class Interval {
 public:
  Interval() {
    init_();
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  explicit Interval(long v) {
    init_();
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
  }
  explicit Interval(double v) {
    init_();
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
  }
  Interval(long lo, long hi) {
    init_();
    mpfr_set_si(lo_, lo, MPFR_RNDD);
    mpfr_set_si(hi_, hi, MPFR_RNDU);
    assert(mpfr_cmp(lo_, hi_) <= 0);
  }
  Interval(double lo, double hi) {
    init_();
    mpfr_set_d(lo_, lo, MPFR_RNDD);
    mpfr_set_d(hi_, hi, MPFR_RNDU);
    assert(mpfr_cmp(lo_, hi_) <= 0);
  }

  // Decimal string, outward-rounded. Accepts "1.25", "-3e-7", "inf".
  static Interval from_decimal(const std::string& s) {
    Interval r;
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_nan_p(r.lo_)) {
      throw std::invalid_argument("bad decimal: " + s);
    }
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
  }
  static Interval from_decimal(const std::string& lo, const std::string& hi) {
    Interval r;
    mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU);
    if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::invalid_argument("inverted interval");
    return r;
  }
  // Exact ratio of machine integers.
  static Interval from_ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Interval n(num), d(den);
    return n / d;
  }
  static Interval entire() {
    Interval r;
    mpfr_set_inf(r.lo_, -1);
    mpfr_set_inf(r.hi_, 1);
    return r;
  }

  Interval(const Interval& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, 16);
    mpfr_init2(hi_, 16);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
      mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  Interval& operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_raw() { return lo_; }
  mpfr_t& hi_raw() { return hi_; }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const { return 0.5 * (lo_d() + hi_d()); }

  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
  bool is_nan() const { return mpfr_nan_p(lo_) || mpfr_nan_p(hi_); }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains(long v) const { return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0; }
  bool contains(double v) const { return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0; }
  bool contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
  }
  bool intersects(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
  }

  Interval width() const {
    Interval r;
    mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    return r;
  }
  double width_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return r;
  }
  Interval midpoint() const {
    Interval r;
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_add(r.hi_, lo_, hi_, MPFR_RNDU);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a) {
    Interval r;
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    // Extrema of x*y over a box occur at corners.
    Interval r;
    mpfr_t t;
    mpfr_init2(t, Precision::bits());
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
        fix_zero_inf_(t, as[i], bs[j], -1);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
        fix_zero_inf_(t, as[i], bs[j], 1);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
      if (mpfr_zero_p(b.lo_) && mpfr_sgn(b.hi_) > 0) {
        // [0,d]: one-sided; 1/[0,d] = [1/d, +inf]
        Interval inv;
        mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
        mpfr_set_inf(inv.hi_, 1);
        return a * inv;
      }
      if (mpfr_zero_p(b.hi_) && mpfr_sgn(b.lo_) < 0) {
        Interval inv;
        mpfr_set_inf(inv.lo_, -1);
        mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
        return a * inv;
      }
      return entire();
    }
    Interval inv;
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
  }
  friend Interval operator+(const Interval& a, long b) { return a + Interval(b); }
  friend Interval operator+(long a, const Interval& b) { return Interval(a) + b; }
  friend Interval operator-(const Interval& a, long b) { return a - Interval(b); }
  friend Interval operator-(long a, const Interval& b) { return Interval(a) - b; }
  friend Interval operator*(const Interval& a, long b) { return a * Interval(b); }
  friend Interval operator*(long a, const Interval& b) { return Interval(a) * b; }
  friend Interval operator/(const Interval& a, long b) { return a / Interval(b); }
  friend Interval operator/(long a, const Interval& b) { return Interval(a) / b; }

  // Enclosure comparisons (true only when certain).
  friend bool certainly_less(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi_, b.lo_) < 0;
  }
  friend bool certainly_leq(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi_, b.lo_) <= 0;
  }
  friend bool certainly_greater(const Interval& a, const Interval& b) {
    return certainly_less(b, a);
  }
  friend bool certainly_geq(const Interval& a, const Interval& b) {
    return certainly_leq(b, a);
  }

  friend Interval hull(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval intersect(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::domain_error("empty intersection");
    return r;
  }

  friend Interval abs(const Interval& a) {
    Interval r;
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, Precision::bits());
    mpfr_neg(t, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, a.hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  friend Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("sqrt of negative interval");
    Interval r;
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval exp(const Interval& a) {
    Interval r;
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("log of non-positive interval");
    Interval r;
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval atan(const Interval& a) {
    Interval r;
    mpfr_atan(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  // Integer power; extrema at endpoints, plus 0 for even powers straddling 0.
  friend Interval pow_si(const Interval& a, long n) {
    if (n == 0) return Interval(1L);
    if (n < 0) return Interval(1L) / pow_si(a, -n);
    Interval r;
    mpfr_t t;
    mpfr_init2(t, Precision::bits());
    bool first = true;
    const mpfr_srcptr es[2] = {a.lo_, a.hi_};
    for (int i = 0; i < 2; ++i) {
      mpfr_pow_si(t, es[i], n, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_pow_si(t, es[i], n, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
    if (n % 2 == 0 && a.contains_zero()) {
      mpfr_set_zero(t, 1);
      if (mpfr_cmp(t, r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    }
    mpfr_clear(t);
    return r;
  }

  // x^y for x > 0 via exp(y log x).
  friend Interval pow(const Interval& a, const Interval& y) {
    return exp(y * log(a));
  }

  // cos with critical-point analysis; conservative at multiples of pi.
  friend Interval cos(const Interval& a);
  friend Interval sin(const Interval& a);

  static Interval pi() {
    Interval r;
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  // Outward decimal endpoints: lo rounded down, hi rounded up.
  std::string lo_decimal(int digits = 0) const { return fmt_(lo_, digits, MPFR_RNDD); }
  std::string hi_decimal(int digits = 0) const { return fmt_(hi_, digits, MPFR_RNDU); }
  std::string to_string(int digits = 0) const {
    return "[" + lo_decimal(digits) + ", " + hi_decimal(digits) + "]";
  }

 private:
  void init_() {
    mpfr_init2(lo_, Precision::bits());
    mpfr_init2(hi_, Precision::bits());
  }
  // mpfr yields NaN for 0*inf; the correct enclosure endpoint there is 0.
  static void fix_zero_inf_(mpfr_t t, mpfr_srcptr x, mpfr_srcptr y, int /*dir*/) {
    if (mpfr_nan_p(t) && ((mpfr_zero_p(x) && mpfr_inf_p(y)) || (mpfr_inf_p(x) && mpfr_zero_p(y)))) {
      mpfr_set_zero(t, 1);
    }
  }
  static std::string fmt_(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
    if (digits <= 0) digits = static_cast<int>(mpfr_get_prec(v) * 0.3010) + 2;
    char* s = nullptr;
    char fmtbuf[32];
    std::snprintf(fmtbuf, sizeof fmtbuf, "%%.%dR%ce", digits, rnd == MPFR_RNDD ? 'D' : 'U');
    mpfr_asprintf(&s, fmtbuf, v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_t lo_, hi_;
};

inline Interval cos(const Interval& a) {
  Interval pi_i = Interval::pi();
  Interval w = a.width();
  if (!a.is_finite() || mpfr_cmp_d(w.lo(), 6.2831853071795862) >= 0) {
    return Interval(-1L, 1L);
  }
  Interval r;
  // endpoint values
  mpfr_t cl_d, cl_u, ch_d, ch_u;
  mpfr_init2(cl_d, Precision::bits());
  mpfr_init2(cl_u, Precision::bits());
  mpfr_init2(ch_d, Precision::bits());
  mpfr_init2(ch_u, Precision::bits());
  mpfr_cos(cl_d, a.lo(), MPFR_RNDD);
  mpfr_cos(cl_u, a.lo(), MPFR_RNDU);
  mpfr_cos(ch_d, a.hi(), MPFR_RNDD);
  mpfr_cos(ch_u, a.hi(), MPFR_RNDU);
  mpfr_min(r.lo_raw(), cl_d, ch_d, MPFR_RNDD);
  mpfr_max(r.hi_raw(), cl_u, ch_u, MPFR_RNDU);
  // multiples of pi inside [lo, hi]? conservative index range
  mpfr_t k1, k2;
  mpfr_init2(k1, 64);
  mpfr_init2(k2, 64);
  mpfr_div(k1, a.lo(), pi_i.hi(), MPFR_RNDD);
  mpfr_div(k2, a.hi(), pi_i.lo(), MPFR_RNDU);
  long klo = mpfr_get_si(k1, MPFR_RNDD);  // floor-ish
  long khi = mpfr_get_si(k2, MPFR_RNDU);
  for (long k = klo; k <= khi + 1; ++k) {
    // candidate critical point k*pi; include extremum if k*pi may lie in [lo,hi]
    Interval kp = pi_i * Interval(k);
    bool may_contain = mpfr_cmp(kp.hi(), a.lo()) >= 0 && mpfr_cmp(kp.lo(), a.hi()) <= 0;
    if (may_contain) {
      if ((k % 2 + 2) % 2 == 0) {
        mpfr_set_si(r.hi_raw(), 1, MPFR_RNDU);
      } else {
        mpfr_set_si(r.lo_raw(), -1, MPFR_RNDD);
      }
    }
  }
  mpfr_clears(cl_d, cl_u, ch_d, ch_u, k1, k2, static_cast<mpfr_ptr>(nullptr));
  return r;
}

inline Interval sin(const Interval& a) {
  // sin(x) = cos(x - pi/2)
  Interval half_pi = Interval::pi() / 2L;
  return cos(a - half_pi);
}

}  // namespace zrepel
