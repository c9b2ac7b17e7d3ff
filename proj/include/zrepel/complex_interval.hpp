#pragma once

#include "zrepel/interval.hpp"
#include "zrepel/rational.hpp"
#include "zrepel/roots_of_unity.hpp"

namespace zrepel {

// Rectangular complex enclosure; containment is preserved by every operation.
struct ComplexInterval {
  Interval re, im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexInterval(long r) : re(r), im(0L) {}
  static ComplexInterval from_decimal(const std::string& r, const std::string& i) {
    return {Interval::from_decimal(r), Interval::from_decimal(i)};
  }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const Interval& b) {
    return {a.re * b, a.im * b};
  }
  friend ComplexInterval operator*(const Interval& b, const ComplexInterval& a) { return a * b; }
  ComplexInterval conj() const { return {re, -im}; }
  Interval norm() const { return pow_si(re, 2) + pow_si(im, 2); }
  friend Interval abs(const ComplexInterval& a) { return sqrt(a.norm()); }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    Interval nb = b.norm();
    if (nb.contains_zero()) throw std::domain_error("complex division by interval containing 0");
    ComplexInterval num = a * b.conj();
    return {num.re / nb, num.im / nb};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const Interval& b) {
    return {a.re / b, a.im / b};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, long b) {
    return {a.re / b, a.im / b};
  }

  bool intersects(const ComplexInterval& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  bool contains(const ComplexInterval& o) const {
    return re.contains(o.re) && im.contains(o.im);
  }

  // Pad both components by [-r, r]; used for truncation remainders.
  ComplexInterval padded(const Interval& r) const {
    Interval pad = hull(-abs_hull_(r), abs_hull_(r));
    return {re + pad, im + pad};
  }

  std::string to_string(int digits = 0) const {
    return re.to_string(digits) + " + i*" + im.to_string(digits);
  }

 private:
  static Interval abs_hull_(const Interval& r) { return abs(r); }
};

inline ComplexInterval cexp(const ComplexInterval& z) {
  Interval m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// base^z for a positive real base.
inline ComplexInterval cpow_real(const Interval& base, const ComplexInterval& z) {
  Interval lb = log(base);
  return cexp(ComplexInterval{z.re * lb, z.im * lb});
}

inline ComplexInterval to_complex(const RootOfUnity& r) {
  auto p = to_complex_enclosure(r);
  return {p.re, p.im};
}

inline ComplexInterval to_complex(const Interval& x) { return {x, Interval(0L)}; }

inline ComplexInterval to_complex(const Rational& q) { return {to_interval(q), Interval(0L)}; }

// (e^z - 1)/z, entire; series for small boxes, direct quotient otherwise.
inline ComplexInterval expm1_over(const ComplexInterval& z) {
  Interval az = abs(z);
  if (mpfr_cmp_d(az.hi(), 2.0) <= 0) {
    const int K = 48;
    ComplexInterval sum(1L);
    ComplexInterval term(1L);
    for (int k = 1; k < K; ++k) {
      term = term * z / static_cast<long>(k + 1);
      sum = sum + term;
    }
    // |tail| <= |z|^K / (K+1)! * 1/(1 - |z|/(K+2))
    Interval tail = pow_si(az, K);
    Interval fact(1L);
    for (int k = 2; k <= K + 1; ++k) fact = fact * static_cast<long>(k);
    tail = tail / fact / (Interval(1L) - az / static_cast<long>(K + 2));
    Interval pad = hull(-tail, tail);
    return {sum.re + pad, sum.im + pad};
  }
  if (z.contains_zero()) throw std::domain_error("expm1_over: wide box containing 0");
  return (cexp(z) - ComplexInterval(1L)) / z;
}

}  // namespace zrepel
