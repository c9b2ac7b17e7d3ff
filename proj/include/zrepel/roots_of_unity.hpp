#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zrepel/interval.hpp"

namespace zrepel {

// Exact value of a Dirichlet character: either zero or e(num/den) with the
// angle kept as a reduced fraction of a full turn. Products are exact angle
// additions; conversion to floating intervals happens only at the analytic
// boundary.
struct RootOfUnity {
  bool zero = false;
  std::uint64_t num = 0;  // angle numerator, 0 <= num < den
  std::uint64_t den = 1;

  static RootOfUnity make_zero() { return RootOfUnity{true, 0, 1}; }
  static RootOfUnity one() { return RootOfUnity{false, 0, 1}; }
  static RootOfUnity from_angle(std::uint64_t n, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("zero angle denominator");
    n %= d;
    std::uint64_t g = std::gcd(n == 0 ? d : n, d);
    return RootOfUnity{false, n / g, d / g};
  }

  bool is_one() const { return !zero && num == 0; }
  bool is_minus_one() const { return !zero && den == 2 && num == 1; }
  bool is_real() const { return zero || den <= 2; }
  // For real values: -1, 0, or 1.
  int as_int() const {
    if (zero) return 0;
    if (is_one()) return 1;
    if (is_minus_one()) return -1;
    throw std::domain_error("root of unity is not real");
  }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.zero || b.zero) return make_zero();
    std::uint64_t d = std::lcm(a.den, b.den);
    std::uint64_t n = a.num * (d / a.den) + b.num * (d / b.den);
    return from_angle(n, d);
  }
  RootOfUnity conj() const {
    if (zero) return *this;
    return from_angle(den - num, den);
  }
  bool operator==(const RootOfUnity& o) const {
    if (zero != o.zero) return false;
    if (zero) return true;
    return num == o.num && den == o.den;
  }

  std::string to_string() const {
    if (zero) return "0";
    if (is_one()) return "1";
    if (is_minus_one()) return "-1";
    return "e(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
};

inline RootOfUnity pow(const RootOfUnity& r, std::uint64_t k) {
  if (r.zero) return r;
  // num*k can overflow for large den; reduce with 128-bit product
  unsigned __int128 n = static_cast<unsigned __int128>(r.num) * (k % r.den);
  return RootOfUnity::from_angle(static_cast<std::uint64_t>(n % r.den), r.den);
}

struct ComplexIntervalPair {
  Interval re, im;
};

// e(num/den) = cos(2 pi num/den) + i sin(2 pi num/den), enclosed.
inline ComplexIntervalPair to_complex_enclosure(const RootOfUnity& r) {
  if (r.zero) return {Interval(0L), Interval(0L)};
  if (r.is_one()) return {Interval(1L), Interval(0L)};
  if (r.is_minus_one()) return {Interval(-1L), Interval(0L)};
  if (r.den == 4 && r.num == 1) return {Interval(0L), Interval(1L)};
  if (r.den == 4 && r.num == 3) return {Interval(0L), Interval(-1L)};
  Interval angle = Interval::pi() * 2L * Interval(static_cast<long>(r.num)) /
                   Interval(static_cast<long>(r.den));
  return {cos(angle), sin(angle)};
}

}  // namespace zrepel
