#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zrepel {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Prime-exponent pairs sorted by prime; product reconstructs n.
struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};
using Factorization = std::vector<PrimePower>;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = m == 1 ? 0 : 1;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs (standard witness set).
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  // Brent's cycle variant with deterministic restarts.
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

inline void factor_into(u64 n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

inline Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  Factorization out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (n > 1) {
    Factorization rest;
    detail::factor_into(n, rest);
    std::sort(rest.begin(), rest.end(), [](auto& a, auto& b) { return a.prime < b.prime; });
    // merge equal primes from the recursive split
    for (auto& pp : rest) {
      if (!out.empty() && out.back().prime == pp.prime)
        out.back().exponent += pp.exponent;
      else
        out.push_back(pp);
    }
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.prime < b.prime; });
  return out;
}

inline u64 factorization_value(const Factorization& f) {
  u64 n = 1;
  for (auto& pp : f)
    for (unsigned i = 0; i < pp.exponent; ++i) n *= pp.prime;
  return n;
}

inline int mobius(u64 n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  auto f = factorize(n);
  for (auto& pp : f)
    if (pp.exponent > 1) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

inline unsigned omega(u64 n) { return static_cast<unsigned>(factorize(n).size()); }

inline std::vector<u64> divisors(u64 n) {
  auto f = factorize(n);
  std::vector<u64> ds{1};
  for (auto& pp : f) {
    size_t sz = ds.size();
    u64 pe = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pe *= pp.prime;
      for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline u64 euler_phi(u64 n) {
  u64 r = 1;
  for (auto& pp : factorize(n)) {
    u64 pe1 = 1;
    for (unsigned i = 0; i + 1 < pp.exponent; ++i) pe1 *= pp.prime;
    r *= pe1 * (pp.prime - 1);
  }
  return r;
}

// Smallest-prime-factor sieve plus derived tables. One pass, reused by the
// sieve weight construction and the detector sums.
class SmallSieve {
 public:
  explicit SmallSieve(u64 limit) : limit_(limit), spf_(limit + 1, 0) {
    for (u64 i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        primes_.push_back(i);
        for (u64 j = i; j <= limit; j += i)
          if (spf_[j] == 0) spf_[j] = static_cast<u32_>(i);
      }
    }
  }

  u64 limit() const { return limit_; }
  const std::vector<u64>& primes() const { return primes_; }
  u64 smallest_prime_factor(u64 n) const {
    assert(n >= 2 && n <= limit_);
    return spf_[n];
  }
  bool squarefree(u64 n) const {
    assert(n >= 1 && n <= limit_);
    while (n > 1) {
      u64 p = spf_[n];
      n /= p;
      if (n % p == 0) return false;
    }
    return true;
  }
  int mobius(u64 n) const {
    assert(n >= 1 && n <= limit_);
    int sign = 1;
    while (n > 1) {
      u64 p = spf_[n];
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return sign;
  }
  Factorization factorize(u64 n) const {
    assert(n >= 1 && n <= limit_);
    Factorization f;
    while (n > 1) {
      u64 p = spf_[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.push_back({p, e});
    }
    return f;
  }

 private:
  using u32_ = std::uint32_t;
  u64 limit_;
  std::vector<u32_> spf_;
  std::vector<u64> primes_;
};

}  // namespace zrepel
