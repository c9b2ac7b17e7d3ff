#pragma once

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "zrepel/characters.hpp"
#include "zrepel/rational.hpp"

namespace zrepel {

// The multiplicative machinery attached to an exceptional (real) character:
// a(n) = sum_{d|n} chi1(d), the sieve densities g and h, and the per-prime
// closed forms. Values are exact; g and h are big rationals.
class ExceptionalContext {
 public:
  ExceptionalContext(u64 q, DirichletCharacter chi1) : q_(q), chi1_(std::move(chi1)) {
    if (chi1_.modulus() != q) throw std::invalid_argument("chi1 modulus mismatch");
    if (!chi1_.is_real()) throw std::invalid_argument("chi1 must be real");
  }

  u64 modulus() const { return q_; }
  const DirichletCharacter& chi1() const { return chi1_; }

  // chi1 at a prime, as -1, 0, or 1.
  int chi1_at(u64 p) const { return chi1_(static_cast<i64>(p)).as_int(); }

  // a(p^k) by the closed prime-power form.
  u64 a_prime_power(u64 p, unsigned k) const {
    int c = chi1_at(p);
    if (c == 0) return 1;
    if (c == 1) return k + 1;
    return k % 2 == 0 ? 1 : 0;
  }

  u64 a(u64 n) const {
    u64 r = 1;
    for (auto& pp : zrepel::factorize(n)) r *= a_prime_power(pp.prime, pp.exponent);
    return r;
  }
  u64 a(const Factorization& f) const {
    u64 r = 1;
    for (auto& pp : f) r *= a_prime_power(pp.prime, pp.exponent);
    return r;
  }

  // g(p) = (sum_{k>=1} a(p^k) p^{-k})^{-1} in closed form.
  Rational g_at_prime(u64 p) const {
    BigInt P(p);
    int c = chi1_at(p);
    if (c == 0) return Rational(P - 1);
    if (c == 1) return Rational((P - 1) * (P - 1), 2 * P - 1);
    return Rational(P * P - 1);
  }
  Rational h_at_prime(u64 p) const { return g_at_prime(p) + 1; }

  // h is totally multiplicative; g(n) = h(n) prod_{p|n} (1 - 1/h(p)).
  Rational h(u64 n) const {
    if (n == 0) throw std::invalid_argument("h(0)");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = h_cache_.find(n);
    if (it != h_cache_.end()) return it->second;
    Rational r(1);
    for (auto& pp : zrepel::factorize(n)) {
      Rational hp = h_at_prime(pp.prime);
      if (hp == 0) throw std::domain_error("h vanishes at a prime");
      for (unsigned i = 0; i < pp.exponent; ++i) r *= hp;
    }
    h_cache_.emplace(n, r);
    return r;
  }
  Rational g(u64 n) const {
    if (n == 0) throw std::invalid_argument("g(0)");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = g_cache_.find(n);
    if (it != g_cache_.end()) return it->second;
    Rational r(1);
    for (auto& pp : zrepel::factorize(n)) {
      Rational hp = h_at_prime(pp.prime);
      if (hp == 0) throw std::domain_error("h vanishes at a prime");
      Rational gp = hp - 1;
      for (unsigned i = 0; i + 1 < pp.exponent; ++i) gp *= hp;
      r *= gp;
    }
    g_cache_.emplace(n, r);
    return r;
  }

 private:
  u64 q_;
  DirichletCharacter chi1_;
  mutable std::mutex mu_;
  mutable std::unordered_map<u64, Rational> g_cache_;
  mutable std::unordered_map<u64, Rational> h_cache_;
};

}  // namespace zrepel
