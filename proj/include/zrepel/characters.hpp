#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "zrepel/integers.hpp"
#include "zrepel/roots_of_unity.hpp"

namespace zrepel {

struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(u64 q, u64 phi, u64 cap)
      : std::runtime_error("phi(" + std::to_string(q) + ") = " + std::to_string(phi) +
                           " exceeds enumeration cap " + std::to_string(cap) +
                           "; use targeted constructors") {}
};

// Multiplicative structure of (Z/q)^*: cyclic components via CRT, with the
// two-generator convention <-1, 5> at powers of 2 >= 8. Discrete-log tables
// are built eagerly so evaluation is pure table lookup afterwards.
class UnitGroup {
 public:
  struct Component {
    u64 part;                     // prime power p^k this component lives in
    u64 generator;                // generator of the cyclic factor
    u64 order;                    // size of the cyclic factor
    std::vector<std::uint32_t> dlog;  // residue mod part -> exponent (sentinel if non-unit)
  };
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

  static std::shared_ptr<const UnitGroup> for_modulus(u64 q) {
    static std::mutex mu;
    static std::map<u64, std::shared_ptr<const UnitGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto g = std::shared_ptr<const UnitGroup>(new UnitGroup(q));
    cache.emplace(q, g);
    return g;
  }

  u64 modulus() const { return q_; }
  u64 phi() const { return phi_; }
  u64 exponent() const { return exponent_; }  // lcm of component orders
  const std::vector<Component>& components() const { return comps_; }

  // Exponent vector of n on the generators; false if gcd(n, q) > 1.
  bool decompose(u64 n, std::vector<u64>& out) const {
    out.resize(comps_.size());
    n %= q_;
    if (q_ == 1) return true;
    if (std::gcd(n, q_) != 1) return false;
    for (size_t i = 0; i < comps_.size(); ++i) {
      std::uint32_t e = comps_[i].dlog[n % comps_[i].part];
      if (e == kNoLog) return false;
      out[i] = e;
    }
    return true;
  }

 private:
  explicit UnitGroup(u64 q) : q_(q) {
    if (q == 0) throw std::invalid_argument("modulus must be positive");
    phi_ = euler_phi(q);
    auto fact = zrepel::factorize(q);
    for (auto& pp : fact) {
      if (pp.prime == 2) {
        build_two_part(pp.exponent);
      } else {
        build_odd_part(pp.prime, pp.exponent);
      }
    }
    exponent_ = 1;
    for (auto& c : comps_) exponent_ = std::lcm(exponent_, c.order);
  }

  void build_odd_part(u64 p, unsigned k) {
    u64 pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    u64 ord = pk / p * (p - 1);
    u64 g = primitive_root_mod_pk(p, k, pk);
    comps_.push_back(make_cyclic(pk, g, ord));
  }

  void build_two_part(unsigned k) {
    if (k == 1) return;  // (Z/2)^* trivial
    u64 pk = u64{1} << k;
    if (k == 2) {
      comps_.push_back(make_cyclic(4, 3, 2));
      return;
    }
    // <-1> of order 2 and <5> of order 2^{k-2}
    Component sign{pk, pk - 1, 2, std::vector<std::uint32_t>(pk, kNoLog)};
    Component five{pk, 5, u64{1} << (k - 2), std::vector<std::uint32_t>(pk, kNoLog)};
    u64 t = 1;
    for (u64 e = 0; e < five.order; ++e) {
      sign.dlog[t] = 0;
      five.dlog[t] = static_cast<std::uint32_t>(e);
      u64 nt = pk - t;
      sign.dlog[nt] = 1;
      five.dlog[nt] = static_cast<std::uint32_t>(e);
      t = t * 5 % pk;
    }
    comps_.push_back(std::move(sign));
    comps_.push_back(std::move(five));
  }

  static Component make_cyclic(u64 pk, u64 g, u64 ord) {
    Component c{pk, g, ord, std::vector<std::uint32_t>(pk, kNoLog)};
    u64 t = 1;
    for (u64 e = 0; e < ord; ++e) {
      c.dlog[t] = static_cast<std::uint32_t>(e);
      t = mulmod(t, g, pk);
    }
    return c;
  }

  static u64 primitive_root_mod_pk(u64 p, unsigned k, u64 pk) {
    // root mod p first
    u64 pm1 = p - 1;
    auto rad = zrepel::factorize(pm1);
    u64 g = 0;
    for (u64 cand = 2; cand < p; ++cand) {
      bool ok = true;
      for (auto& rp : rad) {
        if (powmod(cand, pm1 / rp.prime, p) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
    if (g == 0) throw std::logic_error("no primitive root found");
    if (k == 1) return g;
    // g lifts to p^k unless g^{p-1} = 1 mod p^2, in which case g+p does
    u64 p2 = p * p;
    if (powmod(g, pm1, p2) == 1) g += p;
    return g % pk;
  }

  u64 q_;
  u64 phi_;
  u64 exponent_;
  std::vector<Component> comps_;
};

// A Dirichlet character mod q as an exponent vector over the unit-group
// generators. Immutable; evaluation is exact.
class DirichletCharacter {
 public:
  static DirichletCharacter principal(u64 q) {
    auto g = UnitGroup::for_modulus(q);
    return DirichletCharacter(g, std::vector<u64>(g->components().size(), 0));
  }

  DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<u64> exps)
      : group_(std::move(group)), exps_(std::move(exps)) {
    const auto& cs = group_->components();
    if (exps_.size() != cs.size()) throw std::invalid_argument("exponent vector size mismatch");
    for (size_t i = 0; i < cs.size(); ++i) {
      if (exps_[i] >= cs[i].order) throw std::invalid_argument("exponent out of range");
    }
    order_ = 1;
    for (size_t i = 0; i < cs.size(); ++i) {
      u64 oi = cs[i].order / std::gcd(cs[i].order, exps_[i] == 0 ? cs[i].order : exps_[i]);
      order_ = std::lcm(order_, oi);
    }
    conductor_ = compute_conductor();
  }

  u64 modulus() const { return group_->modulus(); }
  u64 order() const { return order_; }
  u64 conductor() const { return conductor_; }
  bool is_principal() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }
  bool is_primitive() const { return conductor_ == modulus(); }
  const std::vector<u64>& exponents() const { return exps_; }
  const UnitGroup& group() const { return *group_; }

  RootOfUnity operator()(i64 n) const {
    u64 q = modulus();
    u64 m = static_cast<u64>(((n % static_cast<i64>(q)) + static_cast<i64>(q)) % static_cast<i64>(q));
    return eval_residue(m);
  }
  RootOfUnity eval_residue(u64 m) const {
    if (group_->modulus() == 1) return RootOfUnity::one();
    std::vector<u64> dl;
    if (!group_->decompose(m, dl)) return RootOfUnity::make_zero();
    const auto& cs = group_->components();
    u64 lam = group_->exponent();
    u64 acc = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
      // angle contribution e_i * dlog_i / order_i of a full turn
      u128 term = static_cast<u128>(exps_[i]) * dl[i] % cs[i].order;
      acc = (acc + static_cast<u64>(term * (lam / cs[i].order) % lam)) % lam;
    }
    return RootOfUnity::from_angle(acc, lam);
  }

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("character moduli differ");
    const auto& cs = a.group_->components();
    std::vector<u64> e(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) e[i] = (a.exps_[i] + b.exps_[i]) % cs[i].order;
    return DirichletCharacter(a.group_, std::move(e));
  }
  DirichletCharacter conj() const {
    const auto& cs = group_->components();
    std::vector<u64> e(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) e[i] = exps_[i] == 0 ? 0 : cs[i].order - exps_[i];
    return DirichletCharacter(group_, std::move(e));
  }
  bool operator==(const DirichletCharacter& o) const {
    return modulus() == o.modulus() && exps_ == o.exps_;
  }

 private:
  u64 compute_conductor() const {
    const auto& cs = group_->components();
    u64 f = 1;
    size_t i = 0;
    // components at the same power of 2 (the <-1>, <5> pair) are combined
    while (i < cs.size()) {
      if (cs[i].part % 2 == 0 && i + 1 < cs.size() && cs[i + 1].part == cs[i].part) {
        u64 eps = exps_[i];
        u64 e5 = exps_[i + 1];
        u64 o5 = cs[i + 1].order / std::gcd(cs[i + 1].order, e5 == 0 ? cs[i + 1].order : e5);
        if (o5 == 1) {
          f *= (eps == 0) ? 1 : 4;
        } else {
          f *= 4 * o5;  // order 2^j on <5> forces conductor 2^{j+2}
        }
        i += 2;
        continue;
      }
      u64 part = cs[i].part;
      u64 e = exps_[i];
      u64 o = cs[i].order / std::gcd(cs[i].order, e == 0 ? cs[i].order : e);
      if (o != 1) {
        if (part % 2 == 0) {
          f *= 4;  // the single mod-4 component
        } else {
          u64 p = smallest_prime_of(part);
          unsigned vp = 0;
          u64 t = o;
          while (t % p == 0) {
            t /= p;
            ++vp;
          }
          u64 fp = p;
          for (unsigned j = 0; j < vp; ++j) fp *= p;
          f *= fp;  // p^{v_p(o)+1}
        }
      }
      ++i;
    }
    return f;
  }
  static u64 smallest_prime_of(u64 pk) {
    for (u64 d = 2; d * d <= pk; ++d)
      if (pk % d == 0) return d;
    return pk;
  }

  std::shared_ptr<const UnitGroup> group_;
  std::vector<u64> exps_;
  u64 order_;
  u64 conductor_;
};

// All phi(q) characters mod q, principal first, deterministic order.
inline std::vector<DirichletCharacter> enumerate_characters(u64 q, u64 cap = u64{1} << 21) {
  auto g = UnitGroup::for_modulus(q);
  if (g->phi() > cap) throw EnumerationCapExceeded(q, g->phi(), cap);
  const auto& cs = g->components();
  std::vector<DirichletCharacter> out;
  out.reserve(g->phi());
  std::vector<u64> e(cs.size(), 0);
  while (true) {
    out.emplace_back(g, e);
    size_t i = 0;
    while (i < cs.size()) {
      if (++e[i] < cs[i].order) break;
      e[i] = 0;
      ++i;
    }
    if (i == cs.size()) break;
    if (cs.empty()) break;
  }
  return out;
}

// Characters of order exactly 2 (the candidates for the exceptional chi_1).
inline std::vector<DirichletCharacter> real_quadratic_characters(u64 q, u64 cap = u64{1} << 21) {
  if (q < 3) throw std::invalid_argument("real_quadratic_characters requires q >= 3");
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(q, cap)) {
    if (chi.order() == 2) out.push_back(chi);
  }
  return out;
}

// Kronecker symbol (a|n) with the standard conventions at 2, -1 and 0.
inline int kronecker(i64 a, i64 n) {
  if (a == 0 && n == 0) throw std::invalid_argument("kronecker(0, 0)");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int t = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++t;
    }
    int a8 = static_cast<int>(((a % 8) + 8) % 8);
    if (t % 2 == 1 && (a8 == 3 || a8 == 5)) sign = -sign;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 n8 = n % 8;
      if (n8 == 3 || n8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

}  // namespace zrepel
