#pragma once

#include <map>

#include "zrepel/lfunctions.hpp"
#include "zrepel/sieve_weights.hpp"

namespace zrepel {

// Element of the group algebra Q[Z/lambda]: an exact rational combination of
// the roots e(k/lambda). Character values map to single basis elements, so
// Dirichlet-coefficient identities can be tested exactly.
class CyclotomicValue {
 public:
  explicit CyclotomicValue(u64 lambda) : lambda_(lambda), coef_(lambda) {}

  static CyclotomicValue from_root(const RootOfUnity& r, u64 lambda, const Rational& scale) {
    CyclotomicValue v(lambda);
    if (!r.zero && scale != 0) {
      if (lambda % r.den != 0) throw std::invalid_argument("root order does not divide lambda");
      v.coef_[r.num * (lambda / r.den)] = scale;
    }
    return v;
  }

  u64 lambda() const { return lambda_; }
  bool is_zero() const {
    for (auto& c : coef_)
      if (c != 0) return false;
    return true;
  }

  CyclotomicValue& operator+=(const CyclotomicValue& o) {
    check_(o);
    for (u64 k = 0; k < lambda_; ++k) coef_[k] += o.coef_[k];
    return *this;
  }
  // this += other * scale * e(root)
  void add_scaled_rotated(const CyclotomicValue& o, const Rational& scale, const RootOfUnity& r) {
    check_(o);
    if (r.zero || scale == 0) return;
    u64 shift = r.num * (lambda_ / r.den);
    for (u64 k = 0; k < lambda_; ++k) {
      if (o.coef_[k] == 0) continue;
      coef_[(k + shift) % lambda_] += o.coef_[k] * scale;
    }
  }
  bool operator==(const CyclotomicValue& o) const {
    return lambda_ == o.lambda_ && coef_ == o.coef_;
  }

  ComplexInterval enclosure() const {
    ComplexInterval z(0L);
    for (u64 k = 0; k < lambda_; ++k) {
      if (coef_[k] == 0) continue;
      z = z + to_complex(RootOfUnity::from_angle(k, lambda_)) * to_interval(coef_[k]);
    }
    return z;
  }

 private:
  void check_(const CyclotomicValue& o) const {
    if (lambda_ != o.lambda_) throw std::invalid_argument("cyclotomic order mismatch");
  }
  u64 lambda_;
  std::vector<Rational> coef_;
};

// Dirichlet coefficients of the sieve polynomial G(s, chi): finite support,
// each coefficient an exact cyclotomic value. Entries with index > n_max are
// dropped (they cannot contribute to a convolution truncated at n_max).
inline std::map<u64, CyclotomicValue> g_polynomial_coefficients(const SieveSystem& sys,
                                                                const DirichletCharacter& chi,
                                                                u64 n_max) {
  const ExceptionalContext& ctx = sys.ctx();
  u64 lambda = chi.group().exponent();
  std::map<u64, CyclotomicValue> out;
  const auto& supp = sys.support();
  for (u64 d : supp) {
    for (u64 e : supp) {
      u64 l = d / std::gcd(d, e) * e;
      Rational w = sys.theta(d) * sys.theta(e);
      if (w == 0) continue;
      // expand prod_{p | l} ((1+chi1(p)) chi(p) p^{-s} - chi1(p) chi(p^2) p^{-2s})
      struct Term {
        u64 m;
        RootOfUnity root;
        Rational coef;
      };
      std::vector<Term> terms{{1, RootOfUnity::one(), Rational(1)}};
      bool dead = false;
      for (auto& pp : zrepel::factorize(l)) {
        u64 p = pp.prime;
        int c1 = ctx.chi1_at(p);
        RootOfUnity chip = chi(static_cast<i64>(p));
        RootOfUnity chip2 = chip * chip;
        std::vector<Term> next;
        for (auto& t : terms) {
          // p^{-s} branch, coefficient (1+chi1(p)) chi(p)
          if (c1 != -1 && !chip.zero && t.m * p <= n_max) {
            next.push_back({t.m * p, t.root * chip, t.coef * (1 + c1)});
          }
          // p^{-2s} branch, coefficient -chi1(p) chi(p^2)
          if (c1 != 0 && !chip2.zero && t.m * p * p <= n_max) {
            next.push_back({t.m * p * p, t.root * chip2, t.coef * (-c1)});
          }
        }
        terms = std::move(next);
        if (terms.empty()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      for (auto& t : terms) {
        auto it = out.find(t.m);
        if (it == out.end()) it = out.emplace(t.m, CyclotomicValue(lambda)).first;
        it->second += CyclotomicValue::from_root(t.root, lambda, t.coef * w);
      }
    }
  }
  return out;
}

struct FgIdentityReport {
  u64 n_max = 0;
  std::vector<u64> violations;  // n where the coefficient identity fails
  bool ok() const { return violations.empty(); }
};

// Checks, exactly, that the n-th Dirichlet coefficient of F(s,chi) G(s,chi)
// equals a(n) chi(n) (sum_{d|n} theta_d)^2 for every n <= n_max.
inline FgIdentityReport fg_coefficient_identity(const SieveSystem& sys,
                                                const DirichletCharacter& chi, u64 n_max) {
  if (n_max > 100000) throw std::invalid_argument("fg_coefficient_identity cap is 1e5");
  const ExceptionalContext& ctx = sys.ctx();
  u64 lambda = chi.group().exponent();
  SmallSieve sieve(n_max < 2 ? 2 : n_max);

  auto gcoef = g_polynomial_coefficients(sys, chi, n_max);

  // convolution (F * G)_n = sum_{m | n} f_{n/m} G_m
  std::vector<CyclotomicValue> conv(n_max + 1, CyclotomicValue(lambda));
  std::vector<RootOfUnity> chi_val(n_max + 1);
  std::vector<u64> a_val(n_max + 1);
  for (u64 n = 1; n <= n_max; ++n) {
    chi_val[n] = chi(static_cast<i64>(n));
    a_val[n] = ctx.a(sieve.factorize(n));
  }
  for (auto& [m, gm] : gcoef) {
    for (u64 l = 1; l * m <= n_max; ++l) {
      if (chi_val[l].zero || a_val[l] == 0) continue;
      conv[l * m].add_scaled_rotated(gm, Rational(static_cast<long>(a_val[l])), chi_val[l]);
    }
  }

  FgIdentityReport rep;
  rep.n_max = n_max;
  for (u64 n = 1; n <= n_max; ++n) {
    // rhs: a(n) chi(n) (sum_{d|n, d in supp} theta_d)^2
    Rational w(0);
    for (u64 d : divisors(n)) {
      if (d <= sys.support_limit()) w += sys.theta(d);
    }
    CyclotomicValue rhs = CyclotomicValue::from_root(
        chi_val[n], lambda, Rational(static_cast<long>(a_val[n])) * w * w);
    if (!(conv[n] == rhs)) rep.violations.push_back(n);
  }
  return rep;
}

enum class GForm { prime_series_ratio, two_term_expansion };

// G(s, chi) enclosure from the finite double sum over an explicit weight
// list. Two independent computations of the per-prime local factor:
//  - prime_series_ratio: u/(1+u) with u the truncated prime-power series plus
//    a rigorous geometric tail,
//  - two_term_expansion: the exact closed form
//    (1+chi1(p)) chi(p) p^{-s} - chi1(p) chi(p^2) p^{-2s}.
inline ComplexInterval g_eval_weights(const ComplexInterval& s, const DirichletCharacter& chi,
                                      const ExceptionalContext& ctx,
                                      const std::vector<std::pair<u64, Interval>>& weights,
                                      GForm form = GForm::two_term_expansion) {
  u64 Rf = 2;
  for (auto& [d, th] : weights) Rf = std::max(Rf, d);
  SmallSieve sieve(Rf);

  // local factors for all primes <= R
  std::map<u64, ComplexInterval> factor;
  for (u64 p : sieve.primes()) {
    int c1 = ctx.chi1_at(p);
    RootOfUnity chip = chi(static_cast<i64>(p));
    Interval pi(static_cast<long>(p));
    if (form == GForm::two_term_expansion) {
      ComplexInterval t1 = to_complex(chip) * Interval(static_cast<long>(1 + c1)) * cpow_real(pi, -s);
      ComplexInterval t2 = to_complex(chip * chip) * Interval(static_cast<long>(c1)) *
                           cpow_real(pi, -(s * Interval(2L)));
      factor.emplace(p, t1 - t2);
    } else {
      // u = sum_{k>=1} a(p^k) chi(p^k) p^{-ks}, truncated with tail bound
      const int K = 96;
      ComplexInterval ps = cpow_real(pi, -s);
      ComplexInterval pk = ps;
      RootOfUnity chipk = chip;
      ComplexInterval u(0L);
      for (int k = 1; k <= K; ++k) {
        u64 apk = ctx.a_prime_power(p, static_cast<unsigned>(k));
        if (apk != 0 && !chipk.zero) {
          u = u + to_complex(chipk) * Interval(static_cast<long>(apk)) * pk;
        }
        pk = pk * ps;
        chipk = chipk * chip;
      }
      // |a(p^k)| <= k+1: tail <= sum_{k>K} (k+1) x^k = x^{K+1}((K+2)-(K+1)x)/(1-x)^2
      Interval x = abs(ps);
      Interval xh(0L);
      mpfr_set(xh.hi_raw(), x.hi(), MPFR_RNDU);
      mpfr_set(xh.lo_raw(), x.hi(), MPFR_RNDD);
      Interval tail = pow_si(xh, K + 1) *
                      (Interval(static_cast<long>(K + 2)) - Interval(static_cast<long>(K + 1)) * xh) /
                      pow_si(Interval(1L) - xh, 2);
      u = u.padded(tail);
      ComplexInterval denom = ComplexInterval(1L) + u;
      if (denom.contains_zero()) throw std::domain_error("g_eval: 1+u encloses 0");
      factor.emplace(p, u / denom);
    }
  }

  ComplexInterval total(0L);
  for (auto& [d, td] : weights) {
    for (auto& [e, te] : weights) {
      u64 l = d / std::gcd(d, e) * e;
      ComplexInterval prod{td * te, Interval(0L)};
      for (auto& pp : zrepel::factorize(l)) prod = prod * factor.at(pp.prime);
      total = total + prod;
    }
  }
  return total;
}

inline ComplexInterval g_eval(const ComplexInterval& s, const DirichletCharacter& chi,
                              const SieveSystem& sys, GForm form = GForm::two_term_expansion) {
  std::vector<std::pair<u64, Interval>> weights;
  for (u64 d : sys.support()) weights.emplace_back(d, to_interval(sys.theta(d)));
  return g_eval_weights(s, chi, sys.ctx(), weights, form);
}

// The half-line bound asserted for |G(1/2+it, chi)|:
//   12 (1-beta1)^2 (log q)^4 R + 1.5e7 A^2 q^{2 theta} e^{2 (log q)^{3/4}} log^{12}(2eR).
inline Interval g_half_line_bound(u64 q, const Interval& beta1, const Interval& A,
                                  const Interval& theta, const Interval& R) {
  Interval lq = log(Interval(static_cast<long>(q)));
  Interval one(1L);
  Interval t1 = Interval(12L) * pow_si(one - beta1, 2) * pow_si(lq, 4) * R;
  Interval e2 = exp(Interval(2L) * pow(lq, Interval::from_decimal("0.75")));
  Interval log2eR = log(Interval(2L) * exp(Interval(1L)) * R);
  Interval t2 = Interval::from_decimal("1.5e7") * pow_si(A, 2) *
                pow(Interval(static_cast<long>(q)), Interval(2L) * theta) * e2 * pow_si(log2eR, 12);
  return t1 + t2;
}

}  // namespace zrepel
