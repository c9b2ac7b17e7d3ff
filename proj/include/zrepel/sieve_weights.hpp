#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "zrepel/interval.hpp"
#include "zrepel/multiplicative.hpp"
#include "zrepel/rational.hpp"

namespace zrepel {

struct SieveCapExceeded : std::runtime_error {
  explicit SieveCapExceeded(double R) : std::runtime_error("sifting level " + std::to_string(R) + " exceeds cap") {}
};

// V(R) = sum_{l <= R squarefree} mu^2(l)/g(l), exact.
inline Rational v_of_r(const ExceptionalContext& ctx, double R) {
  if (R < 1) throw std::invalid_argument("v_of_r requires R >= 1");
  if (R > 1e7) throw SieveCapExceeded(R);
  u64 Rf = static_cast<u64>(R);
  SmallSieve sieve(Rf < 2 ? 2 : Rf);
  Rational v(0);
  for (u64 l = 1; l <= Rf; ++l) {
    if (!sieve.squarefree(l)) continue;
    Rational gl(1);
    for (auto& pp : sieve.factorize(l)) gl *= ctx.g_at_prime(pp.prime);
    v += 1 / gl;
  }
  return v;
}

// Graham's optimal Selberg weights at sifting level R, with V(R) and the
// exceptional context. All entries exact; theta[d] = 0 off the squarefree
// support. The invariants theta_1 = 1 and |theta_d| <= 1 are checked by the
// test suite, not assumed here.
class SieveSystem {
 public:
  SieveSystem(std::shared_ptr<const ExceptionalContext> ctx, double R)
      : ctx_(std::move(ctx)), R_(R) {
    if (R < 2) throw std::invalid_argument("build_weights requires R >= 2");
    if (R > 1e7) throw SieveCapExceeded(R);
    build();
  }

  const ExceptionalContext& ctx() const { return *ctx_; }
  std::shared_ptr<const ExceptionalContext> ctx_ptr() const { return ctx_; }
  double sifting_level() const { return R_; }
  u64 support_limit() const { return Rf_; }
  const Rational& vr() const { return vr_; }
  // theta_d; zero off support.
  Rational theta(u64 d) const {
    if (d == 0) throw std::invalid_argument("theta(0)");
    if (d > Rf_) return Rational(0);
    return theta_[d];
  }
  const std::vector<Rational>& theta_table() const { return theta_; }
  // squarefree d <= R with theta_d != 0, ascending
  const std::vector<u64>& support() const { return support_; }

  // G(1, chi_0) = sum_{d,e <= R, (de,q)=1} theta_d theta_e / h([d,e]).
  // Computed through the diagonalization
  //   G = V(R)^{-2} sum_{(r,q)=1} mu^2(r)/g(r) * W(R/r)^2,
  //   W(y) = sum_{n | rad q, n <= y} 1/phi(n),
  // which is an identity for Graham's optimal weights (the only weights this
  // class constructs). The direct quadratic-form evaluation is kept as
  // g1_principal_direct for cross-checking.
  Rational g1_principal() const { return g1_; }

  Rational g1_principal_direct() const {
    u64 q = ctx_->modulus();
    Rational total(0);
    for (u64 d : support_) {
      if (std::gcd(d, q) != 1) continue;
      for (u64 e : support_) {
        if (std::gcd(e, q) != 1) continue;
        u64 l = d / std::gcd(d, e) * e;
        total += theta_[d] * theta_[e] / ctx_->h(l);
      }
    }
    return total;
  }

 private:
  void build() {
    Rf_ = static_cast<u64>(R_);
    u64 q = ctx_->modulus();
    SmallSieve sieve(Rf_ < 2 ? 2 : Rf_);

    // Per-prime g values and a common multiple D of all denominators of
    // 1/g(r); with t(r) = mu^2(r)/g(r) = t_num[r]/D every partial sum is an
    // integer add.
    std::vector<Rational> gp(sieve.primes().size());
    BigInt D(1);
    for (size_t i = 0; i < sieve.primes().size(); ++i) {
      gp[i] = ctx_->g_at_prime(sieve.primes()[i]);
      D *= numerator(gp[i]);
    }
    std::vector<BigInt> t_num(Rf_ + 1);
    std::vector<Rational> g_of(Rf_ + 1);  // g(r) for squarefree r
    std::vector<int> mu(Rf_ + 1, 0);
    g_of[1] = Rational(1);
    mu[1] = 1;
    t_num[1] = D;
    for (u64 r = 2; r <= Rf_; ++r) {
      if (!sieve.squarefree(r)) continue;
      Rational gr(1);
      int sign = 1;
      for (auto& pp : sieve.factorize(r)) {
        u64 p = pp.prime;
        size_t pi = std::lower_bound(sieve.primes().begin(), sieve.primes().end(), p) -
                    sieve.primes().begin();
        gr *= gp[pi];
        sign = -sign;
      }
      g_of[r] = gr;
      mu[r] = sign;
      t_num[r] = D / numerator(gr) * denominator(gr);
    }

    // inner(d) = sum_{r <= R/d, (r,d)=1} mu^2(r)/g(r), as integer numerators
    std::vector<BigInt> inner_num(Rf_ + 1);
    for (u64 d = 1; d <= Rf_; ++d) {
      if (mu[d] == 0 && d != 1) continue;
      BigInt acc(0);
      u64 lim = Rf_ / d;
      for (u64 r = 1; r <= lim; ++r) {
        if (mu[r] == 0) continue;
        if (d > 1 && std::gcd(r, d) != 1) continue;
        acc += t_num[r];
      }
      inner_num[d] = std::move(acc);
    }
    BigInt v_num = inner_num[1];
    vr_ = Rational(v_num, D);

    theta_.assign(Rf_ + 1, Rational(0));
    support_.clear();
    for (u64 d = 1; d <= Rf_; ++d) {
      if (mu[d] == 0) continue;
      Rational hd = ctx_->h(d);
      // theta_d = mu(d) h(d) inner(d) / (V g(d)); the common denominator D
      // cancels between inner(d) and V.
      BigInt num = numerator(hd) * denominator(g_of[d]) * inner_num[d];
      BigInt den = denominator(hd) * numerator(g_of[d]) * v_num;
      if (mu[d] < 0) num = -num;
      theta_[d] = Rational(num, den);
      if (theta_[d] != 0) support_.push_back(d);
    }

    // Diagonalized principal form. Only r coprime to q contribute; the inner
    // character-sum collapse leaves W(R/r) over divisors of rad(q).
    std::vector<u64> rad_divs{1};
    {
      std::vector<u64> ps;
      for (auto& pp : zrepel::factorize(q)) ps.push_back(pp.prime);
      for (u64 p : ps) {
        size_t sz = rad_divs.size();
        for (size_t i = 0; i < sz; ++i) rad_divs.push_back(rad_divs[i] * p);
      }
      std::sort(rad_divs.begin(), rad_divs.end());
    }
    // Band sums of t_num over r coprime to q, split at thresholds R/n.
    Rational X(0);
    Rational W(0);
    // iterate divisors descending: band r in (R/n_{j+1}, R/n_j] has W_j
    // easier ascending over n with bands [R/n_next + 1 .. R/n]
    for (size_t j = 0; j < rad_divs.size(); ++j) {
      W += Rational(1, static_cast<long>(euler_phi(rad_divs[j])));
      u64 hi_r = Rf_ / rad_divs[j];
      u64 lo_r = (j + 1 < rad_divs.size()) ? Rf_ / rad_divs[j + 1] + 1 : 1;
      if (j + 1 < rad_divs.size() && Rf_ / rad_divs[j + 1] >= hi_r) continue;  // empty band
      BigInt S(0);
      for (u64 r = lo_r; r <= hi_r; ++r) {
        if (mu[r] == 0) continue;
        if (q > 1 && std::gcd(r, q) != 1) continue;
        S += t_num[r];
      }
      if (S != 0) X += Rational(S) * W * W;
    }
    g1_ = X * Rational(D) / Rational(v_num * v_num);
  }

  std::shared_ptr<const ExceptionalContext> ctx_;
  double R_;
  u64 Rf_ = 0;
  Rational vr_;
  Rational g1_;
  std::vector<Rational> theta_;
  std::vector<u64> support_;
};

inline SieveSystem build_weights(std::shared_ptr<const ExceptionalContext> ctx, double R) {
  return SieveSystem(std::move(ctx), R);
}

// sum_{n <= R} a(n)/n with a directed-rounding enclosure.
inline Interval a_over_n_partial(const ExceptionalContext& ctx, double R) {
  if (R < 1) throw std::invalid_argument("a_over_n_partial requires R >= 1");
  if (R > 1e7) throw SieveCapExceeded(R);
  u64 Rf = static_cast<u64>(R);
  SmallSieve sieve(Rf < 2 ? 2 : Rf);
  Interval total(0L);
  for (u64 n = 1; n <= Rf; ++n) {
    u64 an = ctx.a(sieve.factorize(n));
    if (an == 0) continue;
    total = total + Interval(static_cast<long>(an)) / Interval(static_cast<long>(n));
  }
  return total;
}

// Right-hand side of the partial-sum lower bound
//   L(1,chi1) R^{1-beta1} / ((1-beta1)(2-beta1)) * (1 - 4A e^{(log q)^{3/4}} q^theta / sqrt(R)),
// with L(1,chi1) either supplied or bracketed by the ratio window
// [0.72, 0.18 (log q)^2] * (1 - beta1).
inline Interval selberg_lower_bound_rhs(u64 q, const Interval& beta1, const Interval& A,
                                        const Interval& theta, const Interval& R,
                                        const Interval* L_value = nullptr) {
  if (q <= 400000) throw std::invalid_argument("selberg_lower_bound_rhs requires q > 400000");
  if (mpfr_cmp_si(R.hi(), 200) < 0) throw std::invalid_argument("requires R >= 200");
  Interval lq = log(Interval(static_cast<long>(q)));
  Interval one(1L);
  Interval window_lo = one - one / (Interval(10L) * lq);
  // reject only when certainly outside (1 - 1/(10 log q), 1)
  if (certainly_less(beta1, window_lo) || certainly_less(one, beta1)) {
    throw std::invalid_argument("beta1 outside (1 - 1/(10 log q), 1)");
  }
  Interval one_minus_b1 = one - beta1;
  Interval L = L_value ? *L_value
                       : one_minus_b1 * hull(Interval::from_decimal("0.72"),
                                             Interval::from_decimal("0.18") * lq * lq);
  Interval main = L * pow(R, one_minus_b1) / (one_minus_b1 * (Interval(2L) - beta1));
  Interval bracket =
      one - Interval(4L) * A * exp(pow(lq, Interval::from_decimal("0.75"))) *
                pow(Interval(static_cast<long>(q)), theta) / sqrt(R);
  return main * bracket;
}

}  // namespace zrepel
