#pragma once

#include "zrepel/multiplicative.hpp"
#include "zrepel/zeta.hpp"

namespace zrepel {

// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q). The Hurwitz poles are
// removed termwise (sum chi(a) = 0 for nonprincipal chi), so the only genuine
// pole is the principal character's at s = 1.
inline ComplexInterval l_eval(const ComplexInterval& s, const DirichletCharacter& chi,
                              const EvalParams& params = {}) {
  u64 q = chi.modulus();
  if (chi.is_principal() && s.re.contains(1L) && s.im.contains(0L)) {
    throw PoleProximity("L(s, chi_0) pole at s = 1 inside the box");
  }
  ComplexInterval acc(0L);
  for (u64 a = 1; a <= q; ++a) {
    RootOfUnity v = chi.eval_residue(a % q);
    if (v.zero) continue;
    ComplexInterval term = hurwitz_zeta_deflated(s, Rational(static_cast<long>(a), static_cast<long>(q)), params);
    acc = acc + to_complex(v) * term;
  }
  if (chi.is_principal()) {
    // the deflation removed phi(q) copies of 1/(s-1)
    Interval phi_q(static_cast<long>(euler_phi(q)));
    acc = acc + ComplexInterval{phi_q, Interval(0L)} / (s - ComplexInterval(1L));
  }
  Interval qi(static_cast<long>(q));
  return cpow_real(qi, -s) * acc;
}

// Principal character via the Euler-factor identity, used as a cross-check:
// L(s, chi_0 mod q) = zeta(s) prod_{p | q} (1 - p^{-s}).
inline ComplexInterval l_principal_euler(const ComplexInterval& s, u64 q,
                                         const EvalParams& params = {}) {
  ComplexInterval z = zeta(s, params);
  for (auto& pp : factorize(q)) {
    Interval p(static_cast<long>(pp.prime));
    z = z * (ComplexInterval(1L) - cpow_real(p, -s));
  }
  return z;
}

// F(s, chi) = L(s, chi) L(s, chi chi1); Dirichlet coefficients a(n) chi(n).
inline ComplexInterval f_eval(const ComplexInterval& s, const DirichletCharacter& chi,
                              const ExceptionalContext& ctx, const EvalParams& params = {}) {
  DirichletCharacter chichi1 = chi * ctx.chi1();
  return l_eval(s, chi, params) * l_eval(s, chichi1, params);
}

// Upper bound for sum_{n > N} d(n)/n^2, the divisor-sum tail used when
// comparing F(2, chi_0) against its truncated Dirichlet series:
//   sum_{n>N} d(n)/n^2 <= 4 (log N + 2)/N    for N >= 16
// (split d <= sqrt(N) < m and d > sqrt(N), bound each part by integrals).
inline Interval divisor_tail_over_n2(u64 N) {
  if (N < 16) throw std::invalid_argument("divisor_tail_over_n2 requires N >= 16");
  Interval n(static_cast<long>(N));
  Interval up = Interval(4L) * (log(n) + Interval(2L)) / n;
  Interval r(0L);
  mpfr_set(r.hi_raw(), up.hi(), MPFR_RNDU);
  return r;
}

}  // namespace zrepel
