#pragma once

#include <optional>
#include <sstream>

#include "zrepel/integers.hpp"
#include "zrepel/interval.hpp"

namespace zrepel {

// Subconvexity (A, theta) and effective-Siegel (B, eps) hypothesis inputs.
// Ineffective presets carry flags and refuse the corollary reduction.
struct HypothesisParams {
  Interval A{Interval::from_decimal("2.97655")};
  Interval theta{Interval::from_ratio(1, 4)};
  Interval B{Interval(100L)};
  Interval eps{Interval::from_ratio(1, 2)};
  bool ineffective_A = false;
  bool ineffective_B = false;

  void validate() const {
    if (mpfr_cmp_si(A.lo(), 1) < 0) throw std::invalid_argument("A must be >= 1");
    if (mpfr_sgn(theta.lo()) <= 0 || mpfr_cmp_d(theta.hi(), 0.25) > 0)
      throw std::invalid_argument("theta must lie in (0, 1/4]");
    if (mpfr_sgn(B.lo()) <= 0) throw std::invalid_argument("B must be positive");
    if (mpfr_sgn(eps.lo()) <= 0 || mpfr_cmp_d(eps.hi(), 0.5) > 0)
      throw std::invalid_argument("eps must lie in (0, 1/2]");
  }

  // comma-separated preset list, e.g. "convexity,bordignon"
  static HypothesisParams preset(const std::string& names) {
    HypothesisParams p;
    std::stringstream ss(names);
    std::string tok;
    bool any = false;
    while (std::getline(ss, tok, ',')) {
      any = true;
      if (tok == "convexity") {
        p.A = Interval::from_decimal("2.97655");
        p.theta = Interval::from_ratio(1, 4);
        p.ineffective_A = false;
      } else if (tok == "weyl") {
        // Weyl exponent 1/6 with unspecified (ineffective) A
        p.A = Interval(1L);
        p.theta = Interval::from_ratio(1, 6);
        p.ineffective_A = true;
      } else if (tok == "bordignon") {
        p.B = Interval(100L);
        p.eps = Interval::from_ratio(1, 2);
        p.ineffective_B = false;
      } else if (tok == "siegel") {
        p.B = Interval(1L);
        p.ineffective_B = true;
      } else {
        throw std::invalid_argument("unknown preset: " + tok);
      }
    }
    if (!any) throw std::invalid_argument("empty preset list");
    return p;
  }
};

enum class WindowStatus { ok, violated_lower, violated_upper, undetermined };

inline const char* to_string(WindowStatus w) {
  switch (w) {
    case WindowStatus::ok: return "ok";
    case WindowStatus::violated_lower: return "violated_lower";
    case WindowStatus::violated_upper: return "violated_upper";
    default: return "undetermined";
  }
}

struct BoundReport {
  u64 q = 0;
  Interval T;
  Interval beta1;
  Interval M, K, R, N;
  Interval repulsion_beta;
  bool vacuous = false;          // log argument <= 1: no nontrivial conclusion
  WindowStatus window = WindowStatus::undetermined;
  bool n_leq_m = false;          // N <= M certified (expected inside the window)
  // corollary-form constants last applied, and the linear form value
  Interval c1, c2, c3, c4;
  Interval linear_form;
  bool has_corollary = false;
};

// Endpoint-wise interval max.
inline Interval imax(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_raw(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_raw(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

// McCurley zero-free region edge: 1 - 1/(10 log max{q, q|t|, 10}).
inline Interval mccurley_region(u64 q, const Interval& t) {
  if (q < 3) throw std::invalid_argument("mccurley_region requires q >= 3");
  Interval qi(static_cast<long>(q));
  Interval m = imax(imax(qi, qi * abs(t)), Interval(10L));
  return Interval(1L) - Interval(1L) / (Interval(10L) * log(m));
}

// Phragmen-Lindelof interpolation bound for |L(sigma+it, psi)|:
//   (A (2 q_psi (1+|t|))^theta)^{(1+eta-sigma)/(1/2+eta)} (1+1/eta)^{(sigma-1/2)/(1/2+eta)}
// times exp((log q)^{(2-sigma)/2}) when the character is not primitive.
inline Interval phragmen_bound(const Interval& sigma, const Interval& t, u64 q_psi,
                               const Interval& eta, const Interval& A, const Interval& theta,
                               bool primitive, u64 q = 0) {
  Interval half = Interval::from_ratio(1, 2);
  if (mpfr_cmp(sigma.hi(), half.lo()) < 0) throw std::domain_error("sigma below 1/2");
  Interval one(1L);
  if (certainly_greater(sigma, one + eta)) throw std::domain_error("sigma above 1+eta");
  Interval base = A * pow(Interval(2L) * Interval(static_cast<long>(q_psi)) * (one + abs(t)), theta);
  Interval e1 = (one + eta - sigma) / (half + eta);
  Interval e2 = (sigma - half) / (half + eta);
  Interval r = pow(base, e1) * pow(one + one / eta, e2);
  if (!primitive) {
    if (q < 3) throw std::invalid_argument("imprimitive form needs the ambient modulus q");
    Interval lq = log(Interval(static_cast<long>(q)));
    r = r * exp(pow(lq, (Interval(2L) - sigma) / Interval(2L)));
  }
  return r;
}

// K = 10^25 A^20 B^-2 e^{8 (log q)^{3/4}} (log q)^28,  M = K q^{8 theta + 2 eps} T^{4 theta}.
inline std::pair<Interval, Interval> compute_M_K(u64 q, const Interval& T,
                                                 const HypothesisParams& params) {
  if (q <= 400000) throw std::invalid_argument("compute_M_K requires q > 400000");
  if (mpfr_cmp_si(T.hi(), 4) < 0) throw std::invalid_argument("compute_M_K requires T >= 4");
  params.validate();
  Interval lq = log(Interval(static_cast<long>(q)));
  Interval K = Interval::from_decimal("1e25") * pow_si(params.A, 20) / pow_si(params.B, 2) *
               exp(Interval(8L) * pow(lq, Interval::from_decimal("0.75"))) * pow_si(lq, 28);
  Interval M = K *
               pow(Interval(static_cast<long>(q)), Interval(8L) * params.theta + Interval(2L) * params.eps) *
               pow(T, Interval(4L) * params.theta);
  return {M, K};
}

// Full report for the abstract repulsion bound
//   beta < 1 - log(theta / (4 (1-beta1) log M)) / log M,
// with the sifting level R and mollifier length N the proof selects.
inline BoundReport repulsion_bound(u64 q, const Interval& T, const Interval& beta1,
                                   const HypothesisParams& params) {
  auto [M, K] = compute_M_K(q, T, params);
  BoundReport rep;
  rep.q = q;
  rep.T = T;
  rep.beta1 = beta1;
  rep.M = M;
  rep.K = K;

  Interval one(1L);
  Interval lq = log(Interval(static_cast<long>(q)));
  Interval one_minus_b1 = one - beta1;

  // Hypothesis-B window: 1 - 1/(10 log q) < beta1 < 1 - B/(q^eps (log q)^2)
  Interval win_lo = one - one / (Interval(10L) * lq);
  Interval win_hi = one - params.B / (pow(Interval(static_cast<long>(q)), params.eps) * lq * lq);
  if (certainly_leq(beta1, win_lo)) rep.window = WindowStatus::violated_lower;
  else if (certainly_geq(beta1, win_hi)) rep.window = WindowStatus::violated_upper;
  else if (certainly_greater(beta1, win_lo) && certainly_less(beta1, win_hi)) rep.window = WindowStatus::ok;
  else rep.window = WindowStatus::undetermined;

  Interval e_log34 = exp(pow(lq, Interval::from_decimal("0.75")));
  rep.R = Interval(64L) * pow_si(params.A, 2) *
          pow(Interval(static_cast<long>(q)), Interval(2L) * params.theta) * pow_si(e_log34, 2) /
          pow_si(one_minus_b1, 2);
  rep.N = Interval::from_decimal("1e25") * pow_si(params.A, 20) * pow_si(e_log34, 8) *
          pow_si(lq, 24) * pow(Interval(static_cast<long>(q)), Interval(8L) * params.theta) *
          pow(T, Interval(4L) * params.theta) / pow_si(one_minus_b1, 2);
  rep.n_leq_m = certainly_leq(rep.N, rep.M);

  Interval logM = log(M);
  Interval arg = params.theta / (Interval(4L) * one_minus_b1 * logM);
  if (!(mpfr_cmp_si(arg.lo(), 1) > 0)) {
    rep.vacuous = true;
    rep.repulsion_beta = Interval(1L);  // no nontrivial repulsion
  } else {
    rep.vacuous = false;
    rep.repulsion_beta = one - log(arg) / logM;
  }
  return rep;
}

// 1 - log(c4 / ((1-beta1) L)) / L with L = c1 log q + c2 log T + c3.
inline Interval corollary_form(u64 q, const Interval& T, const Interval& beta1, const Interval& c1,
                               const Interval& c2, const Interval& c3, const Interval& c4) {
  if (q <= 400000) throw std::invalid_argument("corollary_form requires q > 400000");
  if (mpfr_cmp_si(T.hi(), 4) < 0) throw std::invalid_argument("corollary_form requires T >= 4");
  Interval L = c1 * log(Interval(static_cast<long>(q))) + c2 * log(T) + c3;
  Interval arg = c4 / ((Interval(1L) - beta1) * L);
  return Interval(1L) - log(arg) / L;
}

enum class DominanceVerdict { verified, failed, inconclusive };

inline const char* to_string(DominanceVerdict v) {
  switch (v) {
    case DominanceVerdict::verified: return "verified";
    case DominanceVerdict::failed: return "failed";
    default: return "inconclusive";
  }
}

// log M <= c1 log q + c2 log T + c3, certified with interval endpoints.
inline DominanceVerdict corollary_dominance(u64 q, const Interval& T,
                                            const HypothesisParams& params, const Interval& c1,
                                            const Interval& c2, const Interval& c3) {
  if (params.ineffective_A || params.ineffective_B) {
    throw std::invalid_argument("ineffective presets cannot certify corollary dominance");
  }
  auto mk = compute_M_K(q, T, params);
  Interval logM = log(mk.first);
  Interval linear = c1 * log(Interval(static_cast<long>(q))) + c2 * log(T) + c3;
  if (certainly_leq(logM, linear)) return DominanceVerdict::verified;
  if (certainly_greater(logM, linear)) return DominanceVerdict::failed;
  return DominanceVerdict::inconclusive;
}

// ((2-beta1)/(1-beta) + 1/(beta-1/2)) (1-beta1) N^{1-beta}. As beta
// approaches 1/2 from above the enclosure's upper endpoint diverges to +inf;
// only boxes certainly outside (1/2, 1) are rejected.
inline Interval detector_rhs(const Interval& beta, const Interval& beta1, const Interval& N) {
  Interval half = Interval::from_ratio(1, 2);
  if (mpfr_cmp_d(beta.hi(), 0.5) <= 0 || mpfr_cmp_si(beta.lo(), 1) >= 0) {
    throw std::domain_error("beta must meet (1/2, 1)");
  }
  Interval one(1L);
  Interval f = (Interval(2L) - beta1) / (one - beta) + one / (beta - half);
  return f * (one - beta1) * pow(N, one - beta);
}

// The L(1,chi1)/(1-beta1) bracket [0.72, 0.18 (log q)^2].
inline std::pair<Interval, Interval> ratio_window(u64 q) {
  if (q <= 400000) throw std::invalid_argument("ratio_window requires q > 400000");
  Interval up = Interval::from_decimal("0.18") * pow_si(log(Interval(static_cast<long>(q))), 2);
  return {Interval::from_decimal("0.72"), up};
}

}  // namespace zrepel
