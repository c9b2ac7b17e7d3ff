#pragma once

#include <vector>

#include "zrepel/interval.hpp"
#include "zrepel/rational.hpp"

namespace zrepel {

// Registered integrand family
//   f(t) = (1+t)^alpha / prod_j (c_j + t^2)^{1/2},  alpha in [0, 1), c_j > 0,
// on [0, inf) or (by evenness in |t|) all of R. Decays like t^{alpha - J}
// where J = #factors; convergence requires alpha < J - 1.
struct AlgebraicIntegrand {
  Rational alpha;               // exponent on (1+t)
  std::vector<Rational> c;      // the c_j
  bool symmetric = false;       // integrate over R as 2 * [0, inf)

  Interval value(const Interval& t) const {
    Interval one(1L);
    Interval num = pow(one + t, to_interval(alpha));
    Interval den(1L);
    for (auto& cj : c) den = den * sqrt(to_interval(cj) + pow_si(t, 2));
    return num / den;
  }
  // f'(t) = f(t) [ alpha/(1+t) - sum_j t/(c_j + t^2) ]
  Interval derivative(const Interval& t) const {
    Interval one(1L);
    Interval bracket = to_interval(alpha) / (one + t);
    for (auto& cj : c) bracket = bracket - t / (to_interval(cj) + pow_si(t, 2));
    return value(t) * bracket;
  }
  // f'' = f (B^2 + B') with B the logarithmic derivative above and
  // B' = -alpha/(1+t)^2 - sum_j (c_j - t^2)/(c_j + t^2)^2.
  Interval second_derivative(const Interval& t) const {
    Interval one(1L);
    Interval B = to_interval(alpha) / (one + t);
    Interval Bp = -to_interval(alpha) / pow_si(one + t, 2);
    for (auto& cj : c) {
      Interval ci = to_interval(cj);
      Interval den = ci + pow_si(t, 2);
      B = B - t / den;
      Bp = Bp - (ci - pow_si(t, 2)) / pow_si(den, 2);
    }
    return value(t) * (pow_si(B, 2) + Bp);
  }
};

struct UnregisteredForm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonconvergentIntegral : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Midpoint rule with a second-derivative interval remainder on each panel:
//   int_a^b f = f(m)(b-a) + E,  |E| <= sup|f''| (b-a)^3 / 24.
inline Interval quad_panelwise(const AlgebraicIntegrand& g, double a, double b, double tol) {
  struct Rec {
    double a, b;
    int depth;
  };
  Interval total(0L);
  std::vector<Rec> stack{{a, b, 0}};
  while (!stack.empty()) {
    Rec r = stack.back();
    stack.pop_back();
    double w = r.b - r.a;
    double m = 0.5 * (r.a + r.b);
    Interval fdd = g.second_derivative(Interval(r.a, r.b));
    Interval rem = abs(fdd) * Interval(w) * Interval(w) * Interval(w) / 24L;
    double alloc = tol * w / (b - a);
    if (mpfr_cmp_d(rem.hi(), alloc) > 0 && r.depth < 48) {
      stack.push_back({r.a, m, r.depth + 1});
      stack.push_back({m, r.b, r.depth + 1});
      continue;
    }
    Interval contrib = g.value(Interval(m)) * Interval(w);
    Interval pad(0L);
    mpfr_set(pad.hi_raw(), rem.hi(), MPFR_RNDU);
    total = total + contrib + hull(-pad, pad);
  }
  return total;
}

// Two-sided tail enclosure for int_T^inf f, T beyond 1 and all sqrt(c_j):
//   f(t) = t^{alpha-J} (1+1/t)^alpha prod (1+c_j/t^2)^{-1/2}
// with the bracketed factors pinched between their values at T and 1.
inline Interval tail_enclosure(const AlgebraicIntegrand& g, double T) {
  Interval Ti(T);
  Interval one(1L);
  long J = static_cast<long>(g.c.size());
  Rational decay = Rational(J) - g.alpha - 1;  // t^{-(decay+1)}
  if (decay <= 0) throw NonconvergentIntegral("tail exponent not integrable");
  Interval base = pow(Ti, -to_interval(decay)) / to_interval(decay);  // int_T^inf t^{alpha-J}
  Interval up = pow(one + one / Ti, to_interval(g.alpha));
  Interval down(1L);
  for (auto& cj : g.c) down = down * sqrt(one / (one + to_interval(cj) / pow_si(Ti, 2)));
  Interval lo = base * down;
  Interval hi = base * up;
  return hull(lo, hi);
}

}  // namespace detail

// Enclosure of the full integral: adaptive quadrature on [0, T0] plus the
// proven closed-form tail on [T0, inf). T0 doubles until the tail upper bound
// is at most 1e-3 of the accumulated main term.
inline Interval integrate_rigorous(const AlgebraicIntegrand& g, double quad_tol = 1e-4) {
  if (g.alpha < 0 || g.alpha >= 1) throw UnregisteredForm("alpha must be in [0, 1)");
  if (g.c.empty()) throw UnregisteredForm("at least one quadratic factor required");
  for (auto& cj : g.c)
    if (cj <= 0) throw UnregisteredForm("c_j must be positive");
  if (Rational(static_cast<long>(g.c.size())) - g.alpha <= 1) {
    throw NonconvergentIntegral("alpha >= sum of decay - 1");
  }

  double T0 = 16.0;
  Interval main = detail::quad_panelwise(g, 0.0, T0, quad_tol * 0.5);
  while (true) {
    Interval tail = detail::tail_enclosure(g, T0);
    // tail <= 1e-3 * main?
    Interval budget = Interval::from_decimal("1e-3") * main;
    if (certainly_leq(tail, budget) || T0 >= 1e9) {
      Interval result = main + tail;
      if (g.symmetric) result = result * 2L;
      return result;
    }
    double T1 = T0 * 4.0;
    main = main + detail::quad_panelwise(g, T0, T1, quad_tol * 0.5);
    T0 = T1;
  }
}

}  // namespace zrepel
