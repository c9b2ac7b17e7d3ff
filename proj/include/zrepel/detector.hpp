#pragma once

#include <functional>

#include "zrepel/gfunction.hpp"

namespace zrepel {

// sum_{n <= N} a(n) chi(n) (sum_{d|n} theta_d)^2 n^{-rho} (1 - n/N), enclosed.
inline ComplexInterval mollified_sum(u64 N, const ComplexInterval& rho,
                                     const DirichletCharacter& chi, const SieveSystem& sys) {
  if (N > 10000000) throw std::invalid_argument("mollified_sum desk cap is 1e7");
  if (N == 0) throw std::invalid_argument("mollified_sum requires N >= 1");
  if (mpfr_cmp_d(rho.re.hi(), 0.5) <= 0 || mpfr_cmp_si(rho.re.lo(), 1) >= 0) {
    throw std::invalid_argument("Re(rho) must meet (1/2, 1)");
  }
  const ExceptionalContext& ctx = sys.ctx();
  if (N == 1) return ComplexInterval(0L);
  SmallSieve sieve(N);
  std::vector<Interval> theta_i(sys.support_limit() + 1, Interval(0L));
  std::vector<char> in_supp(sys.support_limit() + 1, 0);
  for (u64 d : sys.support()) {
    theta_i[d] = to_interval(sys.theta(d));
    in_supp[d] = 1;
  }
  ComplexInterval total(0L);
  ComplexInterval minus_rho = -rho;
  Interval Ni(static_cast<long>(N));
  for (u64 n = 1; n < N; ++n) {
    RootOfUnity chin = chi(static_cast<i64>(n));
    if (chin.zero) continue;
    u64 an = ctx.a(sieve.factorize(n));
    if (an == 0) continue;
    Interval w(0L);
    bool any = false;
    for (u64 d : divisors(n)) {
      if (d > sys.support_limit()) break;
      if (in_supp[d]) {
        w = w + theta_i[d];
        any = true;
      }
    }
    if (!any) continue;
    Interval weight = Interval(static_cast<long>(an)) * pow_si(w, 2) *
                      (Interval(1L) - Interval(static_cast<long>(n)) / Ni);
    total = total + to_complex(chin) * weight * cpow_real(Interval(static_cast<long>(n)), minus_rho);
  }
  return total;
}

struct TruncatedSum {
  Interval value;
  Interval min_term;  // nonnegativity witness: smallest term encountered
};

// S(x) = sum_{n <= x} a(n) n^{-beta1} (1 - n/x).
inline TruncatedSum truncated_s_of_x(const ExceptionalContext& ctx, const Interval& beta1,
                                     double x) {
  if (x < 3) throw std::invalid_argument("truncated_s_of_x requires x >= 3");
  if (x > 1e7) throw std::invalid_argument("truncated_s_of_x desk cap is 1e7");
  u64 xf = static_cast<u64>(x);
  SmallSieve sieve(xf);
  Interval xi(x);
  TruncatedSum out{Interval(0L), Interval(1L)};
  Interval minus_b = -beta1;
  bool first = true;
  for (u64 n = 1; n <= xf; ++n) {
    u64 an = ctx.a(sieve.factorize(n));
    if (an == 0) continue;
    Interval term = Interval(static_cast<long>(an)) *
                    pow(Interval(static_cast<long>(n)), minus_b) *
                    (Interval(1L) - Interval(static_cast<long>(n)) / xi);
    out.value = out.value + term;
    if (first || mpfr_cmp(term.lo(), out.min_term.lo()) < 0) out.min_term = term;
    first = false;
  }
  return out;
}

struct MellinIdentity {
  Interval lhs;  // finite smoothed sum
  Interval rhs;  // residues plus shifted contour integral
  bool agrees() const { return lhs.intersects(rhs); }
};

// Unconditional smoothed-sum identity for real s0 in (0.9, 1):
//   sum_{n <= R} a(n) n^{-s0} (1 - n/R)
//     = L(1,chi1) R^{1-s0} / ((1-s0)(2-s0)) + zeta(s0) L(s0,chi1)
//       + (R^{1/2-s0}/2pi) int_R zeta(1/2+it) L(1/2+it,chi1) R^{it}
//                              / ((1/2-s0+it)(3/2-s0+it)) dt.
// Both sides are enclosed independently; they must intersect. The contour
// tail beyond T0 is bounded with the zeta and L growth estimates on the
// half-line (chi1 must be primitive for the latter).
inline MellinIdentity mellin_identity_check(const ExceptionalContext& ctx, const Interval& s0,
                                            double R, double T0 = 8.0, double quad_tol = 1e-2) {
  const DirichletCharacter& chi1 = ctx.chi1();
  if (!chi1.is_primitive() || chi1.is_principal()) {
    throw std::invalid_argument("mellin_identity_check needs a primitive chi1");
  }
  u64 q = ctx.modulus();
  MellinIdentity out;

  // left side: finite sum
  u64 Rf = static_cast<u64>(R);
  SmallSieve sieve(Rf);
  Interval lhs(0L);
  Interval Ri(R);
  Interval minus_s0 = -s0;
  for (u64 n = 1; n <= Rf; ++n) {
    u64 an = ctx.a(sieve.factorize(n));
    if (an == 0) continue;
    lhs = lhs + Interval(static_cast<long>(an)) * pow(Interval(static_cast<long>(n)), minus_s0) *
                    (Interval(1L) - Interval(static_cast<long>(n)) / Ri);
  }
  out.lhs = lhs;

  // residues at s = 1 - s0 (zeta pole) and s = 0
  EvalParams params;
  Interval one(1L);
  ComplexInterval L1 = l_eval(ComplexInterval(1L), chi1, params);
  Interval main = L1.re * pow(Ri, one - s0) / ((one - s0) * (Interval(2L) - s0));
  ComplexInterval Ls0 = l_eval(ComplexInterval{s0, Interval(0L)}, chi1, params);
  ComplexInterval zs0 = zeta(ComplexInterval{s0, Interval(0L)}, params);
  Interval at_zero = zs0.re * Ls0.re;

  // contour integral on Re(s+s0) = 1/2; conjugate symmetry gives 2 Re int_0^T.
  // The oscillation R^{it} is integrated in closed form per panel; only the
  // slowly varying factor g(t) = zeta L / (d1 d2) is enclosed by hull, so the
  // panel error is width(g) * w rather than |log R| w * |g|.
  Interval logR = log(Ri);
  EvalParams g_params;  // the contour factor needs ~1e-12, not full precision
  g_params.truncation = 24;
  g_params.em_order = 8;
  auto g_factor = [&](const Interval& t) -> ComplexInterval {
    ComplexInterval s_half{Interval::from_ratio(1, 2), t};
    ComplexInterval zl = zeta(s_half, g_params) * l_eval(s_half, chi1, g_params);
    ComplexInterval d1{Interval::from_ratio(1, 2) - s0, t};
    ComplexInterval d2{Interval(1L) + Interval::from_ratio(1, 2) - s0, t};
    return zl / (d1 * d2);
  };
  ComplexInterval half(0L);
  {
    struct Rec {
      double a, b;
      int depth;
    };
    std::vector<Rec> stack{{0.0, T0, 0}};
    while (!stack.empty()) {
      Rec r = stack.back();
      stack.pop_back();
      double w = r.b - r.a;
      ComplexInterval g = g_factor(Interval(r.a, r.b));
      double radius = 0.5 * (g.re.width_d() + g.im.width_d());
      // the panel error is radius * w (second order in w)
      if (radius * w > quad_tol / 64.0 && r.depth < 24) {
        double m = 0.5 * (r.a + r.b);
        stack.push_back({r.a, m, r.depth + 1});
        stack.push_back({m, r.b, r.depth + 1});
        continue;
      }
      // int_a^b R^{it} dt = (R^{ib} - R^{ia}) / (i log R)
      ComplexInterval eb = cexp(ComplexInterval{Interval(0L), Interval(r.b) * logR});
      ComplexInterval ea = cexp(ComplexInterval{Interval(0L), Interval(r.a) * logR});
      ComplexInterval osc = (eb - ea) / ComplexInterval{Interval(0L), logR};
      ComplexInterval center{g.re.midpoint(), g.im.midpoint()};
      Interval pad = (g.re.width() + g.im.width()) * Interval(w) / 2L;
      ComplexInterval contrib = center * osc;
      contrib.re = contrib.re + hull(-pad, pad);
      contrib.im = contrib.im + hull(-pad, pad);
      half = half + contrib;
    }
  }
  Interval integral = Interval(2L) * half.re;

  // tail: |zeta(1/2+it)| <= 1.5 (1+t)^{1/6}, |L(1/2+it,chi1)| <= 2.97655 (q(1+t))^{1/4}
  Interval T(T0);
  Interval c = Interval::from_decimal("1.5") * Interval::from_decimal("2.97655") *
               pow(Interval(static_cast<long>(q)), Interval::from_ratio(1, 4));
  Interval tail_int = pow(one + one / T, Interval::from_ratio(5, 12)) *
                      Interval::from_ratio(12, 7) / pow(T, Interval::from_ratio(7, 12));
  Interval tail = Interval(2L) * c * tail_int;
  integral = integral + hull(-tail, tail);

  Interval prefac = pow(Ri, Interval::from_ratio(1, 2) - s0) / (Interval(2L) * Interval::pi());
  out.rhs = main + at_zero + prefac * integral;
  return out;
}

// Rigorous winding number of f around the boundary of the rectangle
// [re_lo, re_hi] x [im_lo, im_hi]. Arcs are refined until the image encloses
// no zero and consecutive ratios stay within a quarter turn; the total must
// then pin down an exact multiple of 2 pi.
class WindingFailure : public std::runtime_error {
 public:
  explicit WindingFailure(const std::string& w) : std::runtime_error(w) {}
};

inline int winding_number(const std::function<ComplexInterval(const ComplexInterval&)>& f,
                          double re_lo, double re_hi, double im_lo, double im_hi,
                          int initial_segments = 24, int max_depth = 16) {
  struct Pt {
    double x, y;
  };
  // boundary polyline, counterclockwise
  std::vector<Pt> corners{{re_lo, im_lo}, {re_hi, im_lo}, {re_hi, im_hi}, {re_lo, im_hi}};
  std::vector<Pt> pts;
  for (int side = 0; side < 4; ++side) {
    Pt a = corners[side], b = corners[(side + 1) % 4];
    for (int i = 0; i < initial_segments; ++i) {
      double u = static_cast<double>(i) / initial_segments;
      pts.push_back({a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)});
    }
  }
  pts.push_back(pts.front());

  Interval total(0L);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    // refine the arc pts[i] -> pts[i+1] recursively
    std::function<Interval(Pt, Pt, int)> arc = [&](Pt a, Pt b, int depth) -> Interval {
      ComplexInterval seg{Interval(std::min(a.x, b.x), std::max(a.x, b.x)),
                          Interval(std::min(a.y, b.y), std::max(a.y, b.y))};
      ComplexInterval img = f(seg);
      ComplexInterval za = f(ComplexInterval{Interval(a.x), Interval(a.y)});
      ComplexInterval zb = f(ComplexInterval{Interval(b.x), Interval(b.y)});
      bool img_ok = !img.contains_zero();
      ComplexInterval ratio{Interval(0L), Interval(0L)};
      bool ratio_ok = false;
      if (img_ok && !za.contains_zero()) {
        ratio = zb / za;
        ratio_ok = ratio.re.is_positive();
      }
      if (!(img_ok && ratio_ok)) {
        if (depth >= max_depth) throw WindingFailure("cannot certify arc; zero too close to contour?");
        Pt m{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
        return arc(a, m, depth + 1) + arc(m, b, depth + 1);
      }
      // |delta arg| < pi/2 on this arc; atan(im/re) encloses it
      return atan(ratio.im / ratio.re);
    };
    total = total + arc(pts[i], pts[i + 1], 0);
  }
  Interval two_pi = Interval(2L) * Interval::pi();
  Interval wind = total / two_pi;
  long k = std::lround(wind.mid_d());
  if (!wind.contains(k) || wind.contains(k - 1) || wind.contains(k + 1)) {
    throw WindingFailure("winding enclosure does not isolate an integer");
  }
  return static_cast<int>(k);
}

}  // namespace zrepel
