#include <catch2/catch_amalgamated.hpp>

#include "zrepel/lfunctions.hpp"
#include "zrepel/multiplicative.hpp"

using namespace zrepel;

namespace {

std::shared_ptr<ExceptionalContext> make_ctx(u64 q, size_t which = 0) {
  auto reals = real_quadratic_characters(q);
  return std::make_shared<ExceptionalContext>(q, reals.at(which));
}

// the defining divisor sum, used as oracle for the closed prime-power forms
long a_divisor_sum(const ExceptionalContext& ctx, u64 n) {
  long s = 0;
  for (u64 d : divisors(n)) {
    RootOfUnity v = ctx.chi1()(static_cast<i64>(d));
    s += v.zero ? 0 : v.as_int();
  }
  return s;
}

}  // namespace

TEST_CASE("a(n) equals the divisor sum") {
  for (u64 q : {5ull, 8ull, 12ull}) {
    for (size_t i = 0; i < real_quadratic_characters(q).size(); ++i) {
      auto ctx = make_ctx(q, i);
      for (u64 n = 1; n <= 300; ++n) {
        long oracle = a_divisor_sum(*ctx, n);
        REQUIRE(oracle >= 0);
        REQUIRE(ctx->a(n) == static_cast<u64>(oracle));
      }
    }
  }
}

TEST_CASE("a at prime powers of the modulus is 1") {
  auto ctx = make_ctx(12, 1);
  for (auto& pp : factorize(12ull)) {
    for (unsigned k = 1; k <= 5; ++k) {
      u64 pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= pp.prime;
      REQUIRE(ctx->a(pk) == 1);
    }
  }
  REQUIRE(ctx->a(1) == 1);
}

TEST_CASE("q=5 Legendre: a(12) = 0") {
  auto ctx = make_ctx(5);
  REQUIRE(ctx->a(12) == 0);
  REQUIRE(a_divisor_sum(*ctx, 12) == 0);
}

TEST_CASE("a is multiplicative on coprime pairs, exhaustively to 300") {
  auto ctx = make_ctx(8, 0);
  for (u64 m = 1; m <= 300; ++m) {
    for (u64 n = 1; n <= 300; ++n) {
      if (std::gcd(m, n) != 1) continue;
      REQUIRE(ctx->a(m * n) == ctx->a(m) * ctx->a(n));
    }
  }
}

TEST_CASE("a is nonnegative via the signed sieve, all real chi1 with q <= 60") {
  // additive sieve of sum_{d|n} chi1(d) with signed accumulation up to 1e5
  const u64 N = 100000;
  SmallSieve sieve(N);
  u64 pairs = 0, negatives = 0, mismatches = 0;
  for (u64 q = 3; q <= 60; ++q) {
    for (auto& chi1 : real_quadratic_characters(q)) {
      ++pairs;
      std::vector<int> chi_table(q);
      for (u64 r = 0; r < q; ++r) {
        RootOfUnity v = chi1.eval_residue(r);
        chi_table[r] = v.zero ? 0 : v.as_int();
      }
      std::vector<i64> acc(N + 1, 0);
      for (u64 d = 1; d <= N; ++d) {
        int c = chi_table[d % q];
        if (c == 0) continue;
        for (u64 m = d; m <= N; m += d) acc[m] += c;
      }
      ExceptionalContext ctx(q, chi1);
      for (u64 n = 1; n <= N; ++n) {
        if (acc[n] < 0) ++negatives;
        else if (static_cast<u64>(acc[n]) != ctx.a(sieve.factorize(n))) ++mismatches;
      }
    }
  }
  REQUIRE(pairs > 50);
  REQUIRE(negatives == 0);
  REQUIRE(mismatches == 0);
}

TEST_CASE("g at primes: closed forms") {
  auto ctx5 = make_ctx(5);
  // p | q
  REQUIRE(ctx5->g_at_prime(5) == Rational(4));
  REQUIRE(ctx5->h_at_prime(5) == Rational(5));
  // chi1(3) = -1 mod 5: g(3) = 3^2 - 1 = 8
  REQUIRE(ctx5->chi1_at(3) == -1);
  REQUIRE(ctx5->g_at_prime(3) == Rational(8));
  // find a prime with chi1 = 1 mod 5: 11 = 1 mod 5 is a QR
  REQUIRE(ctx5->chi1_at(11) == 1);
  REQUIRE(ctx5->g_at_prime(11) == Rational((11 - 1) * (11 - 1), 2 * 11 - 1));
  // chi1(p)=1 with p=3: use q=11, chi = Legendre; 3 is a QR mod 11
  auto ctx11 = make_ctx(11);
  REQUIRE(ctx11->chi1_at(3) == 1);
  REQUIRE(ctx11->g_at_prime(3) == Rational(4, 5));
}

TEST_CASE("g at primes inverts the numeric series within 1e-12") {
  for (u64 q : {5ull, 8ull, 12ull}) {
    auto ctx = make_ctx(q);
    SmallSieve sieve(1000);
    for (u64 p : sieve.primes()) {
      // sum_{k>=1} a(p^k) p^{-k} numerically, then invert
      double x = 1.0 / static_cast<double>(p);
      double sum = 0, pk = 1;
      for (unsigned k = 1; k <= 64; ++k) {
        pk *= x;
        sum += static_cast<double>(ctx->a_prime_power(p, k)) * pk;
        if (pk < 1e-18) break;
      }
      double closed = static_cast<double>(ctx->g_at_prime(p).convert_to<double>());
      REQUIRE(std::abs(1.0 / sum - closed) <= 1e-12 * std::abs(closed));
    }
  }
}

TEST_CASE("h is totally multiplicative up to 100") {
  auto ctx = make_ctx(12, 0);
  for (u64 m = 1; m <= 100; ++m) {
    for (u64 n = 1; n <= 100; ++n) {
      REQUIRE(ctx->h(m * n) == ctx->h(m) * ctx->h(n));
    }
  }
}

TEST_CASE("g and h basics") {
  auto ctx = make_ctx(5);
  REQUIRE(ctx->g(1) == Rational(1));
  REQUIRE(ctx->h(1) == Rational(1));
  // squarefree q: g(q) = phi(q), h(q) = q
  for (u64 q : {5ull, 15ull, 21ull}) {
    auto reals = real_quadratic_characters(q);
    ExceptionalContext c(q, reals.front());
    REQUIRE(c.g(q) == Rational(static_cast<long>(euler_phi(q))));
    REQUIRE(c.h(q) == Rational(static_cast<long>(q)));
  }
  // g(n) = h(n) prod
  // (1 - 1/h(p)) and direct product of g(p) agree on squarefree n <= 200
  auto ctx8 = make_ctx(8, 1);
  for (u64 n = 1; n <= 200; ++n) {
    if (mobius(n) == 0) continue;
    Rational direct(1);
    for (auto& pp : factorize(n)) direct *= ctx8->g_at_prime(pp.prime);
    REQUIRE(ctx8->g(n) == direct);
  }
  // nonnegativity
  for (u64 n = 1; n <= 200; ++n) {
    REQUIRE(ctx8->g(n) >= 0);
    REQUIRE(ctx8->h(n) >= 0);
  }
}

TEST_CASE("Dirichlet series link: sum a(n) n^-2 approaches zeta(2) L(2, chi1)") {
  const u64 N = 10000;
  for (u64 q : {5ull, 12ull}) {
    auto ctx = make_ctx(q, q == 12 ? 2 : 0);
    SmallSieve sieve(N);
    Interval partial(0L);
    for (u64 n = 1; n <= N; ++n) {
      u64 an = ctx->a(sieve.factorize(n));
      if (an) partial = partial + Interval(static_cast<long>(an)) / Interval(static_cast<long>(n * n));
    }
    ComplexInterval target = zeta(ComplexInterval(2L)) *
                             l_eval(ComplexInterval(2L), ctx->chi1());
    Interval tail = divisor_tail_over_n2(N);
    Interval widened = hull(partial - tail, partial + tail);
    REQUIRE(widened.intersects(target.re));
  }
}

TEST_CASE("context validates its character") {
  auto complex_chi = enumerate_characters(5)[1];
  if (complex_chi.order() > 2) {
    REQUIRE_THROWS_AS(ExceptionalContext(5, complex_chi), std::invalid_argument);
  }
  auto real5 = real_quadratic_characters(5).front();
  REQUIRE_THROWS_AS(ExceptionalContext(7, real5), std::invalid_argument);
}
