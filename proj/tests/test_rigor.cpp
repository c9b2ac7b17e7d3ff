#include <catch2/catch_amalgamated.hpp>

#include "zrepel/rigor.hpp"

using namespace zrepel;

TEST_CASE("series tails") {
  // sum_{n>=2} 1/(n^2 log n) < 1
  Interval s = series_tail_rigorous(SeriesTerm::inv_n2_log_n, 2);
  REQUIRE(certainly_less(s, Interval(1L)));
  REQUIRE(s.contains(0.6055185647516916));

  // sum_{n>=2} n^{-2} = pi^2/6 - 1
  Interval s2 = series_tail_rigorous(SeriesTerm::inv_pow_2, 2);
  Interval ref = pow_si(Interval::pi(), 2) / 6L - Interval(1L);
  REQUIRE(s2.intersects(ref));

  // sum_{n>=40000} n^{-3/2} is about 0.01
  Interval s32 = series_tail_rigorous(SeriesTerm::inv_pow_3_2, 40000);
  REQUIRE(s32.contains(0.0100000645));
  REQUIRE(certainly_less(s32, Interval::from_decimal("0.0101")));

  REQUIRE_THROWS_AS(series_tail_rigorous(SeriesTerm::inv_pow_2, 1), std::invalid_argument);
}

TEST_CASE("prime products") {
  PrimeFactorSpec spec{{{Rational(1), Rational(3, 2)}, {Rational(3), Rational(3)}}};
  REQUIRE(prime_product_rigorous(spec, 1).contains(1L));  // empty range
  Interval p40k = prime_product_rigorous(spec, 40000);
  REQUIRE(certainly_leq(p40k, Interval::from_decimal("3.15")));
  REQUIRE(p40k.contains(3.140659083));
  Interval tail = prime_product_tail(spec, 40000);
  REQUIRE(certainly_leq(tail, Interval::from_decimal("1.1")));
  REQUIRE(mpfr_cmp_si(tail.lo(), 1) >= 0);
  PrimeFactorSpec bad{{{Rational(1), Rational(1)}}};
  REQUIRE_THROWS_AS(prime_product_tail(bad, 100), std::domain_error);
}

TEST_CASE("individual certificates") {
  REQUIRE(verify_certificate("int_4_5").verdict == Verdict::verified);
  REQUIRE(verify_certificate("series_n2logn").verdict == Verdict::verified);
  REQUIRE_THROWS_AS(verify_certificate("no_such_cert"), std::invalid_argument);
}

TEST_CASE("the full registry verifies") {
  auto all = verify_all();
  REQUIRE(all.size() == 10);
  for (auto& c : all) {
    INFO(c.name << ": " << to_string(c.verdict) << " " << c.detail);
    REQUIRE(c.verdict == Verdict::verified);
  }
  // C5 reports both variants explicitly
  for (auto& c : all) {
    if (c.name == "ratio_integral") {
      REQUIRE(c.detail.find("squared variant") != std::string::npos);
      REQUIRE(c.detail.find("printed") != std::string::npos);
    }
    if (c.name == "zeta_half_window") {
      REQUIRE(c.detail.find("sampled") != std::string::npos);
    }
  }
}

TEST_CASE("verdicts and enclosures are bit-identical across runs") {
  for (const char* name : {"int_4_5", "maple_ineq", "small_arith", "theta_endgame"}) {
    auto a = verify_certificate(name);
    auto b = verify_certificate(name);
    REQUIRE(a.verdict == b.verdict);
    REQUIRE(a.enclosure.lo_decimal(30) == b.enclosure.lo_decimal(30));
    REQUIRE(a.enclosure.hi_decimal(30) == b.enclosure.hi_decimal(30));
    REQUIRE(a.detail == b.detail);
  }
}

TEST_CASE("precision retry path") {
  // at 16 bits many enclosures straddle; the retry at 32 bits may still be
  // inconclusive but the mechanism must not loop or throw
  auto c = verify_certificate("small_arith", 24);
  REQUIRE((c.verdict == Verdict::verified || c.verdict == Verdict::inconclusive));
  auto c80 = verify_certificate("small_arith", 80);
  REQUIRE(c80.verdict == Verdict::verified);
}
