#include <catch2/catch_amalgamated.hpp>

#include "zrepel/integers.hpp"

using namespace zrepel;

namespace {

// trial-division oracle for the factorizer
Factorization trial_factor(u64 n) {
  Factorization f;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.push_back({p, e});
    }
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

}  // namespace

TEST_CASE("factorize basics") {
  REQUIRE(factorize(1).empty());
  REQUIRE(factorize(12) == Factorization{{2, 2}, {3, 1}});
  REQUIRE(factorize(400000) == Factorization{{2, 7}, {5, 5}});
}

TEST_CASE("factorize agrees with trial division") {
  for (u64 n : {2ull, 97ull, 1024ull, 3600ull, 999983ull, 1000003ull * 3ull, 600851475143ull}) {
    REQUIRE(factorize(n) == trial_factor(n));
    REQUIRE(factorization_value(factorize(n)) == n);
  }
  for (u64 n = 1; n <= 2000; ++n) REQUIRE(factorize(n) == trial_factor(n));
}

TEST_CASE("deterministic primality matches trial division") {
  for (u64 n = 2; n <= 10000; ++n) {
    bool trial = trial_factor(n).size() == 1 && trial_factor(n)[0].exponent == 1;
    REQUIRE(is_prime(n) == trial);
  }
  REQUIRE(is_prime(1000000007ull));
  REQUIRE(!is_prime(1000000007ull * 998244353ull));
  // strong pseudoprime candidates
  REQUIRE(!is_prime(3215031751ull));
  REQUIRE(!is_prime(3825123056546413051ull));
}

TEST_CASE("mobius, omega, divisors") {
  REQUIRE(mobius(1) == 1);
  REQUIRE(omega(1) == 0);
  REQUIRE(divisors(1) == std::vector<u64>{1});
  REQUIRE(mobius(12) == 0);
  REQUIRE(mobius(30) == -1);
  REQUIRE(omega(30) == 3);
  REQUIRE(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  REQUIRE(euler_phi(1) == 1);
  REQUIRE(euler_phi(12) == 4);
  REQUIRE(euler_phi(400000) == 160000);
}

TEST_CASE("small sieve tables agree with direct computation") {
  SmallSieve sieve(3000);
  for (u64 n = 1; n <= 3000; ++n) {
    REQUIRE(sieve.mobius(n) == mobius(n));
    if (n >= 2) REQUIRE(sieve.factorize(n) == factorize(n));
    REQUIRE(sieve.squarefree(n) == (mobius(n) != 0));
  }
}
