#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zrepel/characters.hpp"

using namespace zrepel;

TEST_CASE("enumeration counts and principal first") {
  REQUIRE(enumerate_characters(1).size() == 1);
  REQUIRE(enumerate_characters(5).size() == 4);
  auto c12 = enumerate_characters(12);
  REQUIRE(c12.size() == 4);
  REQUIRE(c12[0].is_principal());
  // (Z/12)* = C2 x C2: every character real
  int real = 0;
  for (auto& chi : c12)
    if (chi.is_real()) ++real;
  REQUIRE(real == 4);
  for (u64 q = 1; q <= 60; ++q) REQUIRE(enumerate_characters(q).size() == euler_phi(q));
}

TEST_CASE("enumeration cap error names the remedy") {
  REQUIRE_THROWS_AS(enumerate_characters(9973 * 9967, 1000), EnumerationCapExceeded);
  try {
    enumerate_characters(9973 * 9967, 1000);
  } catch (const EnumerationCapExceeded& e) {
    REQUIRE(std::string(e.what()).find("targeted constructors") != std::string::npos);
  }
}

TEST_CASE("principal character evaluates to 1 on units, 0 otherwise") {
  for (u64 q : {1ull, 4ull, 12ull, 36ull, 101ull}) {
    auto chi0 = DirichletCharacter::principal(q);
    for (i64 n = -20; n <= 40; ++n) {
      if (q == 1 || std::gcd(((n % (i64)q) + (i64)q) % (i64)q, (i64)q) == 1) {
        REQUIRE(chi0(n).is_one());
      } else {
        REQUIRE(chi0(n).zero);
      }
    }
  }
}

TEST_CASE("unique nonprincipal character mod 4 sends 3 to -1") {
  auto chars = enumerate_characters(4);
  REQUIRE(chars.size() == 2);
  REQUIRE(chars[1](3).as_int() == -1);
  REQUIRE(chars[1](2).zero);
  REQUIRE(chars[1](5).is_one());  // periodicity
}

TEST_CASE("complete multiplicativity on random triples") {
  std::mt19937_64 rng(0xABCDEFu);
  std::uniform_int_distribution<u64> qd(1, 200);
  std::uniform_int_distribution<i64> nd(-5000, 5000);
  for (int i = 0; i < 10000; ++i) {
    u64 q = qd(rng);
    auto chars = enumerate_characters(q);
    auto& chi = chars[rng() % chars.size()];
    i64 m = nd(rng), n = nd(rng);
    REQUIRE(chi(m * n) == chi(m) * chi(n));
  }
}

TEST_CASE("orthogonality in both directions for q <= 60") {
  for (u64 q = 1; q <= 60; ++q) {
    auto chars = enumerate_characters(q);
    u64 lambda = UnitGroup::for_modulus(q)->exponent();
    for (auto& chi : chars) {
      if (chi.is_principal()) continue;
      // sum over a period vanishes exactly: accumulate angle counts
      std::vector<long> counts(lambda, 0);
      for (u64 n = 1; n <= q; ++n) {
        RootOfUnity v = chi(static_cast<i64>(n));
        if (!v.zero) counts[v.num * (lambda / v.den)] += 1;
      }
      // sum of e(k/lambda) over collected angles must be 0; for character
      // sums the multiset is a union of full cosets of a nontrivial
      // subgroup, so counts are constant along those cosets. Verify the sum
      // numerically-exactly via pairing with the conjugate: sum == 0 iff the
      // counts vector is orthogonal to every root-of-unity evaluation; the
      // cheap exact check is that sum over the subgroup generated by the
      // character's image vanishes. Use the defining property instead:
      // multiply the sum by (1 - chi(g)) for a unit g with chi(g) != 1.
      // Here we verify numerically with exact angle bookkeeping:
      // sum_{n} chi(n) = sum_k counts[k] e(k/lambda) and applying the
      // substitution n -> g n permutes the terms, so S = chi(g) S, chi(g)
      // != 1, hence S = 0. The bookkeeping check: counts invariant under
      // rotation by chi(g)'s angle.
      u64 g = 0;
      RootOfUnity chig;
      for (u64 cand = 2; cand <= q + 1; ++cand) {
        RootOfUnity v = chi(static_cast<i64>(cand));
        if (!v.zero && !v.is_one()) {
          g = cand;
          chig = v;
          break;
        }
      }
      REQUIRE(g != 0);
      u64 shift = chig.num * (lambda / chig.den);
      for (u64 k = 0; k < lambda; ++k) {
        REQUIRE(counts[k] == counts[(k + shift) % lambda]);
      }
    }
    // sum over characters: phi(q) iff n == 1 mod q
    for (u64 n = 1; n <= q; ++n) {
      long real_sum_times_lambda = 0;  // exact: sum of chi(n) must be rational integer
      // collect angles
      std::map<u64, long> angle_counts;
      for (auto& chi : chars) {
        RootOfUnity v = chi(static_cast<i64>(n));
        if (!v.zero) angle_counts[v.num * (lambda / v.den)] += 1;
      }
      if (std::gcd(n, q) != 1) {
        REQUIRE(angle_counts.empty());
        continue;
      }
      if (n % q == 1 % q) {
        REQUIRE(angle_counts.size() == 1);
        REQUIRE(angle_counts.begin()->second == static_cast<long>(chars.size()));
      } else {
        // dual-group orthogonality: the values of chi(n) over all chi form
        // cosets of a nontrivial subgroup of roots of unity, each angle class
        // equally often; verify rotation invariance under any attained
        // nontrivial angle.
        u64 shift = 0;
        for (auto& [k, cnt] : angle_counts) {
          if (k != 0) {
            shift = k;
            break;
          }
        }
        REQUIRE(shift != 0);
        for (auto& [k, cnt] : angle_counts) {
          auto it = angle_counts.find((k + shift) % lambda);
          REQUIRE(it != angle_counts.end());
          REQUIRE(it->second == cnt);
        }
      }
      (void)real_sum_times_lambda;
    }
  }
}

TEST_CASE("conductor closed form matches brute-force induction") {
  // conductor = least f | q with chi trivial on units congruent to 1 mod f
  auto brute_conductor = [](const DirichletCharacter& chi) {
    u64 q = chi.modulus();
    for (u64 f : divisors(q)) {
      bool trivial = true;
      for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        if (a % f == 1 % f && !chi(static_cast<i64>(a)).is_one()) {
          trivial = false;
          break;
        }
      }
      if (trivial) return f;
    }
    return q;
  };
  for (u64 q : {1ull, 3ull, 4ull, 5ull, 8ull, 9ull, 12ull, 16ull, 24ull, 36ull, 40ull, 45ull, 60ull}) {
    for (auto& chi : enumerate_characters(q)) {
      REQUIRE(chi.conductor() == brute_conductor(chi));
    }
  }
}

TEST_CASE("conductor examples") {
  for (u64 q : {4ull, 12ull, 36ull}) {
    REQUIRE(DirichletCharacter::principal(q).conductor() == 1);
  }
  auto c4 = enumerate_characters(4);
  REQUIRE(c4[1].conductor() == 4);
  // the character mod 12 induced from the nonprincipal one mod 4
  bool found = false;
  for (auto& chi : enumerate_characters(12)) {
    if (chi.conductor() == 4) {
      found = true;
      // values agree with the mod-4 character on units
      for (i64 n = 1; n <= 12; ++n) {
        if (std::gcd(n, i64{12}) != 1) continue;
        REQUIRE(chi(n) == c4[1](n));
      }
    }
  }
  REQUIRE(found);
}

TEST_CASE("real quadratic character counts") {
  REQUIRE(real_quadratic_characters(4).size() == 1);
  REQUIRE(real_quadratic_characters(8).size() == 3);
  REQUIRE(real_quadratic_characters(9).size() == 1);
  REQUIRE(real_quadratic_characters(5).size() == 1);
}

TEST_CASE("reality brute-force cross-check up to 200") {
  for (u64 q = 3; q <= 200; ++q) {
    auto reals = real_quadratic_characters(q);
    for (auto& chi : enumerate_characters(q)) {
      bool all_real = true, some_negative = false;
      for (u64 n = 1; n <= q; ++n) {
        RootOfUnity v = chi(static_cast<i64>(n));
        if (!v.is_real()) {
          all_real = false;
          break;
        }
        if (v.is_minus_one()) some_negative = true;
      }
      bool in_list = false;
      for (auto& r : reals)
        if (r == chi) in_list = true;
      REQUIRE(in_list == (all_real && some_negative));
    }
  }
}

TEST_CASE("kronecker symbol against the Euler criterion") {
  REQUIRE(kronecker(2, 5) == -1);
  for (i64 n = 0; n <= 50; ++n) REQUIRE(kronecker(1, n) == 1);
  SmallSieve sieve(500);
  for (u64 p : sieve.primes()) {
    if (p == 2) continue;
    for (i64 a = 0; a < static_cast<i64>(p); ++a) {
      u64 e = powmod(static_cast<u64>(a), (p - 1) / 2, p);
      int euler = (e == 0) ? 0 : (e == 1 ? 1 : -1);
      REQUIRE(kronecker(a, static_cast<i64>(p)) == euler);
    }
  }
}

TEST_CASE("kronecker standard conventions") {
  REQUIRE(kronecker(0, 1) == 1);
  REQUIRE(kronecker(1, 0) == 1);
  REQUIRE(kronecker(-1, 0) == 1);
  REQUIRE(kronecker(2, 0) == 0);
  REQUIRE(kronecker(3, 2) == -1);   // 3 mod 8
  REQUIRE(kronecker(7, 2) == 1);    // 7 mod 8
  REQUIRE(kronecker(4, 2) == 0);
  REQUIRE(kronecker(-1, 3) == -1);
  REQUIRE(kronecker(-1, 5) == 1);
  REQUIRE_THROWS_AS(kronecker(0, 0), std::invalid_argument);
  // quadratic characters: kronecker(12, .) matches a real character mod 12
  auto reals12 = real_quadratic_characters(12);
  bool matched = false;
  for (auto& chi : reals12) {
    bool same = true;
    for (i64 n = 1; n <= 24; ++n) {
      int kv = kronecker(12, n);
      RootOfUnity cv = chi(n);
      if ((cv.zero ? 0 : cv.as_int()) != kv) {
        same = false;
        break;
      }
    }
    if (same) matched = true;
  }
  REQUIRE(matched);
}

TEST_CASE("character product and conjugation") {
  auto chars = enumerate_characters(5);
  for (auto& a : chars) {
    for (auto& b : chars) {
      auto ab = a * b;
      for (i64 n = 1; n <= 5; ++n) REQUIRE(ab(n) == a(n) * b(n));
    }
    auto ac = a.conj();
    auto id = a * ac;
    REQUIRE(id.is_principal());
  }
}
