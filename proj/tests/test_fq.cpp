#include <doctest.h>

#include "dhs/fq.hpp"
#include "dhs/oracles.hpp"
#include "dhs/prng.hpp"

using namespace dhs;

TEST_CASE("lucas binomials: pinned values") {
  CHECK(lucas_binom(7, 2, 5) == 1);   // C(7,2)=21
  CHECK(lucas_binom(-1, 3, 5) == 4);  // (-1)^3
  CHECK(lucas_binom(5, 1, 5) == 0);   // C(p,1)
  CHECK(lucas_binom(0, 0, 7) == 1);
  CHECK(lucas_binom(3, 5, 7) == 0);
}

TEST_CASE("lucas binomials agree with the big-integer oracle") {
  for (i64 p : {5, 7}) {
    SplitMix64 rng(2024 + p);
    i64 bound = p * p * p * p;
    for (int t = 0; t < 400; ++t) {
      i64 m = static_cast<i64>(rng.below(static_cast<u64>(bound)));
      i64 n = static_cast<i64>(rng.below(static_cast<u64>(bound)));
      CHECK(lucas_binom(m, n, p) == oracle::bigint_binom_mod(m, n, p));
    }
    // negative upper arguments against the oracle as well
    for (int t = 0; t < 200; ++t) {
      i64 m = -1 - static_cast<i64>(rng.below(200));
      i64 n = static_cast<i64>(rng.below(40));
      CHECK(lucas_binom(m, n, p) == oracle::bigint_binom_mod(m, n, p));
    }
  }
}

TEST_CASE("negative-argument reflection") {
  for (i64 p : {5, 7, 11})
    for (i64 m = -30; m < 0; ++m)
      for (i64 n = 0; n <= 12; ++n) {
        i64 lhs = lucas_binom(m, n, p);
        i64 rhs = lucas_binom(n - m - 1, n, p);
        if (n % 2 == 1) rhs = mod_canon(-rhs, p);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("Vandermonde convolution as the divided-power composition law") {
  for (i64 p : {5, 7}) {
    SplitMix64 rng(99 + p);
    for (int t = 0; t < 60; ++t) {
      i64 a = static_cast<i64>(rng.below(40));
      i64 b = static_cast<i64>(rng.below(40));
      i64 n = static_cast<i64>(rng.below(20));
      i64 sum = 0;
      for (i64 k = 0; k <= n; ++k)
        sum = mod_canon(sum + lucas_binom(a, k, p) * lucas_binom(b, n - k, p), p);
      CHECK(sum == lucas_binom(a + b, n, p));
    }
  }
}

TEST_CASE("divided multinomials") {
  std::vector<i64> v1{1, 1};
  CHECK(multinomial_mod(v1, 5) == 2);
  std::vector<i64> v2{5, 5};
  CHECK(multinomial_mod(v2, 5) == oracle::bigint_multinomial_mod({5, 5}, 5));
  CHECK(multinomial_mod(v2, 5) == 2);  // 252 mod 5
  std::vector<i64> v3{0, 0, 0};
  CHECK(multinomial_mod(v3, 7) == 1);
  std::vector<i64> v4{2, 3, 1};
  CHECK(multinomial_mod(v4, 7) == oracle::bigint_multinomial_mod({2, 3, 1}, 7));
}

TEST_CASE("characteristic gate") {
  CHECK_THROWS_AS(require_odd_characteristic_gt3(2, "x"), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_characteristic_gt3(3, "x"), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_characteristic_gt3(6, "x"), std::invalid_argument);
  CHECK_NOTHROW(require_odd_characteristic_gt3(5, "x"));
}

TEST_CASE("extension fields from the fixed modulus table") {
  for (i64 q : {4, 8, 9, 16, 25, 27}) {
    const GaloisField& F = GaloisField::get(q);
    CHECK(F.q() == q);
    for (int a = 1; a < q; ++a) {
      CHECK(F.mul(a, F.inv(a)) == 1);
      int aq = a;  // a^q computed by repeated multiplication; a^q = a in F_q
      for (i64 e = 1; e < F.q(); ++e) aq = F.mul(aq, a);
      CHECK(aq == a);
    }
    SplitMix64 rng(static_cast<u64>(q));
    for (int t = 0; t < 50; ++t) {
      int a = static_cast<int>(rng.below(static_cast<u64>(q)));
      int b = static_cast<int>(rng.below(static_cast<u64>(q)));
      int c = static_cast<int>(rng.below(static_cast<u64>(q)));
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
  }
  CHECK_THROWS_AS(GaloisField(12), std::invalid_argument);
}

TEST_CASE("prime field inverses") {
  const GaloisField& F5 = GaloisField::get(5);
  for (int a = 1; a < 5; ++a) CHECK(F5.mul(a, F5.inv(a)) == 1);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(0, 5), std::domain_error);
}
