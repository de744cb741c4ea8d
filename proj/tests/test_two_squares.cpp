#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "qrkit/errors.hpp"
#include "qrkit/gaussian.hpp"
#include "qrkit/modular.hpp"
#include "qrkit/two_squares.hpp"

using namespace qrkit;

TEST_CASE("decompose agrees with exhaustive search for all q < 10^4") {
  for (uint64_t q : prime_sieve(10000)) {
    if (q % 4 != 1) continue;
    TwoSquares d = decompose(q);
    // the odd/even split of q = a^2 + b^2 over positives is unique
    int64_t ea = 0, eb = 0;
    for (int64_t a = 1; uint64_t(a) * a <= q; a += 2) {
      uint64_t rest = q - uint64_t(a) * a;
      uint64_t b = isqrt_u64(rest);
      if (b * b == rest) {
        ea = a;
        eb = int64_t(b);
        break;
      }
    }
    CHECK(d.q == q);
    CHECK(d.a == ea);
    CHECK(d.b == eb);
    CHECK(d.a % 2 == 1);
    CHECK(d.b % 2 == 0);
    CHECK(d.a > 0);
    CHECK(d.b > 0);
    CHECK(uint64_t(d.a) * d.a + uint64_t(d.b) * d.b == q);
    // a/b is a square root of -1
    uint64_t ab = mul_mod(uint64_t(d.a), inv_mod(uint64_t(d.b), q), q);
    CHECK(mul_mod(ab, ab, q) == q - 1);
  }
}

TEST_CASE("fixed decompositions") {
  CHECK(decompose(5) == TwoSquares{5, 1, 2});
  CHECK(decompose(13) == TwoSquares{13, 3, 2});
  CHECK(decompose(17) == TwoSquares{17, 1, 4});
  CHECK(decompose(29) == TwoSquares{29, 5, 2});
  CHECK(decompose(41) == TwoSquares{41, 5, 4});
}

TEST_CASE("decompose rejects non-split inputs") {
  for (uint64_t q : {2ull, 7ull, 9ull, 21ull, 25ull}) {
    CHECK_THROWS_AS(decompose(q), DomainError);
  }
  try {
    decompose(7);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "BadResidueClass");
  }
}

TEST_CASE("primary_signs fixes a + b = 1 mod 4") {
  CHECK(primary_signs(decompose(5)) == std::pair<int64_t, int64_t>{-1, 2});
  CHECK(primary_signs(decompose(13)) == std::pair<int64_t, int64_t>{3, 2});
  CHECK(primary_signs(decompose(29)) == std::pair<int64_t, int64_t>{-5, 2});
  CHECK(primary_signs(decompose(41)) == std::pair<int64_t, int64_t>{5, 4});
  for (uint64_t q : prime_sieve(2000)) {
    if (q % 4 != 1) continue;
    auto [a, b] = primary_signs(decompose(q));
    CHECK(((a + b) % 4 + 4) % 4 == 1);
    CHECK(b % 2 == 0);
    CHECK(b > 0);
    CHECK(uint64_t(a < 0 ? -a : a) == uint64_t(decompose(q).a));
  }
}

TEST_CASE("power classes of p^((q-1)/4)") {
  CHECK(power_class(7, decompose(5)) == PowerClass::MinusAB);
  CHECK(power_class(11, decompose(5)) == PowerClass::PlusOne);
  // membership is exhaustive over p coprime to q
  for (uint64_t q : {5ull, 13ull, 17ull}) {
    TwoSquares d = decompose(q);
    for (uint64_t p : prime_sieve(300)) {
      if (p % q == 0) {
        CHECK_THROWS_AS(power_class(p, d), DomainError);
        continue;
      }
      PowerClass c = power_class(p, d);
      uint64_t w = pow_mod(p % q, (q - 1) / 4, q);
      uint64_t ab = mul_mod(uint64_t(d.a), inv_mod(uint64_t(d.b), q), q);
      uint64_t want = c == PowerClass::PlusOne    ? 1
                      : c == PowerClass::MinusOne ? q - 1
                      : c == PowerClass::PlusAB   ? ab
                                                  : q - ab;
      CHECK(w == want);
    }
  }
  try {
    power_class(5, decompose(5));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "NoClassMatch");
  }
}

TEST_CASE("round-trip: fourth-root class mod q matches the quartic class mod p") {
  // with primary signs, ((-1)^((p-1)/2) p)^((q-1)/4) falling in
  // {1, -a/b, -1, a/b} indexes the quartic class of a/b mod p
  for (uint64_t p : prime_sieve(500)) {
    if (p == 2) continue;
    for (uint64_t q : prime_sieve(200)) {
      if (q % 4 != 1 || q == p) continue;
      auto [sa, sb] = primary_signs(decompose(q));
      if (mod_i64(sb, p) == 0) continue;  // p | b excluded
      uint64_t u = mul_mod(mod_i64(-sa, q), inv_mod(mod_i64(sb, q), q), q);
      uint64_t base = ((p - 1) / 2) % 2 == 0 ? p % q : q - p % q;
      uint64_t t = pow_mod(base, (q - 1) / 4, q);
      int lhs_r = t == 1 ? 0 : t == u ? 1 : t == q - 1 ? 2 : 3;
      if (lhs_r == 3) CHECK(t == neg_mod(u, q));
      CHECK(lhs_r == quartic_class(Rational{sa, sb}, p));
    }
  }
}
