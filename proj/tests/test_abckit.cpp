#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "abckit.hpp"
#include "apsearch.hpp"
#include "doctest.h"
#include "intcore.hpp"
#include "oracles.hpp"

using namespace powerful;

TEST_CASE("make_coprime_triple") {
  auto t = make_coprime_triple(8, 9);
  CHECK(t.a == 1);
  CHECK(t.b == 8);
  CHECK(t.c == 9);
  CHECK(t.rad == 6);

  t = make_coprime_triple(288, 289);
  CHECK(t.a == 1);
  CHECK(t.b == 288);
  CHECK(t.c == 289);
  CHECK(t.rad == 102);  // 2 * 3 * 17

  t = make_coprime_triple(21, 42);  // full collapse through d = 21
  CHECK(t.a == 1);
  CHECK(t.b == 1);
  CHECK(t.c == 2);

  CHECK_THROWS_AS(make_coprime_triple(9, 9), domain_error);
  CHECK_THROWS_AS(make_coprime_triple(0, 9), domain_error);
}

TEST_CASE("coprime reduction holds for random pairs") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 10000; ++i) {
    uint64_t c = 2 + rng() % 1000000000000ULL;
    uint64_t b = 1 + rng() % (c - 1);
    auto t = make_coprime_triple(b, c);
    CHECK(t.a + t.b == t.c);
    CHECK(t.a <= t.b);
    CHECK(gcd(t.a, t.b) == 1);
    CHECK(gcd(t.a, t.c) == 1);
    CHECK(gcd(t.b, t.c) == 1);
  }
}

TEST_CASE("radical multiplies across coprime triples") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 300; ++i) {
    uint64_t c = 2 + rng() % 1000000;
    uint64_t b = 1 + rng() % (c - 1);
    auto t = make_coprime_triple(b, c);
    CHECK(t.rad == radical(checked_mul(checked_mul(t.a, t.b), t.c)));
  }
}

TEST_CASE("abc_quality") {
  CHECK(abc_quality(1, 8, 9) == doctest::Approx(1.2262943855).epsilon(1e-9));
  CHECK(abc_quality(1, 2, 3) == doctest::Approx(std::log(3.0) / std::log(6.0)).epsilon(1e-12));
  CHECK(abc_quality(1, 1, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(abc_quality(2, 4, 6), domain_error);   // not coprime
  CHECK_THROWS_AS(abc_quality(1, 3, 5), domain_error);   // wrong sum
  CHECK_THROWS_AS(abc_quality(3, 1, 4), domain_error);   // misordered
}

TEST_CASE("powerful_gap_scan") {
  auto records = powerful_gap_scan(100, 3, 10);
  REQUIRE(records.size() == 3);
  CHECK(records[0].b == 27);
  CHECK(records[0].c == 32);
  CHECK(records[0].exponent == doctest::Approx(std::log(5.0) / std::log(32.0)).epsilon(1e-12));
  CHECK(records[1].b == 8);   // (8, 16), exponent 0.75
  CHECK(records[2].b == 1);   // (1, 8), exponent log7/log8

  auto tight = powerful_gap_scan(10, 2, 1);
  REQUIRE(tight.size() == 1);
  CHECK(tight[0].b == 8);
  CHECK(tight[0].gap == 1);
  CHECK(tight[0].exponent == 0.0);

  auto pairs_only = powerful_gap_scan(300, 2, 1);
  REQUIRE(pairs_only.size() == 2);
  CHECK(pairs_only[0].b == 8);
  CHECK(pairs_only[1].b == 288);

  // exponents ascend
  auto many = powerful_gap_scan(100000, 2, 100);
  for (size_t i = 0; i + 1 < many.size(); ++i) CHECK(many[i].exponent <= many[i + 1].exponent);
}

TEST_CASE("gap scan agrees with consecutive pairs at gap 1") {
  auto pairs = find_consecutive_pairs(1000000);
  auto records = powerful_gap_scan(1000000, 2, 1);
  REQUIRE(pairs.size() == records.size());
  // records are sorted by exponent (all zero) then by b, so orders coincide
  for (size_t i = 0; i < pairs.size(); ++i) {
    CHECK(records[i].b == pairs[i].first);
    CHECK(records[i].c == pairs[i].second);
  }
}

TEST_CASE("radical of k-full numbers stays below the k-th root") {
  for (uint32_t k = 2; k <= 4; ++k) {
    auto values = enumerate_kfull_upto(200000, k);
    for (Nat n : values) {
      CHECK(*try_pow(radical(n), k) <= n);
      CHECK(radical(n) <= ikroot(n, k));
    }
  }
}

TEST_CASE("ap_abc_certificate on the canonical progression") {
  auto cert = ap_abc_certificate({49, 169, 289});
  CHECK(cert.divisor == 1);
  CHECK(cert.triple.a == 14161);
  CHECK(cert.triple.b == 14400);
  CHECK(cert.triple.c == 28561);
  CHECK(cert.triple.rad == 46410);
  CHECK(cert.triple.quality == doctest::Approx(0.9548).epsilon(1e-3));
}

TEST_CASE("ap_abc_certificate collapses common factors") {
  auto cert = ap_abc_certificate({108, 216, 324});
  CHECK(cert.divisor == 108);
  CHECK(cert.triple.a == 1);
  CHECK(cert.triple.b == 3);
  CHECK(cert.triple.c == 4);
  CHECK(cert.triple.a + cert.triple.b == cert.triple.c);
}

TEST_CASE("certificate algebra holds for every discovered progression") {
  auto aps = find_3aps(Interval(0, 200000));
  CHECK(aps.size() > 100);
  for (const auto& t : aps) {
    auto cert = ap_abc_certificate(t);
    CHECK(cert.triple.a + cert.triple.b == cert.triple.c);
    CHECK(gcd(cert.triple.a, cert.triple.b) == 1);
    CHECK(gcd(cert.triple.b, cert.triple.c) == 1);
    CHECK(gcd(cert.triple.a, cert.triple.c) == 1);
    // the certified c is (n2/D)^2 exactly
    CHECK(cert.triple.c == (t.n2 / cert.divisor) * (t.n2 / cert.divisor));
  }
}

TEST_CASE("certificate rejects non-progressions") {
  CHECK_THROWS_AS(ap_abc_certificate({4, 9, 16}), domain_error);   // not an AP
  CHECK_THROWS_AS(ap_abc_certificate({4, 12, 20}), domain_error);  // 12, 20 not squarefull
  CHECK_THROWS_AS(ap_abc_certificate({9, 9, 9}), domain_error);
}
