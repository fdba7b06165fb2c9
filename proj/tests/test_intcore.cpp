#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "intcore.hpp"
#include "oracles.hpp"
#include "primes.hpp"

using namespace powerful;

TEST_CASE("ikroot on exact and near powers") {
  CHECK(ikroot(100, 2) == 10);
  CHECK(ikroot(99, 2) == 9);
  CHECK(ikroot(26, 3) == 2);
  CHECK(ikroot(27, 3) == 3);
  CHECK(ikroot(0, 5) == 0);
  CHECK(ikroot(1, 7) == 1);
  CHECK(ikroot(7, 1) == 7);
  CHECK(ikroot(((Nat)1 << 126), 2) == ((Nat)1 << 63));
  CHECK(ikroot(((Nat)1 << 126) - 1, 2) == ((Nat)1 << 63) - 1);
  CHECK(ikroot(kNatMax, 2) == (Nat)13043817825332782212ULL);
  CHECK_THROWS_AS(ikroot(5, 0), domain_error);
}

TEST_CASE("ikroot bracketing property on random inputs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    Nat n = ((Nat)rng() << 64 | rng()) & kNatMax;
    uint32_t k = 1 + rng() % 16;
    Nat r = ikroot(n, k);
    CHECK(*try_pow(r, k) <= n);
    auto above = try_pow(r + 1, k);
    CHECK((!above || *above > n));
  }
}

TEST_CASE("factorize canonical examples") {
  auto f = factorize(72);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PrimePower{2, 3});
  CHECK(f[1] == PrimePower{3, 2});
  f = factorize(243);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == PrimePower{3, 5});
  CHECK(factorize(1).empty());
  CHECK_THROWS_AS(factorize(0), domain_error);
}

TEST_CASE("factorize round-trips and matches trial division") {
  for (uint64_t n = 1; n <= 3000; ++n) {
    auto f = factorize(n);
    CHECK(value_of(f) == n);
    auto nf = oracle::naive_factorize(n);
    REQUIRE(f.size() == nf.size());
    size_t i = 0;
    for (auto& [p, e] : nf) {
      CHECK(f[i].prime == p);
      CHECK(f[i].exponent == e);
      ++i;
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    uint64_t n = 1 + rng() % 1000000000000ULL;
    auto f = factorize(n);
    CHECK(value_of(f) == n);
    for (size_t j = 0; j + 1 < f.size(); ++j) CHECK(f[j].prime < f[j + 1].prime);
    for (auto& pp : f) CHECK(is_prime(pp.prime));
  }
}

TEST_CASE("factorize beyond the sieve: rho and prime powers") {
  Nat p = 1000000007ULL, q = 1000000009ULL;
  auto f = factorize(p * q);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PrimePower{p, 1});
  CHECK(f[1] == PrimePower{q, 1});

  f = factorize(p * p);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == PrimePower{p, 2});

  f = factorize(p * p * q);  // mixed large square times prime
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PrimePower{p, 2});
  CHECK(f[1] == PrimePower{q, 1});

  // large prime survives as itself
  f = factorize((Nat)18446744073709551557ULL);
  REQUIRE(f.size() == 1);
  CHECK(f[0].exponent == 1);
}

TEST_CASE("radical") {
  CHECK(radical(72) == 6);
  CHECK(radical(1) == 1);
  CHECK(radical(checked_pow(17, 9)) == 17);
  CHECK(radical((Nat)14161 * 14400 * 28561) == 46410);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    uint64_t n = 1 + rng() % 100000000;
    Nat r = radical(n);
    CHECK(n % (uint64_t)r == 0);
    CHECK(radical(r) == r);                // squarefree
    CHECK(r == oracle::naive_radical(n));
  }
}

TEST_CASE("fullness and is_kfull") {
  CHECK(fullness(72) == 2);
  CHECK(fullness(243) == 5);
  CHECK(fullness(12) == 1);
  CHECK(fullness(1) == kFullnessInfinite);
  CHECK(is_kfull(72, 2));
  CHECK_FALSE(is_kfull(72, 3));
  for (uint32_t k = 2; k <= 7; ++k) CHECK(is_kfull(1, k));
  CHECK_THROWS_AS(fullness(0), domain_error);
  CHECK_THROWS_AS(is_kfull(10, 1), domain_error);
}

TEST_CASE("is_kfull equals the radical^k divisibility characterization") {
  for (uint64_t n = 1; n <= 100000; ++n) {
    Nat rad = radical(n);
    for (uint32_t k = 2; k <= 5; ++k) {
      auto rk = try_pow(rad, k);
      bool divides = rk && n % (Nat)*rk == 0;
      CHECK(is_kfull(n, k) == divides);
    }
  }
}

TEST_CASE("extremal prime factors") {
  CHECK(largest_prime_factor(72) == 3);
  CHECK(smallest_prime_factor(72) == 2);
  CHECK(largest_prime_factor(289) == 17);
  CHECK(largest_prime_factor(1) == 1);
  CHECK(smallest_prime_factor(1) == kNoPrime);
  CHECK_THROWS_AS(largest_prime_factor(0), domain_error);
}

TEST_CASE("totient and gcd agree with definitions") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(gcd(120, 169) == 1);
  CHECK(gcd(72, 243) == 9);
  CHECK(gcd(42, 0) == 42);
  CHECK(gcd(0, 42) == 42);
  CHECK_THROWS_AS(gcd(0, 0), domain_error);
  for (uint64_t n = 1; n <= 10000; ++n) CHECK(totient(n) == oracle::naive_totient(n));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    uint64_t a = rng() % 10000, b = rng() % 10000;
    if (a == 0 && b == 0) continue;
    CHECK(gcd(a, b) == oracle::naive_gcd(a, b));
  }
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK_THROWS_AS(checked_mul(kNatMax, 2), overflow_error);
  CHECK_THROWS_AS(checked_add(kNatMax, 1), overflow_error);
  CHECK(checked_mul((Nat)1 << 63, (Nat)1 << 63) == (Nat)1 << 126);
  CHECK_FALSE(try_pow(10, 39).has_value());
  CHECK(*try_pow(10, 38) == parse_nat("1e38"));
}

TEST_CASE("numeric literal parsing") {
  CHECK(parse_nat("0") == 0);
  CHECK(parse_nat("10_000_000") == 10000000);
  CHECK(parse_nat("1e12") == 1000000000000ULL);
  CHECK(parse_nat("2.5e3") == 2500);
  CHECK(parse_nat("1.50e2") == 150);
  CHECK(parse_nat("170141183460469231731687303715884105727") == kNatMax);
  CHECK_THROWS_AS(parse_nat("170141183460469231731687303715884105728"), domain_error);
  CHECK_THROWS_AS(parse_nat("1.5e0"), domain_error);
  CHECK_THROWS_AS(parse_nat("2.55e1"), domain_error);
  CHECK_THROWS_AS(parse_nat(""), domain_error);
  CHECK_THROWS_AS(parse_nat("12a"), domain_error);
  CHECK_THROWS_AS(parse_nat("-4"), domain_error);
  for (Nat v : {(Nat)0, (Nat)1, (Nat)987654321, kNatMax}) CHECK(parse_nat(to_string(v)) == v);
}
