#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "intcore.hpp"
#include "intervals.hpp"
#include "oracles.hpp"

using namespace powerful;

TEST_CASE("window_count examples") {
  auto r = window_count(287, 2, 2);
  CHECK(r.count == 2);
  CHECK(r.conj_ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  auto one = window_count(15, 1, 2);
  CHECK(one.count == 1);  // 16
  CHECK(one.conj_ratio <= 1.0);
  auto big = window_count(0, 100, 2);
  CHECK(big.count == 14);
  CHECK(big.conj_ratio == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(big.thm1_ratio == doctest::Approx(14 * std::log(101.0) / 100).epsilon(1e-12));
}

TEST_CASE("sup_ratio_scan frozen small cases") {
  auto r = sup_ratio_scan(10000, 2, 2);
  CHECK(r.best_ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.best_count == 2);
  CHECK(r.best_x == 7);  // the 8/9 pair comes first; 287 ties via 288/289

  auto singleton = sup_ratio_scan(10000, 1, 2);
  CHECK(singleton.best_ratio == doctest::Approx(1.0));
  CHECK(singleton.best_x == 0);

  auto hundred = sup_ratio_scan(1000000, 100, 2);
  CHECK(hundred.best_ratio == doctest::Approx(1.4));  // 14 in (0, 100]
  CHECK(hundred.best_x == 0);
  CHECK(hundred.best_ratio <= 3.0);
}

TEST_CASE("sup_ratio_scan equals exhaustive search over every start") {
  std::vector<uint64_t> sq = oracle::brute_kfull_upto(1700, 2);
  for (uint64_t y : {1, 2, 3, 5, 10, 37}) {
    uint64_t x_max = 1200;
    uint64_t best_count = 0, best_x = 0;
    for (uint64_t x = 0; x <= x_max; ++x) {
      uint64_t c = 0;
      for (uint64_t n : sq)
        if (n > x && n <= x + y) ++c;
      if (c > best_count) {
        best_count = c;
        best_x = x;
      }
    }
    auto r = sup_ratio_scan(x_max, y, 2);
    CHECK(r.best_count == best_count);
    CHECK(r.best_x == best_x);
  }
}

TEST_CASE("sup_ratio_scan is thread-count independent") {
  for (unsigned threads : {1u, 2u, 8u}) {
    auto r = sup_ratio_scan(200000, 10, 2, threads);
    CHECK(r.best_x == 0);
    CHECK(r.best_count == 4);
  }
}

TEST_CASE("residue_count") {
  auto r = residue_count(0, 100, 4, 1);
  CHECK(r.count == 5);  // 1, 9, 25, 49, 81
  CHECK(r.coprime);
  auto all = residue_count(0, 100, 1, 0);
  CHECK(all.count == 14);
  CHECK(all.coprime);
  auto flagged = residue_count(0, 100, 4, 2);
  CHECK_FALSE(flagged.coprime);
  CHECK(flagged.count == 0);  // n = 2 (mod 4) forces a single factor 2
  CHECK(flagged.comparator > 0);
  CHECK_THROWS_AS(residue_count(0, 100, 0, 1), domain_error);
}

TEST_CASE("residue counts match a direct filter") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 30; ++i) {
    uint64_t x = rng() % 1000000, y = 1 + rng() % 5000;
    uint64_t q = 1 + rng() % 30, r = rng() % q;
    uint64_t expect = 0;
    for (uint64_t n : oracle::brute_kfull_interval(x, y, 2))
      if (n % q == r) ++expect;
    CHECK(residue_count(x, y, q, r).count == expect);
  }
}

TEST_CASE("rough_count") {
  CHECK(rough_count(100, 50, 1, 0, 7).count == 12);
  // z above the window: only primes beyond z would survive, here none
  CHECK(rough_count(10, 10, 1, 0, 25).count == 0);
  CHECK(rough_count(0, 10, 1, 0, 25).count == 1);  // n = 1 is rough for every z
  CHECK(rough_count(100, 50, 1, 0, 7).comparator > 0);
  CHECK_THROWS_AS(rough_count(10, 10, 1, 0, 1), domain_error);
  CHECK_THROWS_AS(rough_count(10, 10, 4, 2, 5), domain_error);  // gcd(2,4) != 1
}

TEST_CASE("rough counts match a per-integer factor scan") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    uint64_t x = rng() % 100000, y = 1 + rng() % 3000, z = 2 + rng() % 50;
    uint64_t q = 1 + rng() % 12, r = rng() % q;
    if (q > 1 && oracle::naive_gcd(r == 0 ? q : r, q) != 1) continue;
    auto is_rough = [&](uint64_t n) {
      if (n == 1) return true;
      for (uint64_t p = 2; p <= z && p * p <= n; ++p)
        if (n % p == 0) return false;
      // no factor up to min(z, sqrt(n)); what remains is prime or z-rough
      return n > z;
    };
    uint64_t expect = 0;
    for (uint64_t n = x + 1; n <= x + y; ++n)
      if (is_rough(n) && n % q == r) ++expect;
    CHECK(rough_count(x, y, q, r, z).count == expect);
  }
}

TEST_CASE("smooth_window_count") {
  auto all = smooth_window_count(0, 100, 2, 0.5);
  CHECK(all.count == 14);
  CHECK(all.smooth_bound == 10);
  CHECK(all.comparator == doctest::Approx(std::pow(100.0, 11.0 / 12.0)));
  auto tight = smooth_window_count(0, 100, 2, 0.25);
  CHECK(tight.smooth_bound == 3);
  CHECK(tight.count == 11);  // drops 25, 49, 100
  auto single = smooth_window_count(12345, 1, 2, 0.5);
  CHECK(single.count <= 1);
  CHECK_THROWS_AS(smooth_window_count(0, 100, 2, 0.0), domain_error);
  CHECK_THROWS_AS(smooth_window_count(0, 100, 2, 1.5), domain_error);
}

TEST_CASE("shiu_split examples and degenerate forms") {
  auto s = shiu_split(72, 8);
  CHECK(s.b_part == 8);
  CHECK(s.d_part == 9);
  CHECK(s.case_id == 1);

  s = shiu_split(243, 10);
  CHECK(s.b_part == 1);
  CHECK(s.d_part == 243);
  CHECK(s.case_id == 2);  // p-(243) = 3, 3^2 <= 10

  s = shiu_split(72, 100000);
  CHECK(s.b_part == 72);
  CHECK(s.d_part == 1);
  CHECK(s.case_id == 3);  // b <= sqrt(z), d = 1 assigned case 3

  s = shiu_split(72, 72);
  CHECK(s.b_part == 72);
  CHECK(s.case_id == 1);  // 72^2 > 72

  s = shiu_split(1, 50);
  CHECK(s.b_part == 1);
  CHECK(s.d_part == 1);
  CHECK(s.case_id == 3);

  CHECK_THROWS_AS(shiu_split(12, 10), domain_error);  // 12 is not squarefull
  CHECK_THROWS_AS(shiu_split(0, 10), domain_error);
}

TEST_CASE("shiu reconstruction, prefix maximality, coprimality transfer") {
  auto squarefull = oracle::brute_kfull_upto(100000, 2);
  std::mt19937_64 rng(13);
  for (Nat z : {(Nat)2, (Nat)10, (Nat)1000}) {
    for (uint64_t n : squarefull) {
      auto s = shiu_split(n, z);
      CHECK(s.b_part * s.d_part == n);
      CHECK(s.b_part <= z);
      if (s.d_part > 1) {
        // multiplying by the next block must leave z behind
        Nat p = smallest_prime_factor(s.d_part);
        Nat block = 1;
        Nat m = s.d_part;
        while (m % p == 0) {
          block *= p;
          m /= p;
        }
        CHECK(s.b_part * block > z);
      }
      CHECK((s.case_id >= 1 && s.case_id <= 3));
    }
  }
  for (int i = 0; i < 200; ++i) {
    uint64_t n = squarefull[rng() % squarefull.size()];
    uint64_t q = 1 + rng() % 1000;
    if (oracle::naive_gcd(n, q) != 1) continue;
    auto s = shiu_split(n, 10 + rng() % 1000);
    CHECK(gcd(s.b_part, q) == 1);
    CHECK(gcd(s.d_part, q) == 1);
  }
}

TEST_CASE("case_histogram partitions the window count") {
  auto h = case_histogram(0, 300, 9);
  CHECK(h.counts[0] == 11);
  CHECK(h.counts[1] == 10);
  CHECK(h.counts[2] == 7);
  CHECK(h.total == 28);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 25; ++i) {
    uint64_t x = rng() % 10000000, y = 1 + rng() % 100000;
    Nat z = 2 + rng() % 10000;
    auto hh = case_histogram(x, y, z);
    CHECK(hh.counts[0] + hh.counts[1] + hh.counts[2] == hh.total);
    CHECK(hh.total == window_count(x, y, 2).count);
  }

  // z beyond every member: whole numbers become their own prefix
  auto big = case_histogram(0, 300, (Nat)1 << 40);
  CHECK(big.counts[0] == 0);
  CHECK(big.counts[1] == 0);
  CHECK(big.counts[2] == 28);
}

TEST_CASE("empirical comparator constants hold on sampled windows") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 40; ++i) {
    uint64_t y = 10 + rng() % 10000;
    uint64_t x = rng() % 100000000;
    auto w = window_count(x, y, 2);
    CHECK(to_double(w.count) <= 6.0 * y / std::log((double)y + 1));
    uint64_t q = 1 + rng() % (uint64_t)std::sqrt((double)y);
    uint64_t r = rng() % q;
    if (q > 1 && oracle::naive_gcd(r == 0 ? q : r, q) != 1) continue;
    auto rep = residue_count(x, y, q, r);
    CHECK(to_double(rep.count) <= 50.0 * rep.comparator);
  }
}
