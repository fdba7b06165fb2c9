#include "primes.hpp"

#include <cstdlib>
#include <mutex>

namespace powerful {

namespace prime_table {

namespace {

constexpr uint64_t kHardCap = 1'000'000'000;

std::mutex g_mutex;
std::shared_ptr<const PrimeList> g_primes;
uint64_t g_built_limit = 0;
uint64_t g_configured_limit = 0;

std::shared_ptr<const PrimeList> sieve(uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  auto primes = std::make_shared<PrimeList>();
  for (uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes->push_back(i);
    for (uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

uint64_t configured_limit() {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_configured_limit == 0) {
    g_configured_limit = 10'000'000;
    if (const char* env = std::getenv("POWERFUL_LAB_SIEVE_LIMIT")) {
      char* end = nullptr;
      uint64_t v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v >= 100 && v <= kHardCap) g_configured_limit = v;
    }
  }
  return g_configured_limit;
}

void set_configured_limit(uint64_t limit) {
  if (limit < 100 || limit > kHardCap)
    throw domain_error("sieve limit must be in [100, 1e9]");
  std::lock_guard<std::mutex> lock(g_mutex);
  g_configured_limit = limit;
}

std::shared_ptr<const PrimeList> upto(uint64_t limit) {
  if (limit < 2) limit = 2;
  if (limit > kHardCap)
    throw domain_error("prime table request above 1e9; this scan needs a smaller parametrization");
  std::lock_guard<std::mutex> lock(g_mutex);
  if (limit > g_built_limit) {
    g_primes = sieve(limit);
    g_built_limit = limit;
  }
  return g_primes;
}

}  // namespace prime_table

Nat mulmod(Nat a, Nat b, Nat m) {
  a %= m;
  b %= m;
  if (m <= UINT64_MAX) return a * b % m;
  // shift-and-add; every intermediate stays below 2^128 because m < 2^127
  Nat r = 0;
  while (b) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    b >>= 1;
    a <<= 1;
    if (a >= m) a -= m;
  }
  return r;
}

Nat powmod(Nat base, Nat exp, Nat m) {
  Nat r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

namespace {

bool miller_rabin(Nat n, Nat base) {
  base %= n;
  if (base == 0) return true;
  Nat d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Nat x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// 3.317e24: the proven bound for the 13-base set {2,...,41}
const Nat kDeterministicBound = Nat(3'317'044'064'679ULL) * 1'000'000'000'000ULL;

constexpr uint64_t kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                               43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

bool is_prime(Nat n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  size_t nbases = n < kDeterministicBound ? 13 : 25;
  for (size_t i = 0; i < nbases; ++i) {
    if (!miller_rabin(n, kBases[i])) return false;
  }
  return true;
}

}  // namespace powerful
