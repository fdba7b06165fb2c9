#include "intcore.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "primes.hpp"

namespace powerful {

Nat isqrt(Nat n) {
  if (n == 0) return 0;
  // long double seed is within 2 of the truth for the whole 128-bit range;
  // the correction loops decide with integer arithmetic only
  Nat r = (Nat)sqrtl((long double)n);
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

namespace {

// saturating compare: true iff base^k <= n
bool pow_leq(Nat base, uint32_t k, Nat n) {
  Nat acc = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (!try_mul(acc, base, &acc) || acc > n) return false;
  }
  return true;
}

}  // namespace

Nat ikroot(Nat n, uint32_t k) {
  if (k == 0) throw domain_error("ikroot requires k >= 1");
  if (k == 1 || n <= 1) return n;
  if (k == 2) return isqrt(n);
  if (k >= 127) return 1;  // 2^127 > n for every n in range
  Nat lo = 1;
  Nat hi = (Nat)1 << (127 / k + 1);
  if (hi > n) hi = n;
  while (lo < hi) {
    Nat mid = lo + (hi - lo + 1) / 2;
    if (pow_leq(mid, k, n))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Nat gcd(Nat a, Nat b) {
  if (a == 0 && b == 0) throw domain_error("gcd(0, 0) is undefined");
  while (b) {
    Nat t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

// deterministic cycle detection, c = 1, 2, 3, ... until a factor splits off;
// n is composite and not a prime power when we get here
Nat pollard_rho(Nat n) {
  for (Nat c = 1;; ++c) {
    auto step = [&](Nat v) {
      Nat r = mulmod(v, v, n);
      r += c;
      if (r >= n) r -= n;
      return r;
    };
    Nat x = 2, y = step(2), d = 1;
    while (d == 1) {
      Nat diff = x > y ? x - y : y - x;
      if (diff == 0) {
        d = 0;  // tortoise met hare without a factor; retry with next c
        break;
      }
      d = gcd(diff, n);
      x = step(x);
      y = step(step(y));
    }
    if (d > 1 && d != n) return d;
  }
}

void split_cofactor(Nat m, std::map<Nat, uint32_t>& out, uint32_t mult) {
  if (m == 1) return;
  if (is_prime(m)) {
    out[m] += mult;
    return;
  }
  // perfect powers first: rho behaves poorly on p^e and the check is cheap
  for (uint32_t k = 2; k <= 127; ++k) {
    Nat r = ikroot(m, k);
    if (r <= 1) break;
    if (try_pow(r, k) == std::optional<Nat>(m)) {
      split_cofactor(r, out, mult * k);
      return;
    }
  }
  Nat d = pollard_rho(m);
  split_cofactor(d, out, mult);
  split_cofactor(m / d, out, mult);
}

}  // namespace

PrimeFactorization factorize(Nat n) {
  if (n == 0) throw domain_error("factorize requires n >= 1");
  PrimeFactorization result;
  if (n == 1) return result;

  uint64_t bound = prime_table::configured_limit();
  Nat root = isqrt(n);
  if (root < bound) bound = (uint64_t)root;
  auto primes = prime_table::upto(bound);
  for (uint64_t p : *primes) {
    if ((Nat)p * p > n) break;
    if (n % p == 0) {
      uint32_t e = 0;
      do {
        n /= p;
        ++e;
      } while (n % p == 0);
      result.push_back({p, e});
    }
  }
  if (n > 1) {
    Nat last = primes->empty() ? 2 : primes->back();
    if (n <= last * last || is_prime(n)) {
      // remaining cofactor below (last prime + 1)^2 must itself be prime
      result.push_back({n, 1});
    } else {
      // every prime of the cofactor exceeds the trial bound, so the sorted
      // map appends in order
      std::map<Nat, uint32_t> extra;
      split_cofactor(n, extra, 1);
      for (auto& [p, e] : extra) result.push_back({p, e});
    }
  }
  return result;
}

Nat value_of(const PrimeFactorization& f) {
  Nat v = 1;
  for (const auto& pp : f) v = checked_mul(v, checked_pow(pp.prime, pp.exponent));
  return v;
}

Nat radical(const PrimeFactorization& f) {
  Nat r = 1;
  for (const auto& pp : f) r *= pp.prime;  // divides n, cannot overflow
  return r;
}

Nat radical(Nat n) {
  if (n == 0) throw domain_error("radical requires n >= 1");
  return radical(factorize(n));
}

uint32_t fullness(const PrimeFactorization& f) {
  uint32_t m = kFullnessInfinite;
  for (const auto& pp : f) m = std::min(m, pp.exponent);
  return m;
}

uint32_t fullness(Nat n) {
  if (n == 0) throw domain_error("fullness requires n >= 1");
  return fullness(factorize(n));
}

bool is_kfull(Nat n, uint32_t k) {
  if (k < 2) throw domain_error("is_kfull requires k >= 2");
  return fullness(n) >= k;
}

Nat largest_prime_factor(Nat n) {
  if (n == 0) throw domain_error("largest_prime_factor requires n >= 1");
  if (n == 1) return 1;
  return factorize(n).back().prime;
}

Nat smallest_prime_factor(Nat n) {
  if (n == 0) throw domain_error("smallest_prime_factor requires n >= 1");
  if (n == 1) return kNoPrime;
  return factorize(n).front().prime;
}

Nat totient(Nat q) {
  if (q == 0) throw domain_error("totient requires q >= 1");
  Nat result = q;
  for (const auto& pp : factorize(q)) {
    result -= result / pp.prime;
  }
  return result;
}

}  // namespace powerful
