#pragma once

#include <cstdint>
#include <vector>

#include "nat.hpp"

namespace powerful {

struct PrimePower {
  Nat prime;
  uint32_t exponent;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

// Sorted by prime, exponents >= 1; empty <=> n = 1.
using PrimeFactorization = std::vector<PrimePower>;

// fullness(1); also the k for which every n stops being k-full.
inline constexpr uint32_t kFullnessInfinite = UINT32_MAX;

// smallest_prime_factor(1); 2^128-1, deliberately outside the Nat range.
inline constexpr Nat kNoPrime = ~(Nat)0;

// floor(n^(1/k)); integer-exact decisions throughout.
Nat ikroot(Nat n, uint32_t k);
Nat isqrt(Nat n);

PrimeFactorization factorize(Nat n);
Nat value_of(const PrimeFactorization& f);

Nat radical(Nat n);
Nat radical(const PrimeFactorization& f);

uint32_t fullness(Nat n);
uint32_t fullness(const PrimeFactorization& f);
bool is_kfull(Nat n, uint32_t k);

Nat largest_prime_factor(Nat n);   // p+(1) = 1 by convention
Nat smallest_prime_factor(Nat n);  // p-(1) = kNoPrime by convention

Nat totient(Nat q);
Nat gcd(Nat a, Nat b);  // gcd(0, 0) rejected

}  // namespace powerful
