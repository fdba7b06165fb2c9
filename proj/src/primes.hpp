#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nat.hpp"

namespace powerful {

using PrimeList = std::vector<uint64_t>;

// Process-wide prime cache. Built (or grown) under a lock, then handed out as
// immutable snapshots, so concurrent readers never see a partial table.
namespace prime_table {

// Primes up to at least `limit`; throws domain_error above the hard cap (1e9).
std::shared_ptr<const PrimeList> upto(uint64_t limit);

// Trial-division bound used by factorize: POWERFUL_LAB_SIEVE_LIMIT if set,
// otherwise 1e7.
uint64_t configured_limit();
void set_configured_limit(uint64_t limit);

}  // namespace prime_table

// Deterministic for n < 3.317e24 (Miller-Rabin, prime bases 2..41); above
// that the base set is extended to the first 25 primes, for which no
// pseudoprime is known. Everything the shipped scanners factor stays far
// below the deterministic bound.
bool is_prime(Nat n);

Nat mulmod(Nat a, Nat b, Nat m);
Nat powmod(Nat base, Nat exp, Nat m);

}  // namespace powerful
