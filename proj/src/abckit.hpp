#pragma once

#include <cstdint>
#include <vector>

#include "apsearch.hpp"
#include "nat.hpp"

namespace powerful {

// Pairwise-coprime a + b = c with 0 < a <= b < c.
struct AbcTriple {
  Nat a;
  Nat b;
  Nat c;
  Nat rad;         // radical(a b c), computed factor-wise by coprimality
  double quality;  // log c / log rad
};

struct GapRecord {
  Nat b;
  Nat c;  // consecutive k-full pair b < c
  Nat gap;
  double exponent;  // log(gap) / log(c)
};

struct ApCertificate {
  ApTriple source;
  Nat divisor;  // D = gcd(n2, n2 - n1)
  AbcTriple triple;
};

// Validates the triple shape and computes radical and quality.
AbcTriple make_abc_triple(Nat a, Nat b, Nat c);

// a = c - b, d = gcd(a, b); returns (a/d, b/d, c/d) reordered so the first
// two sum to the third.
AbcTriple make_coprime_triple(Nat b, Nat c);

double abc_quality(Nat a, Nat b, Nat c);

// Consecutive k-full pairs up to N with gap <= gap_max, smallest exponent
// first (those are the near-violations of the one-per-interval claim).
std::vector<GapRecord> powerful_gap_scan(Nat N, uint32_t k, Nat gap_max);

// From a squarefull 3AP (n2 - d, n2, n2 + d): divides n1*n3 + d^2 = n2^2 by
// D^2 = gcd(n2, d)^2 to reach a pairwise-coprime abc instance.
ApCertificate ap_abc_certificate(const ApTriple& t);

}  // namespace powerful
