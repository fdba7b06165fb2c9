#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "generate.hpp"
#include "nat.hpp"

namespace powerful {

// n1 < n2 < n3, n1 + n3 = 2 n2, all squarefull.
struct ApTriple {
  Nat n1;
  Nat n2;
  Nat n3;

  friend bool operator==(const ApTriple& a, const ApTriple& b) {
    return a.n1 == b.n1 && a.n2 == b.n2 && a.n3 == b.n3;
  }
};

struct NoApSample {
  Nat x;
  Nat window;  // floor(x^exponent); 0 marks a vacuous window
  std::vector<ApTriple> hits;
};

struct NoApReport {
  double exponent;
  std::vector<NoApSample> samples;
  size_t total_hits;
  double thm3_comparator_c = 0.1;  // report-only constant for y / log^(1+c)(y+1)
};

// All non-trivial three-term progressions inside an explicit ascending set;
// progressions are translation-invariant, which tests exploit directly.
std::vector<ApTriple> find_3aps_in_set(const std::vector<Nat>& sorted_values);

// 3APs among the squarefull numbers in (x, x+y].
std::vector<ApTriple> find_3aps(Interval iv);

// Scans (x, x + floor(x^exponent)] at each sample; a hit is a finding, never
// an error.
NoApReport verify_no_ap_short(const std::vector<Nat>& x_samples, double exponent = 0.2);

// n <= N with n and n+1 both squarefull.
std::vector<std::pair<Nat, Nat>> find_consecutive_pairs(Nat N);

// n, n+1, n+2 all squarefull with n+2 <= N; expected empty, returned if found.
std::vector<std::array<Nat, 3>> find_consecutive_triples(Nat N);

}  // namespace powerful
