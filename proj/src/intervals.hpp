#pragma once

#include <cstdint>

#include "generate.hpp"
#include "nat.hpp"

namespace powerful {

struct WindowReport {
  Nat x;
  Nat y;
  uint32_t k;
  Nat count;
  double conj_ratio;  // count / y^(1/k)
  double thm1_ratio;  // count * log(y+1) / y
};

struct SupRatioResult {
  Nat best_x;  // smallest window start attaining the maximum count
  Nat best_count;
  double best_ratio;
};

struct ResidueReport {
  Nat count;
  double comparator;  // y / (phi(q) * log(y+1))
  bool coprime;       // gcd(r, q) == 1; counting proceeds either way
};

struct RoughReport {
  Nat count;
  double comparator;  // y / (phi(q) * log z) + z^2
};

struct SmoothReport {
  Nat count;
  Nat smooth_bound;   // floor(y^exponent)
  double comparator;  // y^(11/12)
};

struct ShiuSplit {
  Nat n;
  Nat z;
  Nat b_part;  // maximal prefix of ascending prime-power blocks with product <= z
  Nat d_part;
  int case_id;  // 1: b > sqrt(z); 2: b <= sqrt(z), p-(d) <= sqrt(z); 3: rest (d = 1 included)
};

struct CaseHistogram {
  Nat counts[3];
  Nat total;
};

WindowReport window_count(Nat x, Nat y, uint32_t k);

// Exact supremum of the window count over all starts in [0, x_max]: the
// smallest maximizing x always has a k-full number at its right edge
// (stepping left of it would drop that element), so it is enough to test
// x = 0 and x = n - y for k-full n.
SupRatioResult sup_ratio_scan(Nat x_max, Nat y, uint32_t k, unsigned threads = 1);

ResidueReport residue_count(Nat x, Nat y, Nat q, Nat r);

RoughReport rough_count(Nat x, Nat y, Nat q, Nat r, Nat z);

SmoothReport smooth_window_count(Nat x, Nat y, uint32_t k, double smooth_exponent = 0.5);

ShiuSplit shiu_split(Nat n, Nat z);

CaseHistogram case_histogram(Nat x, Nat y, Nat z);

}  // namespace powerful
