#pragma once

#include <cstdint>

#include "generate.hpp"
#include "nat.hpp"

namespace powerful {

struct EulerConstantResult {
  uint32_t k;
  uint64_t truncation_prime;
  double value;       // truncated product over p <= truncation_prime
  double tail_bound;  // true constant lies in [value, value * exp(tail_bound)]
};

struct AsymptoticCheck {
  Nat x;
  uint32_t k;
  Nat observed;
  double predicted_main;
  double ratio;
  double residual_normalized;  // (observed - predicted) / x^(1/(k+1))
};

struct ShortIntervalRatio {
  Nat x;
  double theta;
  uint32_t k;
  Nat window;  // floor(x^(1/2+theta)) for k=2, floor(x^(2/3+theta)) for k=3
  Nat observed;
  double predicted;
  double ratio;
};

struct ReciprocalSum {
  double sum;
  double normalized;  // sum * X^(1/2)
};

// streaming count of k-full n <= x; nothing is stored
Nat qk_count(Nat x, uint32_t k);

// Riemann zeta on the real axis by Euler-Maclaurin; s >= 1.1, error < 1e-12
double zeta_real(double s);

EulerConstantResult euler_product_constant(uint32_t k, uint64_t P);

AsymptoticCheck verify_main_term(Nat x, uint32_t k);

ShortIntervalRatio short_interval_ratio(Nat x, double theta, uint32_t k);

ReciprocalSum reciprocal_sum_squarefull(Nat X);

// floor(x^e) in extended precision with a one-ulp nudge so exact powers land
// on the integer; e in (0, 1]
Nat floor_power(Nat x, double e);

}  // namespace powerful
