#include "counting.hpp"

#include <cmath>

#include "intcore.hpp"
#include "primes.hpp"

namespace powerful {

Nat qk_count(Nat x, uint32_t k) {
  if (x == 0) throw domain_error("qk_count requires x >= 1");
  Nat count = 0;
  visit_kfull_interval(Interval(0, x), k, 0, [&](Nat) {
    ++count;
    return true;
  });
  return count;
}

double zeta_real(double s) {
  if (!(s >= 1.1)) throw domain_error("zeta_real requires s >= 1.1");
  // Euler-Maclaurin with N = 64 and Bernoulli corrections through B_14;
  // the first omitted term is far below 1e-15 on s >= 1.1
  constexpr int N = 64;
  static const double bernoulli_over_fact[] = {
      1.0 / 12,                 // B2/2!
      -1.0 / 720,               // B4/4!
      1.0 / 30240,              // B6/6!
      -1.0 / 1209600,           // B8/8!
      1.0 / 47900160,           // B10/10!
      -691.0 / 1307674368000.0, // B12/12!
      1.0 / 74724249600.0,      // B14/14!
  };
  double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow((double)n, -s);
  sum += std::pow((double)N, 1 - s) / (s - 1);
  sum += 0.5 * std::pow((double)N, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double npow = std::pow((double)N, -s - 1);
  for (int j = 0; j < 7; ++j) {
    sum += bernoulli_over_fact[j] * rising * npow;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    npow /= (double)N * N;
  }
  return sum;
}

EulerConstantResult euler_product_constant(uint32_t k, uint64_t P) {
  if (k < 2) throw domain_error("euler_product_constant requires k >= 2");
  if (P < 2) throw domain_error("euler_product_constant requires P >= 2");
  auto primes = prime_table::upto(P);
  double log_product = 0;
  for (uint64_t p : *primes) {
    if (p > P) break;
    double lp = std::log((double)p);
    double term = 0;
    for (uint32_t m = k + 1; m <= 2 * k - 1; ++m) term += std::exp(-(double)m / k * lp);
    log_product += std::log1p(term);
  }
  // sum_{p > P} sum_m p^(-m/k) <= (k-1) * integral_P^inf t^(-(k+1)/k) dt
  double tail = (double)(k - 1) * k * std::pow((double)P, -1.0 / k);
  return {k, P, std::exp(log_product), tail};
}

AsymptoticCheck verify_main_term(Nat x, uint32_t k) {
  if (x < 10) throw domain_error("verify_main_term requires x >= 10");
  Nat observed = qk_count(x, k);
  double constant = euler_product_constant(k, 1'000'000).value;
  double predicted = constant * std::pow(to_double(x), 1.0 / k);
  double residual = (to_double(observed) - predicted) / std::pow(to_double(x), 1.0 / (k + 1));
  return {x, k, observed, predicted, to_double(observed) / predicted, residual};
}

Nat floor_power(Nat x, double e) {
  if (!(e > 0.0) || e > 1.0) throw domain_error("exponent must lie in (0, 1]");
  if (e == 1.0) return x;
  if (e == 0.5) return isqrt(x);
  // 1/e integral: the floor composes exactly through ikroot
  double inv = 1.0 / e;
  uint32_t k = (uint32_t)(inv + 0.5);
  if (k >= 2 && std::abs(inv - (double)k) < 1e-9) return ikroot(x, k);
  long double v = powl((long double)x, (long double)e);
  v *= 1.0L + 1e-15L;  // exact powers may round a hair below the integer
  if (v >= (long double)kNatMax) throw overflow_error("power exceeds 2^127-1");
  return (Nat)v;
}

ShortIntervalRatio short_interval_ratio(Nat x, double theta, uint32_t k) {
  constexpr double kThetaLo2 = 19.0 / 154, kThetaHi2 = 0.5;
  constexpr double kThetaLo3 = 5.0 / 42, kThetaHi3 = 1.0 / 3;
  double base_exp, lo, hi;
  if (k == 2) {
    base_exp = 0.5;
    lo = kThetaLo2;
    hi = kThetaHi2;
  } else if (k == 3) {
    base_exp = 2.0 / 3;
    lo = kThetaLo3;
    hi = kThetaHi3;
  } else {
    throw domain_error("short_interval_ratio supports k = 2 (theta in (19/154, 1/2)) and k = 3 (theta in (5/42, 1/3))");
  }
  if (!(theta > lo) || !(theta < hi)) {
    throw domain_error(k == 2
                           ? "theta must lie in (19/154, 1/2) = (0.12337..., 0.5) for k = 2"
                           : "theta must lie in (5/42, 1/3) = (0.11904..., 0.33333...) for k = 3");
  }
  if (x < 10) throw domain_error("short_interval_ratio requires x >= 10");

  long double ypow = powl((long double)x, (long double)(base_exp + theta)) * (1.0L + 1e-15L);
  if (ypow >= (long double)kNatMax - (long double)x) throw overflow_error("window end exceeds 2^127-1");
  Nat y = (Nat)ypow;
  if (y == 0) y = 1;

  Nat observed = 0;
  Interval iv(x, y);
  if (k == 2) {
    visit_squarefull_interval(iv, [&](Nat) {
      ++observed;
      return true;
    });
  } else {
    visit_kfull_interval(iv, 3, 0, [&](Nat) {
      ++observed;
      return true;
    });
  }
  double constant = k == 2 ? zeta_real(1.5) / (2 * zeta_real(3.0))
                           : zeta_real(4.0 / 3) / (3 * zeta_real(4.0));
  double predicted = constant * std::pow(to_double(x), theta);
  return {x, theta, k, y, observed, predicted, to_double(observed) / predicted};
}

ReciprocalSum reciprocal_sum_squarefull(Nat X) {
  if (X < 2) throw domain_error("reciprocal_sum_squarefull requires X >= 2");
  Nat X2;
  if (!try_mul(X, X, &X2)) throw overflow_error("X^2 exceeds 2^127-1");
  auto values = enumerate_squarefull_interval(Interval(X, X2 - X));
  // Kahan over ascending 1/n terms (largest n first)
  double sum = 0, comp = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    double term = 1.0 / to_double(*it) - comp;
    double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return {sum, sum * std::sqrt(to_double(X))};
}

}  // namespace powerful
