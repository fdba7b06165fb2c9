#include "intervals.hpp"

#include <algorithm>
#include <cmath>

#include "counting.hpp"
#include "intcore.hpp"
#include "parallel.hpp"
#include "primes.hpp"

namespace powerful {

WindowReport window_count(Nat x, Nat y, uint32_t k) {
  if (k < 2) throw domain_error("window_count requires k >= 2");
  Interval iv(x, y);
  Nat count = 0;
  auto tally = [&](Nat) {
    ++count;
    return true;
  };
  if (k == 2)
    visit_squarefull_interval(iv, tally);
  else
    visit_kfull_interval(iv, k, 0, tally);
  double yd = to_double(y);
  return {x, y, k, count, to_double(count) / std::pow(yd, 1.0 / k),
          to_double(count) * std::log(yd + 1) / yd};
}

SupRatioResult sup_ratio_scan(Nat x_max, Nat y, uint32_t k, unsigned threads) {
  if (y == 0) throw domain_error("sup_ratio_scan requires y >= 1");
  if (k < 2) throw domain_error("sup_ratio_scan requires k >= 2");
  Nat hi = checked_add(x_max, y);
  auto values = enumerate_auto(Interval(0, hi), k, 0);

  // candidate window starts: 0 plus n - y for every k-full n
  std::vector<Nat> starts;
  starts.push_back(0);
  for (Nat n : values) {
    if (n <= y) continue;
    Nat s = n - y;
    if (s <= x_max) starts.push_back(s);
  }
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  struct Best {
    Nat count = 0;
    Nat x = 0;
    bool any = false;
  };
  auto run_chunk = [&](size_t begin, size_t end) {
    Best best;
    for (size_t i = begin; i < end; ++i) {
      Nat s = starts[i];
      auto lo = std::upper_bound(values.begin(), values.end(), s);
      auto up = std::upper_bound(lo, values.end(), s + y);
      Nat count = (Nat)(up - lo);
      if (!best.any || count > best.count) {
        best = {count, s, true};
      }
    }
    return best;
  };
  std::vector<Best> partial = parallel_map_chunks<Best>(starts.size(), threads, run_chunk);
  Best best;
  for (const Best& b : partial) {
    if (!b.any) continue;
    if (!best.any || b.count > best.count || (b.count == best.count && b.x < best.x)) best = b;
  }
  double ratio = to_double(best.count) / std::pow(to_double(y), 1.0 / k);
  return {best.x, best.count, ratio};
}

ResidueReport residue_count(Nat x, Nat y, Nat q, Nat r) {
  if (q == 0) throw domain_error("residue_count requires q >= 1");
  Interval iv(x, y);
  r %= q;
  bool coprime = q == 1 || gcd(r == 0 ? q : r, q) == 1;
  Nat count = 0;
  visit_squarefull_interval(iv, [&](Nat n) {
    if (n % q == r) ++count;
    return true;
  });
  double comparator = to_double(y) / (to_double(totient(q)) * std::log(to_double(y) + 1));
  return {count, comparator, coprime};
}

RoughReport rough_count(Nat x, Nat y, Nat q, Nat r, Nat z) {
  if (z < 2) throw domain_error("rough_count requires z >= 2");
  if (q == 0) throw domain_error("rough_count requires q >= 1");
  r %= q;
  if (gcd(r == 0 ? q : r, q) != 1 && q != 1)
    throw domain_error("rough_count requires gcd(r, q) = 1");
  if (z > 1'000'000'000) throw domain_error("rough_count requires z <= 1e9");
  Interval iv(x, y);
  auto primes = prime_table::upto((uint64_t)z);

  // segment (x, x+y], strike multiples of primes <= z, count survivors = r (mod q)
  constexpr Nat kSegment = 1 << 22;
  Nat count = 0;
  Nat lo = x + 1;
  Nat hi = iv.upper();
  std::vector<char> rough;
  while (lo <= hi) {
    Nat seg_hi = std::min(hi, lo + kSegment - 1);
    size_t len = (size_t)(seg_hi - lo + 1);
    rough.assign(len, 1);
    for (uint64_t p : *primes) {
      if ((Nat)p > z) break;
      Nat first = ((lo + p - 1) / p) * p;
      for (Nat m = first; m <= seg_hi; m += p) rough[(size_t)(m - lo)] = 0;
    }
    for (size_t i = 0; i < len; ++i) {
      if (rough[i] && (lo + i) % q == r) ++count;
    }
    lo = seg_hi + 1;
  }
  double comparator = to_double(y) / (to_double(totient(q)) * std::log(to_double(z))) +
                      to_double(z) * to_double(z);
  return {count, comparator};
}

SmoothReport smooth_window_count(Nat x, Nat y, uint32_t k, double smooth_exponent) {
  if (!(smooth_exponent > 0.0) || smooth_exponent > 1.0)
    throw domain_error("smooth_exponent must lie in (0, 1]");
  Interval iv(x, y);
  Nat bound = floor_power(y, smooth_exponent);
  Nat count = 0;
  if (bound <= 1) {
    if (x == 0) count = 1;  // only n = 1 is 1-smooth
  } else {
    visit_kfull_interval(iv, k, bound, [&](Nat) {
      ++count;
      return true;
    });
  }
  return {count, bound, std::pow(to_double(y), 11.0 / 12.0)};
}

ShiuSplit shiu_split(Nat n, Nat z) {
  if (n == 0) throw domain_error("shiu_split requires n >= 1");
  if (z == 0) throw domain_error("shiu_split requires z >= 1");
  auto factors = factorize(n);
  if (!factors.empty() && fullness(factors) < 2)
    throw domain_error("shiu_split is defined for squarefull n (or n = 1)");

  Nat b = 1;
  size_t split = 0;
  for (; split < factors.size(); ++split) {
    Nat block = checked_pow(factors[split].prime, factors[split].exponent);
    Nat next;
    if (!try_mul(b, block, &next) || next > z) break;
    b = next;
  }
  Nat d = n / b;

  int case_id;
  Nat b2;
  bool b_big = !try_mul(b, b, &b2) || b2 > z;  // b > sqrt(z), decided exactly
  if (b_big) {
    case_id = 1;
  } else if (d == 1) {
    case_id = 3;  // p-(1) is infinite, so the case-3 condition holds vacuously
  } else {
    Nat pmin = factors[split].prime;
    Nat p2;
    bool p_small = try_mul(pmin, pmin, &p2) && p2 <= z;
    case_id = p_small ? 2 : 3;
  }
  return {n, z, b, d, case_id};
}

CaseHistogram case_histogram(Nat x, Nat y, Nat z) {
  if (z < 2) throw domain_error("case_histogram requires z >= 2");
  Interval iv(x, y);
  CaseHistogram hist{{0, 0, 0}, 0};
  visit_squarefull_interval(iv, [&](Nat n) {
    ++hist.counts[shiu_split(n, z).case_id - 1];
    ++hist.total;
    return true;
  });
  return hist;
}

}  // namespace powerful
