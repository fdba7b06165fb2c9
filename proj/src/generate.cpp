#include "generate.hpp"

#include <algorithm>

#include "intcore.hpp"
#include "primes.hpp"

namespace powerful {

Interval::Interval(Nat x_, Nat y_) : x(x_), y(y_) {
  if (y_ == 0) throw domain_error("interval length must be >= 1");
  Nat hi;
  if (!try_add(x_, y_, &hi)) throw overflow_error("interval end exceeds 2^127-1");
}

namespace detail {

namespace {

struct Dfs {
  const uint64_t* primes;
  size_t nprimes;
  Nat lo, hi;
  uint32_t k;
  EmitFn emit;
  void* ctx;

  // prod is k-full and <= hi at every node; children multiply by p^e, e >= k,
  // for primes past idx, pruned as soon as the product leaves (0, hi]
  bool walk(size_t idx, Nat prod) const {
    if (prod > lo && !emit(ctx, prod)) return false;
    for (size_t i = idx; i < nprimes; ++i) {
      Nat p = primes[i];
      Nat v = prod;
      bool fits = true;
      for (uint32_t j = 0; j < k; ++j) {
        if (!try_mul(v, p, &v) || v > hi) {
          fits = false;
          break;
        }
      }
      if (!fits) break;  // primes ascend, so every later subtree overflows too
      while (true) {
        if (!walk(i + 1, v)) return false;
        if (!try_mul(v, p, &v) || v > hi) break;
      }
    }
    return true;
  }
};

}  // namespace

void visit_kfull_interval_impl(Interval iv, uint32_t k, Nat smooth_bound, EmitFn emit, void* ctx) {
  if (k < 2) throw domain_error("k-full enumeration requires k >= 2");
  Nat hi = iv.upper();
  Nat proot = ikroot(hi, k);
  if (smooth_bound && smooth_bound < proot) proot = smooth_bound;
  uint64_t limit = prime_table::configured_limit();
  if (proot > limit)
    throw domain_error(
        "enumeration needs primes up to " + to_string(proot) +
        "; raise POWERFUL_LAB_SIEVE_LIMIT or use the a^2 b^3 route for k = 2");
  auto primes = prime_table::upto(proot > 2 ? (uint64_t)proot : 2);
  size_t n = (size_t)(std::upper_bound(primes->begin(), primes->end(), (uint64_t)proot) -
                      primes->begin());
  Dfs dfs{primes->data(), n, iv.x, hi, k, emit, ctx};
  dfs.walk(0, 1);
}

void visit_squarefull_interval_impl(Interval iv, EmitFn emit, void* ctx) {
  Nat x = iv.x;
  Nat hi = iv.upper();
  Nat bmax = ikroot(hi, 3);

  // squarefree flags for b in segments, so memory stays O(segment)
  constexpr uint64_t kSegment = 1u << 20;
  auto primes = prime_table::upto((uint64_t)isqrt(bmax) + 1);
  std::vector<char> squarefree;

  for (Nat seg_lo = 1; seg_lo <= bmax; seg_lo += kSegment) {
    Nat seg_hi = std::min<Nat>(bmax, seg_lo + kSegment - 1);
    size_t len = (size_t)(seg_hi - seg_lo + 1);
    squarefree.assign(len, 1);
    for (uint64_t p : *primes) {
      Nat p2 = (Nat)p * p;
      if (p2 > seg_hi) break;
      Nat first = ((seg_lo + p2 - 1) / p2) * p2;
      for (Nat m = first; m <= seg_hi; m += p2) squarefree[(size_t)(m - seg_lo)] = 0;
    }
    // a^2 b^3 <= bound decided without wraparound even next to 2^127
    auto fits = [](Nat a, Nat b3, Nat bound) {
      Nat t;
      return try_mul(a, a, &t) && try_mul(t, b3, &t) && t <= bound;
    };
    for (Nat b = seg_lo; b <= seg_hi; ++b) {
      if (!squarefree[(size_t)(b - seg_lo)]) continue;
      Nat b3 = b * b * b;  // b <= hi^(1/3), exact

      // a-range from floor square roots of the quotients, then corrected by
      // exact products so the (x, x+y] boundaries are decided in integers
      Nat a_lo = isqrt(x / b3);
      while (a_lo > 0 && !fits(a_lo, b3, x)) --a_lo;
      while (fits(a_lo + 1, b3, x)) ++a_lo;
      Nat a_hi = isqrt(hi / b3);
      while (a_hi > 0 && !fits(a_hi, b3, hi)) --a_hi;
      while (fits(a_hi + 1, b3, hi)) ++a_hi;
      for (Nat a = a_lo + 1; a <= a_hi; ++a) {
        if (!emit(ctx, a * a * b3)) return;
      }
    }
  }
}

}  // namespace detail

namespace {

std::vector<Nat> collect_sorted_kfull(Interval iv, uint32_t k, Nat smooth_bound) {
  std::vector<Nat> out;
  visit_kfull_interval(iv, k, smooth_bound, [&](Nat v) {
    out.push_back(v);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Nat> enumerate_kfull_upto(Nat N, uint32_t k) {
  if (N == 0) throw domain_error("enumerate_kfull_upto requires N >= 1");
  return collect_sorted_kfull(Interval(0, N), k, 0);
}

std::vector<Nat> enumerate_kfull_interval(Interval iv, uint32_t k) {
  return collect_sorted_kfull(iv, k, 0);
}

std::vector<Nat> enumerate_smooth_kfull_interval(Interval iv, uint32_t k, Nat B) {
  if (B == 0) throw domain_error("smoothness bound must be >= 1");
  if (B == 1) {
    // only n = 1 has no prime factor
    std::vector<Nat> out;
    if (iv.x == 0) out.push_back(1);
    return out;
  }
  return collect_sorted_kfull(iv, k, B);
}

std::vector<Nat> enumerate_squarefull_interval(Interval iv) {
  std::vector<Nat> out;
  visit_squarefull_interval(iv, [&](Nat v) {
    out.push_back(v);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Nat> enumerate_auto(Interval iv, uint32_t k, Nat smooth_bound) {
  if (k == 2 && smooth_bound == 0) return enumerate_squarefull_interval(iv);
  return collect_sorted_kfull(iv, k, smooth_bound);
}

}  // namespace powerful
