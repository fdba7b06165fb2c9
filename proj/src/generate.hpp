#pragma once

#include <cstdint>
#include <vector>

#include "nat.hpp"

namespace powerful {

// Half-open range (x, x+y] with y >= 1; construction checks x+y <= 2^127-1.
struct Interval {
  Nat x;
  Nat y;

  Interval(Nat x_, Nat y_);
  Nat upper() const { return x + y; }
};

namespace detail {

using EmitFn = bool (*)(void*, Nat);

// prime-DFS over exponent patterns >= k; values unordered, early-stoppable.
// smooth_bound == 0 means unrestricted.
void visit_kfull_interval_impl(Interval iv, uint32_t k, Nat smooth_bound, EmitFn emit, void* ctx);

// n = a^2 b^3 with b squarefree; independent of the DFS route (k = 2 only).
void visit_squarefull_interval_impl(Interval iv, EmitFn emit, void* ctx);

}  // namespace detail

// Unordered streaming visitors; the callback returns false to stop early.
template <class Fn>
void visit_kfull_interval(Interval iv, uint32_t k, Nat smooth_bound, Fn&& fn) {
  detail::visit_kfull_interval_impl(
      iv, k, smooth_bound,
      [](void* c, Nat v) -> bool { return (*static_cast<std::remove_reference_t<Fn>*>(c))(v); },
      &fn);
}

template <class Fn>
void visit_squarefull_interval(Interval iv, Fn&& fn) {
  detail::visit_squarefull_interval_impl(
      iv,
      [](void* c, Nat v) -> bool { return (*static_cast<std::remove_reference_t<Fn>*>(c))(v); },
      &fn);
}

// Sorted, duplicate-free enumerations.
std::vector<Nat> enumerate_kfull_upto(Nat N, uint32_t k);
std::vector<Nat> enumerate_kfull_interval(Interval iv, uint32_t k);
std::vector<Nat> enumerate_squarefull_interval(Interval iv);
std::vector<Nat> enumerate_smooth_kfull_interval(Interval iv, uint32_t k, Nat B);

// Squarefull enumeration picking the cheaper route (a^2 b^3 for k = 2).
std::vector<Nat> enumerate_auto(Interval iv, uint32_t k, Nat smooth_bound);

}  // namespace powerful
