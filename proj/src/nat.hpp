#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powerful {

// Unsigned 128-bit scalar used for every integer quantity in the library.
// All arithmetic is exact: anything that would exceed kNatMax reports
// overflow instead of wrapping.
using Nat = unsigned __int128;

inline constexpr Nat kNatMax = (~(Nat)0) >> 1;  // 2^127 - 1

class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class overflow_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-throwing checked ops for hot loops. `out` is untouched on failure.
inline bool try_add(Nat a, Nat b, Nat* out) noexcept {
  Nat r;
  if (__builtin_add_overflow(a, b, &r) || r > kNatMax) return false;
  *out = r;
  return true;
}

inline bool try_mul(Nat a, Nat b, Nat* out) noexcept {
  Nat r;
  if (__builtin_mul_overflow(a, b, &r) || r > kNatMax) return false;
  *out = r;
  return true;
}

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Nat checked_pow(Nat base, uint32_t exp);
std::optional<Nat> try_pow(Nat base, uint32_t exp) noexcept;

std::string to_string(Nat v);

// Accepts plain decimal, underscore digit separators (10_000_000) and the
// scientific shorthand 1e12 / 2.5e3, expanded exactly; non-integral or
// out-of-range input is rejected.
Nat parse_nat(std::string_view text);

inline double to_double(Nat v) noexcept { return static_cast<double>(v); }

}  // namespace powerful
