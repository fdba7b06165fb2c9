#include "nat.hpp"

#include <cctype>

namespace powerful {

Nat checked_add(Nat a, Nat b) {
  Nat r;
  if (!try_add(a, b, &r)) throw overflow_error("addition exceeds 2^127-1");
  return r;
}

Nat checked_mul(Nat a, Nat b) {
  Nat r;
  if (!try_mul(a, b, &r)) throw overflow_error("multiplication exceeds 2^127-1");
  return r;
}

std::optional<Nat> try_pow(Nat base, uint32_t exp) noexcept {
  Nat result = 1;
  Nat b = base;
  while (exp) {
    if (exp & 1) {
      if (!try_mul(result, b, &result)) return std::nullopt;
    }
    exp >>= 1;
    if (exp && !try_mul(b, b, &b)) return std::nullopt;
  }
  return result;
}

Nat checked_pow(Nat base, uint32_t exp) {
  auto r = try_pow(base, exp);
  if (!r) throw overflow_error("power exceeds 2^127-1");
  return *r;
}

std::string to_string(Nat v) {
  char buf[40];
  char* p = buf + sizeof(buf);
  do {
    *--p = char('0' + (unsigned)(v % 10));
    v /= 10;
  } while (v);
  return std::string(p, buf + sizeof(buf));
}

namespace {

Nat digits_to_nat(std::string_view digits) {
  Nat v = 0;
  for (char c : digits) {
    Nat d = Nat(c - '0');
    if (!try_mul(v, 10, &v) || !try_add(v, d, &v))
      throw domain_error("integer literal exceeds 2^127-1");
  }
  return v;
}

}  // namespace

Nat parse_nat(std::string_view text) {
  std::string mantissa;
  std::string frac;
  std::string expo;
  bool seen_e = false, seen_dot = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '_') {
      if (seen_e || seen_dot) throw domain_error("underscores allowed only in the integer part");
      continue;
    }
    if (c == 'e' || c == 'E') {
      if (seen_e || i == 0) throw domain_error("malformed numeric literal");
      seen_e = true;
      if (i + 1 < text.size() && text[i + 1] == '+') ++i;
      continue;
    }
    if (c == '.') {
      if (seen_dot || seen_e) throw domain_error("malformed numeric literal");
      seen_dot = true;
      continue;
    }
    if (!std::isdigit((unsigned char)c)) throw domain_error("invalid character in numeric literal");
    (seen_e ? expo : (seen_dot ? frac : mantissa)).push_back(c);
  }
  if (mantissa.empty()) throw domain_error("empty numeric literal");
  if (seen_e && expo.empty()) throw domain_error("malformed exponent");
  if (seen_dot && !seen_e) throw domain_error("numeric literal must be an integer");

  uint64_t e = 0;
  for (char c : expo) {
    e = e * 10 + uint64_t(c - '0');
    if (e > 200) throw domain_error("exponent out of range");
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  // shift the fractional digits into the exponent: a.bc e5 == abc e3
  if (frac.size() > e) throw domain_error("scientific literal is not an integer");
  e -= frac.size();
  mantissa += frac;

  Nat v = digits_to_nat(mantissa);
  for (uint64_t i = 0; i < e; ++i) {
    if (!try_mul(v, 10, &v)) throw domain_error("integer literal exceeds 2^127-1");
  }
  return v;
}

}  // namespace powerful
