#include "abckit.hpp"

#include <algorithm>
#include <cmath>

#include "intcore.hpp"

namespace powerful {

AbcTriple make_abc_triple(Nat a, Nat b, Nat c) {
  if (a == 0 || a > b || b >= c) throw domain_error("abc triple requires 0 < a <= b < c");
  if (checked_add(a, b) != c) throw domain_error("abc triple requires a + b = c");
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
    throw domain_error("abc triple requires pairwise coprime a, b, c");
  Nat rad = checked_mul(checked_mul(radical(a), radical(b)), radical(c));
  if (rad == 1) throw domain_error("abc quality undefined for radical 1");
  double quality = std::log(to_double(c)) / std::log(to_double(rad));
  return {a, b, c, rad, quality};
}

AbcTriple make_coprime_triple(Nat b, Nat c) {
  if (b == 0 || b >= c) throw domain_error("make_coprime_triple requires 0 < b < c");
  Nat a = c - b;
  Nat d = gcd(a, b);  // divides c as well
  Nat ra = a / d, rb = b / d;
  return make_abc_triple(std::min(ra, rb), std::max(ra, rb), c / d);
}

double abc_quality(Nat a, Nat b, Nat c) { return make_abc_triple(a, b, c).quality; }

std::vector<GapRecord> powerful_gap_scan(Nat N, uint32_t k, Nat gap_max) {
  if (k < 2) throw domain_error("powerful_gap_scan requires k >= 2");
  if (N < 1) throw domain_error("powerful_gap_scan requires N >= 1");
  auto values = enumerate_auto(Interval(0, N), k, 0);
  std::vector<GapRecord> out;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    Nat gap = values[i + 1] - values[i];
    if (gap > gap_max) continue;
    double exponent = std::log(to_double(gap)) / std::log(to_double(values[i + 1]));
    out.push_back({values[i], values[i + 1], gap, exponent});
  }
  std::sort(out.begin(), out.end(), [](const GapRecord& a, const GapRecord& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.b < b.b;
  });
  return out;
}

ApCertificate ap_abc_certificate(const ApTriple& t) {
  if (!(t.n1 < t.n2 && t.n2 < t.n3))
    throw domain_error("ap_abc_certificate requires n1 < n2 < n3");
  if (checked_add(t.n1, t.n3) != checked_mul(2, t.n2))
    throw domain_error("ap_abc_certificate requires n1 + n3 = 2 n2");
  if (!is_kfull(t.n1, 2) || !is_kfull(t.n2, 2) || !is_kfull(t.n3, 2))
    throw domain_error("ap_abc_certificate requires squarefull members");

  Nat d = t.n2 - t.n1;
  Nat D = gcd(t.n2, d);  // gcd(n2^2, d^2) = D^2 exactly, so one gcd suffices
  Nat D2 = checked_mul(D, D);
  Nat a_raw = checked_mul(t.n1, t.n3) / D2;
  Nat b_raw = checked_mul(d / D, d / D);
  Nat c_raw = checked_mul(t.n2 / D, t.n2 / D);
  AbcTriple triple = make_abc_triple(std::min(a_raw, b_raw), std::max(a_raw, b_raw), c_raw);
  return {t, D, triple};
}

}  // namespace powerful
