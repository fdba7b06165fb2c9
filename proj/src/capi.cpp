#include "powerful/powerful.h"

#include <cstring>
#include <string>
#include <vector>

#include "abckit.hpp"
#include "apsearch.hpp"
#include "counting.hpp"
#include "generate.hpp"
#include "intcore.hpp"
#include "intervals.hpp"
#include "nat.hpp"
#include "primes.hpp"

using namespace powerful;

namespace {

thread_local std::string t_last_error;

Nat from_c(pf_u128 v) { return ((Nat)v.hi << 64) | v.lo; }
pf_u128 to_c(Nat v) { return {(uint64_t)v, (uint64_t)(v >> 64)}; }

pf_status fail(pf_status code, const char* what) {
  t_last_error = what;
  return code;
}

template <class Fn>
pf_status guarded(Fn&& fn) {
  try {
    fn();
    return PF_OK;
  } catch (const domain_error& e) {
    return fail(PF_ERR_DOMAIN, e.what());
  } catch (const overflow_error& e) {
    return fail(PF_ERR_OVERFLOW, e.what());
  } catch (const std::exception& e) {
    return fail(PF_ERR_INTERNAL, e.what());
  }
}

pf_status require(bool ok, const char* what) {
  return ok ? PF_OK : fail(PF_ERR_DOMAIN, what);
}

pf_abc_triple to_c(const AbcTriple& t) {
  return {to_c(t.a), to_c(t.b), to_c(t.c), to_c(t.rad), t.quality};
}

// fill-or-count helper shared by the list-style queries
template <class T, class U, class Conv>
void copy_out(const std::vector<T>& items, U* out, size_t cap, size_t* count, Conv&& conv) {
  *count = items.size();
  if (!out) return;
  size_t n = items.size() < cap ? items.size() : cap;
  for (size_t i = 0; i < n; ++i) out[i] = conv(items[i]);
}

}  // namespace

struct pf_session {
  uint64_t sieve_limit;
};

extern "C" {

const char* pf_version(void) { return "1.0.0"; }

const char* pf_last_error(void) { return t_last_error.c_str(); }

pf_u128 pf_u128_from_u64(uint64_t v) { return {v, 0}; }

int pf_u128_eq(pf_u128 a, pf_u128 b) { return a.lo == b.lo && a.hi == b.hi; }

int pf_u128_is_no_prime(pf_u128 v) { return from_c(v) == kNoPrime; }

pf_status pf_u128_from_string(const char* text, pf_u128* out) {
  if (!text || !out) return fail(PF_ERR_DOMAIN, "null argument");
  try {
    *out = to_c(parse_nat(text));
    return PF_OK;
  } catch (const std::exception& e) {
    return fail(PF_ERR_PARSE, e.what());
  }
}

pf_status pf_u128_to_string(pf_u128 v, char* buf, size_t cap) {
  if (!buf) return fail(PF_ERR_DOMAIN, "null argument");
  std::string s = to_string(from_c(v));
  if (s.size() + 1 > cap) return fail(PF_ERR_BUFFER, "buffer below 40 bytes");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return PF_OK;
}

pf_session* pf_session_new(uint64_t sieve_limit) {
  try {
    if (sieve_limit) prime_table::set_configured_limit(sieve_limit);
    return new pf_session{sieve_limit ? sieve_limit : prime_table::configured_limit()};
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return nullptr;
  }
}

void pf_session_free(pf_session* s) { delete s; }

/* ---- integer kernels ------------------------------------------------ */

pf_status pf_ikroot(pf_u128 n, uint32_t k, pf_u128* out) {
  if (auto st = require(out, "null out-pointer")) return st;
  return guarded([&] { *out = to_c(ikroot(from_c(n), k)); });
}

pf_status pf_gcd(pf_u128 a, pf_u128 b, pf_u128* out) {
  if (auto st = require(out, "null out-pointer")) return st;
  return guarded([&] { *out = to_c(gcd(from_c(a), from_c(b))); });
}

pf_status pf_factorize(pf_session* s, pf_u128 n, pf_factor* factors, size_t cap, size_t* count) {
  if (auto st = require(s && count, "null argument")) return st;
  return guarded([&] {
    auto f = factorize(from_c(n));
    copy_out(f, factors, cap, count,
             [](const PrimePower& pp) { return pf_factor{to_c(pp.prime), pp.exponent}; });
  });
}

pf_status pf_radical(pf_session* s, pf_u128 n, pf_u128* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = to_c(radical(from_c(n))); });
}

pf_status pf_fullness(pf_session* s, pf_u128 n, uint32_t* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = fullness(from_c(n)); });
}

pf_status pf_is_kfull(pf_session* s, pf_u128 n, uint32_t k, int* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = is_kfull(from_c(n), k) ? 1 : 0; });
}

pf_status pf_largest_prime_factor(pf_session* s, pf_u128 n, pf_u128* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = to_c(largest_prime_factor(from_c(n))); });
}

pf_status pf_smallest_prime_factor(pf_session* s, pf_u128 n, pf_u128* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = to_c(smallest_prime_factor(from_c(n))); });
}

pf_status pf_totient(pf_session* s, pf_u128 q, pf_u128* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = to_c(totient(from_c(q))); });
}

/* ---- enumeration ---------------------------------------------------- */

struct pf_enum {
  std::vector<Nat> values;
  size_t cursor = 0;
};

pf_status pf_enum_interval_new(pf_session* s, pf_u128 x, pf_u128 y, uint32_t k,
                               pf_u128 smooth_bound, pf_algorithm algo, pf_enum** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    Interval iv(from_c(x), from_c(y));
    Nat bound = from_c(smooth_bound);
    std::vector<Nat> values;
    switch (algo) {
      case PF_ALGO_A2B3:
        if (k != 2) throw domain_error("the a^2 b^3 route applies to k = 2 only");
        if (bound != 0) throw domain_error("the a^2 b^3 route has no smoothness filter");
        values = enumerate_squarefull_interval(iv);
        break;
      case PF_ALGO_DFS:
        values = bound ? enumerate_smooth_kfull_interval(iv, k, bound)
                       : enumerate_kfull_interval(iv, k);
        break;
      case PF_ALGO_AUTO:
        values = bound ? enumerate_smooth_kfull_interval(iv, k, bound)
                       : enumerate_auto(iv, k, 0);
        break;
      default:
        throw domain_error("unknown algorithm selector");
    }
    *out = new pf_enum{std::move(values)};
  });
}

pf_status pf_enum_upto_new(pf_session* s, pf_u128 n, uint32_t k, pf_enum** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new pf_enum{enumerate_kfull_upto(from_c(n), k)}; });
}

pf_status pf_enum_next(pf_enum* e, pf_u128* values, size_t cap, size_t* produced) {
  if (auto st = require(e && values && produced, "null argument")) return st;
  size_t n = 0;
  while (n < cap && e->cursor < e->values.size()) values[n++] = to_c(e->values[e->cursor++]);
  *produced = n;
  return PF_OK;
}

void pf_enum_free(pf_enum* e) { delete e; }

/* ---- counting ------------------------------------------------------- */

pf_status pf_qk_count(pf_session* s, pf_u128 x, uint32_t k, pf_u128* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = to_c(qk_count(from_c(x), k)); });
}

pf_status pf_zeta(double sarg, double* out) {
  if (auto st = require(out, "null out-pointer")) return st;
  return guarded([&] { *out = zeta_real(sarg); });
}

pf_status pf_euler_product_constant(pf_session* s, uint32_t k, uint64_t P,
                                    pf_euler_constant* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = euler_product_constant(k, P);
    *out = {r.k, r.truncation_prime, r.value, r.tail_bound};
  });
}

pf_status pf_verify_main_term(pf_session* s, pf_u128 x, uint32_t k, pf_main_term_check* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = verify_main_term(from_c(x), k);
    *out = {to_c(r.observed), r.predicted_main, r.ratio, r.residual_normalized};
  });
}

pf_status pf_short_interval_ratio(pf_session* s, pf_u128 x, double theta, uint32_t k,
                                  pf_interval_ratio* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = short_interval_ratio(from_c(x), theta, k);
    *out = {to_c(r.window), to_c(r.observed), r.predicted, r.ratio};
  });
}

pf_status pf_reciprocal_sum_squarefull(pf_session* s, pf_u128 X, pf_reciprocal_sum* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = reciprocal_sum_squarefull(from_c(X));
    *out = {r.sum, r.normalized};
  });
}

/* ---- scanners -------------------------------------------------------- */

pf_status pf_window_count(pf_session* s, pf_u128 x, pf_u128 y, uint32_t k, pf_window_report* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = window_count(from_c(x), from_c(y), k);
    *out = {to_c(r.x), to_c(r.y), r.k, to_c(r.count), r.conj_ratio, r.thm1_ratio};
  });
}

pf_status pf_sup_ratio_scan(pf_session* s, pf_u128 x_max, pf_u128 y, uint32_t k, unsigned threads,
                            pf_sup_ratio* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = sup_ratio_scan(from_c(x_max), from_c(y), k, threads);
    *out = {to_c(r.best_x), to_c(r.best_count), r.best_ratio};
  });
}

pf_status pf_residue_count(pf_session* s, pf_u128 x, pf_u128 y, pf_u128 q, pf_u128 r,
                           pf_residue_report* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto rep = residue_count(from_c(x), from_c(y), from_c(q), from_c(r));
    *out = {to_c(rep.count), rep.comparator, rep.coprime ? 1 : 0};
  });
}

pf_status pf_rough_count(pf_session* s, pf_u128 x, pf_u128 y, pf_u128 q, pf_u128 r, pf_u128 z,
                         pf_rough_report* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto rep = rough_count(from_c(x), from_c(y), from_c(q), from_c(r), from_c(z));
    *out = {to_c(rep.count), rep.comparator};
  });
}

pf_status pf_smooth_window_count(pf_session* s, pf_u128 x, pf_u128 y, uint32_t k, double exponent,
                                 pf_smooth_report* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto rep = smooth_window_count(from_c(x), from_c(y), k, exponent);
    *out = {to_c(rep.count), to_c(rep.smooth_bound), rep.comparator};
  });
}

pf_status pf_shiu_split_number(pf_session* s, pf_u128 n, pf_u128 z, pf_shiu_split* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto r = shiu_split(from_c(n), from_c(z));
    *out = {to_c(r.n), to_c(r.z), to_c(r.b_part), to_c(r.d_part), r.case_id};
  });
}

pf_status pf_case_histogram(pf_session* s, pf_u128 x, pf_u128 y, pf_u128 z, pf_u128 counts[3],
                            pf_u128* total) {
  if (auto st = require(s && counts && total, "null argument")) return st;
  return guarded([&] {
    auto h = case_histogram(from_c(x), from_c(y), from_c(z));
    for (int i = 0; i < 3; ++i) counts[i] = to_c(h.counts[i]);
    *total = to_c(h.total);
  });
}

/* ---- arithmetic progressions ------------------------------------------ */

pf_status pf_find_3aps(pf_session* s, pf_u128 x, pf_u128 y, pf_ap_triple* out, size_t cap,
                       size_t* count) {
  if (auto st = require(s && count, "null argument")) return st;
  return guarded([&] {
    auto aps = find_3aps(Interval(from_c(x), from_c(y)));
    copy_out(aps, out, cap, count, [](const ApTriple& t) {
      return pf_ap_triple{to_c(t.n1), to_c(t.n2), to_c(t.n3)};
    });
  });
}

pf_status pf_verify_no_ap_short(pf_session* s, const pf_u128* xs, size_t n_samples,
                                double exponent, pf_u128* windows, pf_ap_triple* hits,
                                size_t hits_cap, size_t* hit_count) {
  if (auto st = require(s && xs && hit_count, "null argument")) return st;
  return guarded([&] {
    std::vector<Nat> samples;
    samples.reserve(n_samples);
    for (size_t i = 0; i < n_samples; ++i) samples.push_back(from_c(xs[i]));
    auto report = verify_no_ap_short(samples, exponent);
    std::vector<ApTriple> all;
    for (size_t i = 0; i < report.samples.size(); ++i) {
      if (windows) windows[i] = to_c(report.samples[i].window);
      all.insert(all.end(), report.samples[i].hits.begin(), report.samples[i].hits.end());
    }
    copy_out(all, hits, hits_cap, hit_count, [](const ApTriple& t) {
      return pf_ap_triple{to_c(t.n1), to_c(t.n2), to_c(t.n3)};
    });
  });
}

pf_status pf_find_consecutive_pairs(pf_session* s, pf_u128 n, pf_pair* out, size_t cap,
                                    size_t* count) {
  if (auto st = require(s && count, "null argument")) return st;
  return guarded([&] {
    auto pairs = find_consecutive_pairs(from_c(n));
    copy_out(pairs, out, cap, count,
             [](const std::pair<Nat, Nat>& p) { return pf_pair{to_c(p.first), to_c(p.second)}; });
  });
}

pf_status pf_find_consecutive_triples(pf_session* s, pf_u128 n, pf_consecutive_triple* out,
                                      size_t cap, size_t* count) {
  if (auto st = require(s && count, "null argument")) return st;
  return guarded([&] {
    auto triples = find_consecutive_triples(from_c(n));
    copy_out(triples, out, cap, count, [](const std::array<Nat, 3>& t) {
      return pf_consecutive_triple{to_c(t[0]), to_c(t[1]), to_c(t[2])};
    });
  });
}

/* ---- abc machinery ------------------------------------------------------ */

pf_status pf_make_coprime_triple(pf_session* s, pf_u128 b, pf_u128 c, pf_abc_triple* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = to_c(make_coprime_triple(from_c(b), from_c(c))); });
}

pf_status pf_abc_quality(pf_session* s, pf_u128 a, pf_u128 b, pf_u128 c, double* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = abc_quality(from_c(a), from_c(b), from_c(c)); });
}

pf_status pf_powerful_gap_scan(pf_session* s, pf_u128 n, uint32_t k, pf_u128 gap_max,
                               pf_gap_record* out, size_t cap, size_t* count) {
  if (auto st = require(s && count, "null argument")) return st;
  return guarded([&] {
    auto records = powerful_gap_scan(from_c(n), k, from_c(gap_max));
    copy_out(records, out, cap, count, [](const GapRecord& g) {
      return pf_gap_record{to_c(g.b), to_c(g.c), to_c(g.gap), g.exponent};
    });
  });
}

pf_status pf_ap_abc_certificate(pf_session* s, pf_ap_triple t, pf_ap_certificate* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    auto cert = ap_abc_certificate(ApTriple{from_c(t.n1), from_c(t.n2), from_c(t.n3)});
    *out = {t, to_c(cert.divisor), to_c(cert.triple)};
  });
}

} /* extern "C" */
