/*
 * powerful.h - C interface to libpowerful, a library for enumerating and
 * analyzing powerful (k-full) numbers: exact 128-bit enumeration in ranges
 * and short intervals, counting constants, arithmetic-progression structure,
 * and abc-triple machinery.
 *
 * Conventions:
 *   - every function returns a pf_status; results go through out-pointers
 *   - pf_u128 carries unsigned 128-bit values (valid range 0 .. 2^127-1)
 *   - on any error, pf_last_error() gives a thread-local description
 *   - list-style queries may be called with a NULL output array to obtain
 *     the element count first; with a buffer, at most `cap` items are
 *     written and *count always reports the full size
 */
#ifndef POWERFUL_H
#define POWERFUL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_DOMAIN = 1,   /* precondition violated (see pf_last_error) */
  PF_ERR_OVERFLOW = 2, /* exact arithmetic would exceed 2^127-1 */
  PF_ERR_PARSE = 3,    /* malformed numeric text */
  PF_ERR_BUFFER = 4,   /* output buffer too small */
  PF_ERR_INTERNAL = 5
} pf_status;

typedef struct pf_u128 {
  uint64_t lo;
  uint64_t hi;
} pf_u128;

/* fullness(1); every n is k-full below this sentinel */
#define PF_FULLNESS_INFINITE UINT32_MAX

const char* pf_version(void);
const char* pf_last_error(void);

/* ---- 128-bit value helpers ---------------------------------------- */

pf_u128 pf_u128_from_u64(uint64_t v);
int pf_u128_eq(pf_u128 a, pf_u128 b);
/* accepts decimal, underscore separators ("10_000") and exact scientific
 * shorthand ("1e12"); rejects non-integral or out-of-range input */
pf_status pf_u128_from_string(const char* text, pf_u128* out);
pf_status pf_u128_to_string(pf_u128 v, char* buf, size_t cap);

/* returns 1 when smallest_prime_factor reported its infinite sentinel */
int pf_u128_is_no_prime(pf_u128 v);

/* ---- session: owns sieve configuration ----------------------------- */

typedef struct pf_session pf_session;

/* sieve_limit 0 keeps the default (POWERFUL_LAB_SIEVE_LIMIT or 1e7) */
pf_session* pf_session_new(uint64_t sieve_limit);
void pf_session_free(pf_session* s);

/* ---- integer kernels ------------------------------------------------ */

typedef struct pf_factor {
  pf_u128 prime;
  uint32_t exponent;
} pf_factor;

pf_status pf_ikroot(pf_u128 n, uint32_t k, pf_u128* out);
pf_status pf_gcd(pf_u128 a, pf_u128 b, pf_u128* out);
pf_status pf_factorize(pf_session* s, pf_u128 n, pf_factor* factors, size_t cap, size_t* count);
pf_status pf_radical(pf_session* s, pf_u128 n, pf_u128* out);
pf_status pf_fullness(pf_session* s, pf_u128 n, uint32_t* out);
pf_status pf_is_kfull(pf_session* s, pf_u128 n, uint32_t k, int* out);
pf_status pf_largest_prime_factor(pf_session* s, pf_u128 n, pf_u128* out);
pf_status pf_smallest_prime_factor(pf_session* s, pf_u128 n, pf_u128* out);
pf_status pf_totient(pf_session* s, pf_u128 q, pf_u128* out);

/* ---- enumeration ---------------------------------------------------- */

/* opaque ascending stream of k-full numbers */
typedef struct pf_enum pf_enum;

typedef enum pf_algorithm {
  PF_ALGO_AUTO = 0, /* a^2 b^3 parametrization for plain k = 2, DFS otherwise */
  PF_ALGO_DFS = 1,
  PF_ALGO_A2B3 = 2, /* k = 2 only */
} pf_algorithm;

/* k-full numbers in (x, x+y]; smooth_bound 0 means unrestricted */
pf_status pf_enum_interval_new(pf_session* s, pf_u128 x, pf_u128 y, uint32_t k,
                               pf_u128 smooth_bound, pf_algorithm algo, pf_enum** out);
/* k-full numbers in [1, n] */
pf_status pf_enum_upto_new(pf_session* s, pf_u128 n, uint32_t k, pf_enum** out);
/* fills up to cap values; *produced < cap signals exhaustion */
pf_status pf_enum_next(pf_enum* e, pf_u128* values, size_t cap, size_t* produced);
void pf_enum_free(pf_enum* e);

/* ---- counting ------------------------------------------------------- */

typedef struct pf_euler_constant {
  uint32_t k;
  uint64_t truncation_prime;
  double value;
  double tail_bound; /* true constant in [value, value*exp(tail_bound)] */
} pf_euler_constant;

typedef struct pf_main_term_check {
  pf_u128 observed;
  double predicted_main;
  double ratio;
  double residual_normalized;
} pf_main_term_check;

typedef struct pf_interval_ratio {
  pf_u128 window;
  pf_u128 observed;
  double predicted;
  double ratio;
} pf_interval_ratio;

typedef struct pf_reciprocal_sum {
  double sum;
  double normalized; /* sum * sqrt(X) */
} pf_reciprocal_sum;

pf_status pf_qk_count(pf_session* s, pf_u128 x, uint32_t k, pf_u128* out);
pf_status pf_zeta(double sarg, double* out);
pf_status pf_euler_product_constant(pf_session* s, uint32_t k, uint64_t P, pf_euler_constant* out);
pf_status pf_verify_main_term(pf_session* s, pf_u128 x, uint32_t k, pf_main_term_check* out);
pf_status pf_short_interval_ratio(pf_session* s, pf_u128 x, double theta, uint32_t k,
                                  pf_interval_ratio* out);
pf_status pf_reciprocal_sum_squarefull(pf_session* s, pf_u128 X, pf_reciprocal_sum* out);

/* ---- short-interval scanners ---------------------------------------- */

typedef struct pf_window_report {
  pf_u128 x, y;
  uint32_t k;
  pf_u128 count;
  double conj_ratio; /* count / y^(1/k) */
  double thm1_ratio; /* count * log(y+1) / y */
} pf_window_report;

typedef struct pf_sup_ratio {
  pf_u128 best_x; /* smallest window start attaining the maximal count */
  pf_u128 best_count;
  double best_ratio;
} pf_sup_ratio;

typedef struct pf_residue_report {
  pf_u128 count;
  double comparator; /* y / (phi(q) log(y+1)) */
  int coprime;
} pf_residue_report;

typedef struct pf_rough_report {
  pf_u128 count;
  double comparator; /* y / (phi(q) log z) + z^2 */
} pf_rough_report;

typedef struct pf_smooth_report {
  pf_u128 count;
  pf_u128 smooth_bound;
  double comparator; /* y^(11/12) */
} pf_smooth_report;

typedef struct pf_shiu_split {
  pf_u128 n, z, b_part, d_part;
  int case_id; /* 1, 2 or 3 */
} pf_shiu_split;

pf_status pf_window_count(pf_session* s, pf_u128 x, pf_u128 y, uint32_t k, pf_window_report* out);
pf_status pf_sup_ratio_scan(pf_session* s, pf_u128 x_max, pf_u128 y, uint32_t k, unsigned threads,
                            pf_sup_ratio* out);
pf_status pf_residue_count(pf_session* s, pf_u128 x, pf_u128 y, pf_u128 q, pf_u128 r,
                           pf_residue_report* out);
pf_status pf_rough_count(pf_session* s, pf_u128 x, pf_u128 y, pf_u128 q, pf_u128 r, pf_u128 z,
                         pf_rough_report* out);
pf_status pf_smooth_window_count(pf_session* s, pf_u128 x, pf_u128 y, uint32_t k, double exponent,
                                 pf_smooth_report* out);
pf_status pf_shiu_split_number(pf_session* s, pf_u128 n, pf_u128 z, pf_shiu_split* out);
pf_status pf_case_histogram(pf_session* s, pf_u128 x, pf_u128 y, pf_u128 z, pf_u128 counts[3],
                            pf_u128* total);

/* ---- arithmetic progressions ----------------------------------------- */

typedef struct pf_ap_triple {
  pf_u128 n1, n2, n3;
} pf_ap_triple;

typedef struct pf_pair {
  pf_u128 a, b;
} pf_pair;

typedef struct pf_consecutive_triple {
  pf_u128 a, b, c;
} pf_consecutive_triple;

pf_status pf_find_3aps(pf_session* s, pf_u128 x, pf_u128 y, pf_ap_triple* out, size_t cap,
                       size_t* count);
/* per-sample window floor(x^exponent); hits appended across samples */
pf_status pf_verify_no_ap_short(pf_session* s, const pf_u128* xs, size_t n_samples,
                                double exponent, pf_u128* windows, pf_ap_triple* hits,
                                size_t hits_cap, size_t* hit_count);
pf_status pf_find_consecutive_pairs(pf_session* s, pf_u128 n, pf_pair* out, size_t cap,
                                    size_t* count);
pf_status pf_find_consecutive_triples(pf_session* s, pf_u128 n, pf_consecutive_triple* out,
                                      size_t cap, size_t* count);

/* ---- abc machinery ---------------------------------------------------- */

typedef struct pf_abc_triple {
  pf_u128 a, b, c;
  pf_u128 rad;
  double quality; /* log c / log rad */
} pf_abc_triple;

typedef struct pf_gap_record {
  pf_u128 b, c;
  pf_u128 gap;
  double exponent; /* log(gap) / log(c) */
} pf_gap_record;

typedef struct pf_ap_certificate {
  pf_ap_triple source;
  pf_u128 divisor; /* D = gcd(n2, n2 - n1) */
  pf_abc_triple triple;
} pf_ap_certificate;

pf_status pf_make_coprime_triple(pf_session* s, pf_u128 b, pf_u128 c, pf_abc_triple* out);
pf_status pf_abc_quality(pf_session* s, pf_u128 a, pf_u128 b, pf_u128 c, double* out);
pf_status pf_powerful_gap_scan(pf_session* s, pf_u128 n, uint32_t k, pf_u128 gap_max,
                               pf_gap_record* out, size_t cap, size_t* count);
pf_status pf_ap_abc_certificate(pf_session* s, pf_ap_triple t, pf_ap_certificate* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POWERFUL_H */
