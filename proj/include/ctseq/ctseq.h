#ifndef CTSEQ_H
#define CTSEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(CTSEQ_BUILDING)
#define CTSEQ_API __attribute__((visibility("default")))
#else
#define CTSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctseq_status {
  CTSEQ_OK = 0,
  CTSEQ_E_USAGE = 1,         /* bad argument: non-prime p, unknown tag, arity */
  CTSEQ_E_PARSE = 2,         /* polynomial text rejected */
  CTSEQ_E_RESOURCE = 3,      /* a configured cap was hit */
  CTSEQ_E_INTERNAL = 4,
  CTSEQ_E_MISMATCH = 5,      /* oracle check found a disagreement */
  CTSEQ_E_INCONCLUSIVE = 6   /* classification stopped at the state cap */
} ctseq_status;

/* One sequence ct(P^n Q) mod p^a. */
typedef struct ctseq_problem ctseq_problem;

/* Message for the last failing call on this thread; never NULL. */
CTSEQ_API const char* ctseq_last_error(void);

/* Strings and term arrays returned through out-parameters belong to the
   caller and are released with these. */
CTSEQ_API void ctseq_string_free(char* s);
CTSEQ_API void ctseq_terms_free(int64_t* terms);

/* poly is an expression or "@pascal", "@catalan", "@motzkin", "@trinomial",
   "@apery". q may be NULL for the preset's Q (or 1). */
CTSEQ_API ctseq_status ctseq_problem_create(const char* poly, const char* q, uint64_t p,
                                            unsigned a, ctseq_problem** out);
CTSEQ_API void ctseq_problem_destroy(ctseq_problem* problem);

/* engine: "linrep", "dfao", "reverse-dfao", "morphism" or "oracle". */
CTSEQ_API ctseq_status ctseq_generate(const ctseq_problem* problem, const char* engine,
                                      uint64_t count, int64_t** terms);

/* Verdict as JSON (json != 0) or text. An inconclusive verdict is still
   written to *text and reported as CTSEQ_E_INCONCLUSIVE. */
CTSEQ_API ctseq_status ctseq_classify(const ctseq_problem* problem, int json, char** text);

/* direction: "forward" or "reverse"; format: "dot" or "walnut". */
CTSEQ_API ctseq_status ctseq_export_dfao(const ctseq_problem* problem, const char* direction,
                                         const char* format, char** text);

CTSEQ_API ctseq_status ctseq_zero_frequency(const ctseq_problem* problem, uint64_t n,
                                            uint64_t* num, uint64_t* den, char** text);

CTSEQ_API ctseq_status ctseq_gap_report(const ctseq_problem* problem, uint64_t length,
                                        uint64_t n, char** text);

/* b_n = sum_i coefficients[i] ct(P^(n + shifts[i]) Q_i) mod p^a with Q_i
   given as text; the problem's own Q is not used. */
CTSEQ_API ctseq_status ctseq_combine(const ctseq_problem* problem, size_t parts,
                                     const uint64_t* shifts, const char* const* qs,
                                     const int64_t* coefficients, uint64_t count,
                                     int64_t** terms);

/* workers = 0 picks the hardware concurrency. */
CTSEQ_API ctseq_status ctseq_conjecture_scan(unsigned degree_max, unsigned coeff_max,
                                             size_t count, const uint64_t* primes,
                                             size_t prime_count, uint64_t seed,
                                             unsigned workers, char** text);

/* Compares every engine against the oracle on n terms. The report is
   written either way; disagreement returns CTSEQ_E_MISMATCH. */
CTSEQ_API ctseq_status ctseq_oracle_check(const ctseq_problem* problem, uint64_t n, char** text);

/* Canonical form of an expression or preset P. */
CTSEQ_API ctseq_status ctseq_format_poly(const char* poly, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CTSEQ_H */
