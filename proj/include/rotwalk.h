/*
 * rotwalk - random walks on the circle generated by d rotations.
 *
 * C interface to the library: exact step-k distributions on the coefficient
 * lattice, their projection to atomic measures on the circle, exact
 * discrepancy from the uniform measure, Fourier-analytic lower/upper bounds,
 * Diophantine approximation constants, and the experiment runners behind
 * the CLI.
 *
 * Conventions: every fallible call returns rw_status and reports results
 * through out-parameters; rw_last_error() describes the most recent failure
 * on the calling thread. Handles are opaque and freed with their matching
 * rw_*_free function (NULL is accepted).
 */

#ifndef ROTWALK_H
#define ROTWALK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RW_API __declspec(dllexport)
#else
#define RW_API __attribute__((visibility("default")))
#endif

typedef enum rw_status {
    RW_OK = 0,
    RW_ERR_INVALID = 1, /* bad argument or precondition violation */
    RW_ERR_PARSE = 2,   /* malformed alpha spec or config value */
    RW_ERR_LIMIT = 3,   /* resource cap exceeded */
    RW_ERR_IO = 4       /* output not writable */
} rw_status;

typedef struct rw_alpha rw_alpha;     /* generator tuple */
typedef struct rw_dist rw_dist;       /* exact lattice distribution */
typedef struct rw_measure rw_measure; /* atomic measure on [0,1) */
typedef struct rw_config rw_config;   /* experiment configuration */

/* Message for the last failure on this thread; empty string if none. */
RW_API const char* rw_last_error(void);

/* ---- generator tuples ------------------------------------------------- */

/* Specs: "phi" | "plastic" | "sqrt:n1,n2,..." | "dec:v1,v2,..." */
RW_API rw_status rw_alpha_parse(const char* spec, rw_alpha** out);
RW_API int rw_alpha_dim(const rw_alpha* a);
/* Copies the d entries into out (capacity cap). */
RW_API rw_status rw_alpha_entries(const rw_alpha* a, double* out, int cap);
RW_API void rw_alpha_free(rw_alpha* a);

/* ---- exact lattice distributions -------------------------------------- */

/* k-fold convolution power; refuses when (2k+1)^d exceeds support_cap
 * (support_cap <= 0 selects the default of 5e6 lattice points). */
RW_API rw_status rw_walk_exact(int d, long k, long long support_cap, rw_dist** out);
RW_API int rw_dist_dim(const rw_dist* dist);
RW_API long rw_dist_k(const rw_dist* dist);
RW_API long long rw_dist_support(const rw_dist* dist);
/* Exact path count at coefficient vector m (length d), as a decimal
 * string; fails with RW_ERR_INVALID when buf is too small. */
RW_API rw_status rw_dist_count(const rw_dist* dist, const long* m, char* buf, size_t buflen);
RW_API void rw_dist_free(rw_dist* dist);

/* ---- atomic measures and discrepancy ----------------------------------- */

RW_API rw_status rw_project(const rw_dist* dist, const rw_alpha* a, rw_measure** out);
RW_API rw_status rw_sample(const rw_alpha* a, long k, long long n_samples,
                           unsigned long long seed, rw_measure** out);
/* Builds a measure from raw atoms (sorted/merged/validated). */
RW_API rw_status rw_measure_create(const double* positions, const double* weights,
                                   long long n, rw_measure** out);
RW_API long long rw_measure_size(const rw_measure* p);
RW_API rw_status rw_measure_atoms(const rw_measure* p, double* positions, double* weights,
                                  long long cap);
/* sup over connected arcs of |P(I) - U(I)|. */
RW_API rw_status rw_discrepancy(const rw_measure* p, double* out);
/* Independent arc-enumeration oracle; refuses above 64 atoms. */
RW_API rw_status rw_discrepancy_oracle(const rw_measure* p, double* out);
RW_API void rw_measure_free(rw_measure* p);

/* ---- Fourier bounds ----------------------------------------------------- */

/* (1/d) sum_l cos(2 pi m alpha_l). */
RW_API rw_status rw_fourier_coefficient(const rw_alpha* a, long long m, double* out);
RW_API rw_status rw_su_lower(const rw_alpha* a, long k, long long m_max, double* out);
RW_API rw_status rw_et_upper(const rw_alpha* a, long k, long long M, double* out);
/* Best M in [1, m_cap] and the bound it attains. */
RW_API rw_status rw_et_optimize(const rw_alpha* a, long k, long long m_cap,
                                long long* m_out, double* bound_out);
/* floor((beta^2 k / d^3)^{d/2} / 2), clamped to >= 1. */
RW_API rw_status rw_analytic_truncation(double beta, long k, int d, long long* out);
/* c1 = 0.0947 (sqrt(d)/(5b))^d, c2 = 19.857 (d sqrt(d)/beta)^d. */
RW_API rw_status rw_envelope_constants(int d, double b, double beta, double* c1, double* c2);

/* ---- Diophantine scans --------------------------------------------------- */

/* Euclidean distance from x (length d) to the nearest integer vector. */
RW_API rw_status rw_nearest_int_dist(const double* x, int d, double* out);
RW_API rw_status rw_beta_hat(const rw_alpha* a, long long n_max, double* value,
                             long long* argmin);
/* per_q_cap <= 0 selects the default of 1e6. */
RW_API rw_status rw_dirichlet_b_hat(const rw_alpha* a, long long q_max, long long per_q_cap,
                                    double* out);
RW_API double rw_davenport_mahler_threshold(void);
/* 1 when beta exceeds the d=2 threshold (an impossible claim), else 0. */
RW_API rw_status rw_davenport_mahler_exceeded(double beta, int* out);

/* ---- experiment runner ---------------------------------------------------- */

RW_API rw_config* rw_config_new(void);
RW_API void rw_config_free(rw_config* cfg);
RW_API rw_status rw_config_set_alpha(rw_config* cfg, const char* spec);
RW_API rw_status rw_config_set_k_range(rw_config* cfg, long k_min, long k_max, long k_step);
/* "exact" | "montecarlo" | "both" */
RW_API rw_status rw_config_set_mode(rw_config* cfg, const char* mode);
RW_API rw_status rw_config_set_samples(rw_config* cfg, long long n_samples);
RW_API rw_status rw_config_set_seed(rw_config* cfg, unsigned long long seed);
RW_API rw_status rw_config_set_nmax(rw_config* cfg, long long n_max);
RW_API rw_status rw_config_set_qmax(rw_config* cfg, long long q_max);
RW_API rw_status rw_config_set_mcap(rw_config* cfg, long long m_cap);
RW_API rw_status rw_config_set_support_cap(rw_config* cfg, long long cap);
/* format: "csv" | "json"; path "-" writes to stdout. */
RW_API rw_status rw_config_set_output(rw_config* cfg, const char* path, const char* format);

/* Dump the k-step distribution (k = k_min) as position,weight atoms. */
RW_API rw_status rw_run_walk(const rw_config* cfg);
/* Per-k bound table with envelope values; also estimates beta_hat/b_hat. */
RW_API rw_status rw_run_verify(const rw_config* cfg);
/* Approximation constants and the Davenport-Mahler verdict (pairs). */
RW_API rw_status rw_run_dioph(const rw_config* cfg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ROTWALK_H */
