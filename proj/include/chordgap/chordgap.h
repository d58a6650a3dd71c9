/*
 * Copyright 2026 The chordgap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the chordgap library: chord gap divergences, skew
 * Jensen / Bregman divergences, Bhattacharyya distances on exponential
 * families, CCCP centroids and k-means++ clustering.
 *
 * Objects are opaque handles created by cg_*_create and released by the
 * matching cg_*_destroy. Every fallible call returns a cg_status; on error
 * cg_last_error() returns a message for the calling thread.
 *
 * Points are passed as arrays of coordinates. For vector generators the
 * coordinates are the vector itself. Matrix generators ("logdet",
 * "gaussian_cumulant") use an isometric half-vectorization internally;
 * cg_generator_encode / cg_generator_decode convert from / to the dense
 * row-major layout.
 */

#ifndef CHORDGAP_CHORDGAP_H
#define CHORDGAP_CHORDGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CHORDGAP_BUILDING)
#    define CG_API __declspec(dllexport)
#  else
#    define CG_API __declspec(dllimport)
#  endif
#else
#  define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_ARGUMENT = 1,  /* null pointer, bad buffer length */
  CG_ERR_PARAMETER = 2, /* invalid alpha/beta/gamma, k, tolerance, generator id */
  CG_ERR_DATA = 3,      /* malformed data: dimensions, weights */
  CG_ERR_DOMAIN = 4,    /* argument outside a generator domain */
  CG_ERR_NUMERICAL = 5, /* solver failure */
  CG_ERR_INTERNAL = 6
} cg_status;

typedef struct cg_generator cg_generator;
typedef struct cg_pointset cg_pointset;
typedef struct cg_centroid cg_centroid;
typedef struct cg_clustering cg_clustering;
typedef struct cg_distribution cg_distribution;

typedef struct cg_params {
  double alpha;
  double beta;
  double gamma;
} cg_params;

typedef enum cg_orientation {
  CG_POINT_FIRST = 0,  /* D(p_i : c) */
  CG_CENTER_FIRST = 1  /* D(c : p_i) */
} cg_orientation;

typedef enum cg_centroid_init {
  CG_INIT_GRADIENT_MEAN = 0,
  CG_INIT_FIRST_POINT = 1
} cg_centroid_init;

CG_API const char* cg_version(void);
CG_API const char* cg_last_error(void);
CG_API const char* cg_status_name(cg_status status);

/* Validates a parameter triple and returns its lambda. */
CG_API cg_status cg_params_lambda(const cg_params* params, double* lambda);

/* ---- generators ---- */

/* id: "quadratic" | "negentropy" | "logsumexp" | "gaussian_cumulant" | "logdet" */
CG_API cg_status cg_generator_create(const char* id, size_t dimension, cg_generator** out);
CG_API void cg_generator_destroy(cg_generator* gen);
CG_API size_t cg_generator_coordinates(const cg_generator* gen);
CG_API size_t cg_generator_dense_size(const cg_generator* gen);
CG_API size_t cg_generator_dimension(const cg_generator* gen);
/* Writes at most `capacity` bytes including the terminator. */
CG_API cg_status cg_generator_id(const cg_generator* gen, char* buffer, size_t capacity);
/* Dimension implied by `dense_values` values per point. */
CG_API cg_status cg_dimension_from_dense(const char* id, size_t dense_values, size_t* dimension);

CG_API cg_status cg_generator_encode(const cg_generator* gen, const double* dense, size_t dense_len,
                                     double* coords, size_t coords_len);
CG_API cg_status cg_generator_decode(const cg_generator* gen, const double* coords,
                                     size_t coords_len, double* dense, size_t dense_len);
CG_API cg_status cg_generator_eval(const cg_generator* gen, const double* x, size_t len,
                                   double* value);
CG_API cg_status cg_generator_grad(const cg_generator* gen, const double* x, size_t len,
                                   double* grad);
CG_API cg_status cg_generator_grad_inverse(const cg_generator* gen, const double* y, size_t len,
                                           double* x);
/* Row-major len x len matrix. */
CG_API cg_status cg_generator_hessian(const cg_generator* gen, const double* x, size_t len,
                                      double* hessian);

/* ---- divergences ---- */

CG_API cg_status cg_skew_jensen(const cg_generator* gen, const double* p, const double* q,
                                size_t len, double alpha, double* value);
CG_API cg_status cg_scaled_skew_jensen(const cg_generator* gen, const double* p, const double* q,
                                       size_t len, double alpha, double* value);
CG_API cg_status cg_bregman(const cg_generator* gen, const double* p, const double* q, size_t len,
                            double* value);
CG_API cg_status cg_jensen_bregman(const cg_generator* gen, const double* p, const double* q,
                                   size_t len, double alpha, double* value);
CG_API cg_status cg_chord_gap(const cg_generator* gen, const double* p, const double* q,
                              size_t len, const cg_params* params, double* value);
CG_API cg_status cg_chord_gap_alpha0(const cg_generator* gen, const double* p, const double* q,
                                     size_t len, double beta, double gamma, double* value);
CG_API cg_status cg_taylor_lagrange_bounds(const cg_generator* gen, const double* p,
                                           const double* q, size_t len, const cg_params* params,
                                           double* lower, double* upper);

/* ---- weighted point sets ---- */

/* coords: n rows of `coordinates` values. weights may be NULL (uniform);
 * weights are renormalized to sum to one. */
CG_API cg_status cg_pointset_create(const double* coords, size_t n, size_t coordinates,
                                    const double* weights, cg_pointset** out);
CG_API void cg_pointset_destroy(cg_pointset* set);
CG_API size_t cg_pointset_size(const cg_pointset* set);
CG_API size_t cg_pointset_coordinates(const cg_pointset* set);
CG_API cg_status cg_pointset_weights(const cg_pointset* set, double* weights, size_t len);

/* ---- centroid ---- */

typedef struct cg_centroid_options {
  double tol;       /* > 0 */
  int max_iter;     /* >= 0 */
  cg_centroid_init init;
} cg_centroid_options;

CG_API cg_centroid_options cg_centroid_options_default(void);

CG_API cg_status cg_centroid_energy(const cg_generator* gen, const cg_pointset* set,
                                    const double* x, size_t len, const cg_params* params,
                                    double* energy);
CG_API cg_status cg_cccp_step(const cg_generator* gen, const cg_pointset* set, const double* x,
                              size_t len, const cg_params* params, double* next);
CG_API cg_status cg_fixed_point_residual(const cg_generator* gen, const cg_pointset* set,
                                         const double* x, size_t len, const cg_params* params,
                                         double* residual);
CG_API cg_status cg_solve_centroid(const cg_generator* gen, const cg_pointset* set,
                                   const cg_params* params, const cg_centroid_options* options,
                                   cg_centroid** out);
CG_API void cg_centroid_destroy(cg_centroid* result);
CG_API cg_status cg_centroid_point(const cg_centroid* result, double* x, size_t len);
CG_API double cg_centroid_energy_value(const cg_centroid* result);
CG_API int cg_centroid_iterations(const cg_centroid* result);
CG_API int cg_centroid_converged(const cg_centroid* result);
CG_API size_t cg_centroid_trace_length(const cg_centroid* result);
CG_API cg_status cg_centroid_trace(const cg_centroid* result, double* trace, size_t len);

/* ---- clustering ---- */

typedef struct cg_cluster_config {
  size_t k;
  cg_params params;
  uint64_t seed;
  int max_rounds;
  double tol;
  int cccp_steps;
  cg_orientation orientation;
} cg_cluster_config;

CG_API cg_cluster_config cg_cluster_config_default(void);

CG_API cg_status cg_potential(const cg_generator* gen, const cg_pointset* set,
                              const double* centers, size_t k, const cg_params* params,
                              cg_orientation orientation, double* phi);

/* k-means++ seeding; centers receive the chosen point indices and
 * probabilities (k x n, row-major, may be NULL) the sampling distributions. */
CG_API cg_status cg_kmeanspp_seed(const cg_generator* gen, const cg_pointset* set, size_t k,
                                  const cg_params* params, uint64_t seed,
                                  cg_orientation orientation, size_t* chosen,
                                  double* probabilities);

CG_API cg_status cg_cluster(const cg_generator* gen, const cg_pointset* set,
                            const cg_cluster_config* config, cg_clustering** out);
CG_API void cg_clustering_destroy(cg_clustering* result);
CG_API size_t cg_clustering_k(const cg_clustering* result);
CG_API int cg_clustering_rounds(const cg_clustering* result);
CG_API int cg_clustering_converged(const cg_clustering* result);
/* k rows of coordinates. */
CG_API cg_status cg_clustering_centers(const cg_clustering* result, double* centers, size_t len);
CG_API cg_status cg_clustering_assignments(const cg_clustering* result, size_t* labels,
                                           size_t len);
CG_API size_t cg_clustering_trace_length(const cg_clustering* result);
CG_API cg_status cg_clustering_trace(const cg_clustering* result, double* trace, size_t len);
CG_API cg_status cg_clustering_seeds(const cg_clustering* result, size_t* chosen, size_t len);
/* k x n row-major. */
CG_API cg_status cg_clustering_seed_probabilities(const cg_clustering* result,
                                                  double* probabilities, size_t len);

/* Exhaustive optimum for n <= 12; labels may be NULL. */
CG_API cg_status cg_brute_force_optimum(const cg_generator* gen, const cg_pointset* set, size_t k,
                                        const cg_params* params, double* phi_star,
                                        size_t* labels);

CG_API cg_status cg_estimate_uv_rho(const cg_generator* gen, const cg_pointset* set,
                                    const cg_params* params, size_t samples, uint64_t seed,
                                    double* u, double* v, double* rho);

typedef struct cg_bench_options {
  size_t k;
  size_t trials;
  uint64_t seed;
  size_t uv_samples;
  size_t bootstrap_resamples;
  double confidence;
  unsigned threads;
} cg_bench_options;

CG_API cg_bench_options cg_bench_options_default(void);

typedef struct cg_instance_report {
  double phi_star;
  double mean_ratio;
  double bootstrap_upper;
  double min_ratio;
  double u;
  double v;
  double rho;
  double bound;
  int skipped;
  int zero_optimum;
} cg_instance_report;

/* Runs k-means++ `trials` times per instance against the brute-force
 * optimum. `reports` must hold `count` entries. */
CG_API cg_status cg_competitive_bench(const cg_generator* gen, const cg_pointset* const* instances,
                                      size_t count, const cg_params* params,
                                      const cg_bench_options* options,
                                      cg_instance_report* reports);

/* Random instance strictly inside the generator domain, drawn from the
 * ensemble stream `index` of `seed`. */
CG_API cg_status cg_random_instance(const cg_generator* gen, size_t n, uint64_t seed,
                                    uint64_t index, cg_pointset** out);

/* ---- statistical distances ---- */

CG_API cg_status cg_distribution_gaussian(const double* mean, const double* cov, size_t d,
                                          cg_distribution** out);
CG_API cg_status cg_distribution_categorical(const double* prob, size_t categories,
                                             cg_distribution** out);
CG_API void cg_distribution_destroy(cg_distribution* dist);
/* Natural parameter length and values for the distribution's family. */
CG_API size_t cg_distribution_natural_size(const cg_distribution* dist);
CG_API cg_status cg_distribution_natural(const cg_distribution* dist, double* theta, size_t len);

CG_API cg_status cg_bhattacharyya(const cg_distribution* p, const cg_distribution* q, double alpha,
                                  double* value);
CG_API cg_status cg_generalized_bhattacharyya(const cg_distribution* p, const cg_distribution* q,
                                              const cg_params* params, double* value);
CG_API cg_status cg_kl(const cg_distribution* p, const cg_distribution* q, double* value);

/* Direct summation over categorical supports. */
CG_API cg_status cg_bhattacharyya_discrete(const cg_distribution* p, const cg_distribution* q,
                                           double alpha, double* value);
CG_API cg_status cg_generalized_bhattacharyya_discrete(const cg_distribution* p,
                                                       const cg_distribution* q,
                                                       const cg_params* params, double* value);
CG_API cg_status cg_z_normalizer(const cg_distribution* p, const cg_distribution* q, double delta,
                                 double* value);
CG_API cg_status cg_interpolated_distribution(const cg_distribution* p, const cg_distribution* q,
                                              double delta, double* prob, size_t len);

CG_API cg_status cg_gaussian_skew_jensen_closed_form(const double* mean_p, const double* cov_p,
                                                     const double* mean_q, const double* cov_q,
                                                     size_t d, double alpha, double* value);

#ifdef __cplusplus
}
#endif

#endif /* CHORDGAP_CHORDGAP_H */
