// Copyright 2026 The chordgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "chordgap/chordgap.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "../core/centroid.hpp"
#include "../core/clustering.hpp"
#include "../core/errors.hpp"
#include "../core/statistical.hpp"

#ifndef CHORDGAP_VERSION
#define CHORDGAP_VERSION "0.0.0"
#endif

namespace cg = chordgap;

struct cg_generator {
  cg::GeneratorPtr impl;
  std::size_t dimension;
};

struct cg_pointset {
  cg::WeightedPointSet impl;
};

struct cg_centroid {
  cg::CentroidResult impl;
};

struct cg_clustering {
  cg::ClusteringResult impl;
  std::size_t n;
};

struct cg_distribution {
  cg::ExponentialFamilyModel model;
  cg::SourceParams params;
};

namespace {

thread_local std::string g_last_error;

cg_status fail(cg_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs body, translating library exceptions into status codes.
template <class Body>
cg_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return CG_OK;
  } catch (const cg::ParameterError& e) {
    return fail(CG_ERR_PARAMETER, e.what());
  } catch (const cg::DomainError& e) {
    return fail(CG_ERR_DOMAIN, e.what());
  } catch (const cg::DataError& e) {
    return fail(CG_ERR_DATA, e.what());
  } catch (const cg::NumericalError& e) {
    return fail(CG_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CG_ERR_INTERNAL, "unknown error");
  }
}


#define CG_REQUIRE(cond, msg)                          \
  do {                                                 \
    if (!(cond)) return fail(CG_ERR_ARGUMENT, (msg));  \
  } while (0)

cg::Vector to_vector(const double* data, std::size_t len) {
  return Eigen::Map<const cg::Vector>(data, static_cast<Eigen::Index>(len));
}

cg::Matrix to_matrix(const double* data, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  cg::Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = data[i * n + j];
  return m;
}

void copy_out(const cg::Vector& v, double* out) {
  std::memcpy(out, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
}

cg::ChordGapParams to_params(const cg_params* p) { return {p->alpha, p->beta, p->gamma}; }

cg::Orientation to_orientation(cg_orientation o) {
  return o == CG_CENTER_FIRST ? cg::Orientation::kCenterFirst : cg::Orientation::kPointFirst;
}

void require_len(const cg_generator* gen, std::size_t len) {
  if (len != gen->impl->coordinates()) {
    throw cg::DataError("expected " + std::to_string(gen->impl->coordinates()) +
                        " coordinates, got " + std::to_string(len));
  }
}

std::vector<cg::Vector> rows(const double* data, std::size_t n, std::size_t cols) {
  std::vector<cg::Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(to_vector(data + i * cols, cols));
  return out;
}

const cg::DiscreteDistribution discrete(const cg_distribution* d) {
  const auto* c = std::get_if<cg::CategoricalParams>(&d->params);
  if (!c) throw cg::DataError("discrete summation needs categorical distributions");
  return cg::DiscreteDistribution(c->prob);
}

void require_same_family(const cg_distribution* p, const cg_distribution* q) {
  if (p->model.kind() != q->model.kind() || p->model.size() != q->model.size()) {
    throw cg::DataError("distributions belong to different families");
  }
}

}  // namespace

extern "C" {

const char* cg_version(void) { return CHORDGAP_VERSION; }

const char* cg_last_error(void) { return g_last_error.c_str(); }

const char* cg_status_name(cg_status status) {
  switch (status) {
    case CG_OK: return "ok";
    case CG_ERR_ARGUMENT: return "argument";
    case CG_ERR_PARAMETER: return "parameter";
    case CG_ERR_DATA: return "data";
    case CG_ERR_DOMAIN: return "domain";
    case CG_ERR_NUMERICAL: return "numerical";
    case CG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

cg_status cg_params_lambda(const cg_params* params, double* lambda) {
  CG_REQUIRE(params && lambda, "null argument");
  return guarded([&] { *lambda = to_params(params).lambda(); });
}

cg_status cg_generator_create(const char* id, size_t dimension, cg_generator** out) {
  CG_REQUIRE(id && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new cg_generator{cg::make_generator(id, dimension), dimension}; });
}

void cg_generator_destroy(cg_generator* gen) { delete gen; }

size_t cg_generator_coordinates(const cg_generator* gen) {
  return gen ? gen->impl->coordinates() : 0;
}

size_t cg_generator_dense_size(const cg_generator* gen) {
  return gen ? gen->impl->dense_size() : 0;
}

size_t cg_generator_dimension(const cg_generator* gen) { return gen ? gen->dimension : 0; }

cg_status cg_generator_id(const cg_generator* gen, char* buffer, size_t capacity) {
  CG_REQUIRE(gen && buffer && capacity > 0, "null argument");
  const std::string id = gen->impl->id();
  CG_REQUIRE(id.size() < capacity, "buffer too small");
  std::memcpy(buffer, id.c_str(), id.size() + 1);
  return CG_OK;
}

cg_status cg_dimension_from_dense(const char* id, size_t dense_values, size_t* dimension) {
  CG_REQUIRE(id && dimension, "null argument");
  return guarded([&] { *dimension = cg::dimension_from_dense(id, dense_values); });
}

cg_status cg_generator_encode(const cg_generator* gen, const double* dense, size_t dense_len,
                              double* coords, size_t coords_len) {
  CG_REQUIRE(gen && dense && coords, "null argument");
  CG_REQUIRE(coords_len == gen->impl->coordinates(), "output buffer has the wrong length");
  return guarded([&] { copy_out(gen->impl->encode(to_vector(dense, dense_len)), coords); });
}

cg_status cg_generator_decode(const cg_generator* gen, const double* coords, size_t coords_len,
                              double* dense, size_t dense_len) {
  CG_REQUIRE(gen && dense && coords, "null argument");
  CG_REQUIRE(dense_len == gen->impl->dense_size(), "output buffer has the wrong length");
  return guarded([&] { copy_out(gen->impl->decode(to_vector(coords, coords_len)), dense); });
}

cg_status cg_generator_eval(const cg_generator* gen, const double* x, size_t len, double* value) {
  CG_REQUIRE(gen && x && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = gen->impl->eval(to_vector(x, len));
  });
}

cg_status cg_generator_grad(const cg_generator* gen, const double* x, size_t len, double* grad) {
  CG_REQUIRE(gen && x && grad, "null argument");
  return guarded([&] {
    require_len(gen, len);
    copy_out(gen->impl->grad(to_vector(x, len)), grad);
  });
}

cg_status cg_generator_grad_inverse(const cg_generator* gen, const double* y, size_t len,
                                    double* x) {
  CG_REQUIRE(gen && y && x, "null argument");
  return guarded([&] {
    require_len(gen, len);
    copy_out(gen->impl->grad_inverse(to_vector(y, len)), x);
  });
}

cg_status cg_generator_hessian(const cg_generator* gen, const double* x, size_t len,
                               double* hessian) {
  CG_REQUIRE(gen && x && hessian, "null argument");
  return guarded([&] {
    require_len(gen, len);
    const cg::Matrix h = gen->impl->hessian(to_vector(x, len));
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j) hessian[i * h.cols() + j] = h(i, j);
  });
}

cg_status cg_skew_jensen(const cg_generator* gen, const double* p, const double* q, size_t len,
                         double alpha, double* value) {
  CG_REQUIRE(gen && p && q && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = cg::skew_jensen(*gen->impl, to_vector(p, len), to_vector(q, len), alpha);
  });
}

cg_status cg_scaled_skew_jensen(const cg_generator* gen, const double* p, const double* q,
                                size_t len, double alpha, double* value) {
  CG_REQUIRE(gen && p && q && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = cg::scaled_skew_jensen(*gen->impl, to_vector(p, len), to_vector(q, len), alpha);
  });
}

cg_status cg_bregman(const cg_generator* gen, const double* p, const double* q, size_t len,
                     double* value) {
  CG_REQUIRE(gen && p && q && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = cg::bregman(*gen->impl, to_vector(p, len), to_vector(q, len));
  });
}

cg_status cg_jensen_bregman(const cg_generator* gen, const double* p, const double* q, size_t len,
                            double alpha, double* value) {
  CG_REQUIRE(gen && p && q && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = cg::jensen_bregman(*gen->impl, to_vector(p, len), to_vector(q, len), alpha);
  });
}

cg_status cg_chord_gap(const cg_generator* gen, const double* p, const double* q, size_t len,
                       const cg_params* params, double* value) {
  CG_REQUIRE(gen && p && q && params && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = cg::chord_gap(*gen->impl, to_vector(p, len), to_vector(q, len), to_params(params));
  });
}

cg_status cg_chord_gap_alpha0(const cg_generator* gen, const double* p, const double* q,
                              size_t len, double beta, double gamma, double* value) {
  CG_REQUIRE(gen && p && q && value, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *value = cg::chord_gap_biparam_alpha0(*gen->impl, to_vector(p, len), to_vector(q, len), beta,
                                          gamma);
  });
}

cg_status cg_taylor_lagrange_bounds(const cg_generator* gen, const double* p, const double* q,
                                    size_t len, const cg_params* params, double* lower,
                                    double* upper) {
  CG_REQUIRE(gen && p && q && params && lower && upper, "null argument");
  return guarded([&] {
    require_len(gen, len);
    const cg::TaylorBounds b = cg::taylor_lagrange_bounds(*gen->impl, to_vector(p, len),
                                                          to_vector(q, len), to_params(params));
    *lower = b.lower;
    *upper = b.upper;
  });
}

cg_status cg_pointset_create(const double* coords, size_t n, size_t coordinates,
                             const double* weights, cg_pointset** out) {
  CG_REQUIRE(coords && out, "null argument");
  CG_REQUIRE(n > 0 && coordinates > 0, "empty point set");
  *out = nullptr;
  return guarded([&] {
    std::vector<double> w = weights ? std::vector<double>(weights, weights + n)
                                    : std::vector<double>(n, 1.0);
    *out = new cg_pointset{cg::WeightedPointSet(rows(coords, n, coordinates), std::move(w))};
  });
}

void cg_pointset_destroy(cg_pointset* set) { delete set; }

size_t cg_pointset_size(const cg_pointset* set) { return set ? set->impl.size() : 0; }

size_t cg_pointset_coordinates(const cg_pointset* set) {
  return set ? set->impl.coordinates() : 0;
}

cg_status cg_pointset_weights(const cg_pointset* set, double* weights, size_t len) {
  CG_REQUIRE(set && weights, "null argument");
  CG_REQUIRE(len == set->impl.size(), "output buffer has the wrong length");
  std::memcpy(weights, set->impl.weights().data(), sizeof(double) * len);
  return CG_OK;
}

cg_centroid_options cg_centroid_options_default(void) {
  return {1e-10, 1000, CG_INIT_GRADIENT_MEAN};
}

cg_status cg_centroid_energy(const cg_generator* gen, const cg_pointset* set, const double* x,
                             size_t len, const cg_params* params, double* energy) {
  CG_REQUIRE(gen && set && x && params && energy, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *energy = cg::centroid_energy(*gen->impl, set->impl, to_vector(x, len), to_params(params));
  });
}

cg_status cg_cccp_step(const cg_generator* gen, const cg_pointset* set, const double* x,
                       size_t len, const cg_params* params, double* next) {
  CG_REQUIRE(gen && set && x && params && next, "null argument");
  return guarded([&] {
    require_len(gen, len);
    copy_out(cg::cccp_step(*gen->impl, set->impl, to_vector(x, len), to_params(params)), next);
  });
}

cg_status cg_fixed_point_residual(const cg_generator* gen, const cg_pointset* set,
                                  const double* x, size_t len, const cg_params* params,
                                  double* residual) {
  CG_REQUIRE(gen && set && x && params && residual, "null argument");
  return guarded([&] {
    require_len(gen, len);
    *residual =
        cg::fixed_point_residual(*gen->impl, set->impl, to_vector(x, len), to_params(params));
  });
}

cg_status cg_solve_centroid(const cg_generator* gen, const cg_pointset* set,
                            const cg_params* params, const cg_centroid_options* options,
                            cg_centroid** out) {
  CG_REQUIRE(gen && set && params && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    require_len(gen, set->impl.coordinates());
    cg::CentroidOptions opts;
    if (options) {
      opts.tol = options->tol;
      opts.max_iter = options->max_iter;
      opts.init = options->init == CG_INIT_FIRST_POINT ? cg::CentroidInit::kFirstPoint
                                                       : cg::CentroidInit::kGradientMean;
    }
    *out = new cg_centroid{cg::solve_centroid(*gen->impl, set->impl, to_params(params), opts)};
  });
}

void cg_centroid_destroy(cg_centroid* result) { delete result; }

cg_status cg_centroid_point(const cg_centroid* result, double* x, size_t len) {
  CG_REQUIRE(result && x, "null argument");
  CG_REQUIRE(len == static_cast<size_t>(result->impl.centroid.size()),
             "output buffer has the wrong length");
  copy_out(result->impl.centroid, x);
  return CG_OK;
}

double cg_centroid_energy_value(const cg_centroid* result) {
  return result ? result->impl.energy() : 0.0;
}

int cg_centroid_iterations(const cg_centroid* result) {
  return result ? result->impl.iterations : 0;
}

int cg_centroid_converged(const cg_centroid* result) {
  return result && result->impl.converged ? 1 : 0;
}

size_t cg_centroid_trace_length(const cg_centroid* result) {
  return result ? result->impl.energy_trace.size() : 0;
}

cg_status cg_centroid_trace(const cg_centroid* result, double* trace, size_t len) {
  CG_REQUIRE(result && trace, "null argument");
  CG_REQUIRE(len == result->impl.energy_trace.size(), "output buffer has the wrong length");
  std::memcpy(trace, result->impl.energy_trace.data(), sizeof(double) * len);
  return CG_OK;
}

cg_cluster_config cg_cluster_config_default(void) {
  const cg::ClusteringConfig c;
  return {c.k, {0.5, 0.5, 0.5}, c.seed, c.max_rounds, c.tol, c.cccp_steps, CG_POINT_FIRST};
}

cg_status cg_potential(const cg_generator* gen, const cg_pointset* set, const double* centers,
                       size_t k, const cg_params* params, cg_orientation orientation,
                       double* phi) {
  CG_REQUIRE(gen && set && centers && params && phi, "null argument");
  return guarded([&] {
    const std::size_t c = set->impl.coordinates();
    require_len(gen, c);
    *phi = cg::potential(*gen->impl, set->impl, rows(centers, k, c), to_params(params),
                         to_orientation(orientation));
  });
}

cg_status cg_kmeanspp_seed(const cg_generator* gen, const cg_pointset* set, size_t k,
                           const cg_params* params, uint64_t seed, cg_orientation orientation,
                           size_t* chosen, double* probabilities) {
  CG_REQUIRE(gen && set && params && chosen, "null argument");
  return guarded([&] {
    require_len(gen, set->impl.coordinates());
    cg::Rng rng(seed, 0, cg::StreamPurpose::kSeeding);
    const cg::Seeding s = cg::kmeanspp_seed(*gen->impl, set->impl, k, to_params(params), rng,
                                            to_orientation(orientation));
    const std::size_t n = set->impl.size();
    for (std::size_t j = 0; j < k; ++j) {
      chosen[j] = s.record.chosen[j];
      if (probabilities) {
        std::memcpy(probabilities + j * n, s.record.probabilities[j].data(), sizeof(double) * n);
      }
    }
  });
}

cg_status cg_cluster(const cg_generator* gen, const cg_pointset* set,
                     const cg_cluster_config* config, cg_clustering** out) {
  CG_REQUIRE(gen && set && config && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    require_len(gen, set->impl.coordinates());
    cg::ClusteringConfig c;
    c.k = config->k;
    c.params = to_params(&config->params);
    c.seed = config->seed;
    c.max_rounds = config->max_rounds;
    c.tol = config->tol;
    c.cccp_steps = config->cccp_steps;
    c.orientation = to_orientation(config->orientation);
    *out = new cg_clustering{cg::lloyd_cluster(*gen->impl, set->impl, c), set->impl.size()};
  });
}

void cg_clustering_destroy(cg_clustering* result) { delete result; }

size_t cg_clustering_k(const cg_clustering* result) {
  return result ? result->impl.centers.size() : 0;
}

int cg_clustering_rounds(const cg_clustering* result) { return result ? result->impl.rounds : 0; }

int cg_clustering_converged(const cg_clustering* result) {
  return result && result->impl.converged ? 1 : 0;
}

cg_status cg_clustering_centers(const cg_clustering* result, double* centers, size_t len) {
  CG_REQUIRE(result && centers, "null argument");
  const auto& cs = result->impl.centers;
  const std::size_t c = cs.empty() ? 0 : static_cast<std::size_t>(cs.front().size());
  CG_REQUIRE(len == cs.size() * c, "output buffer has the wrong length");
  for (std::size_t j = 0; j < cs.size(); ++j) copy_out(cs[j], centers + j * c);
  return CG_OK;
}

cg_status cg_clustering_assignments(const cg_clustering* result, size_t* labels, size_t len) {
  CG_REQUIRE(result && labels, "null argument");
  CG_REQUIRE(len == result->impl.assignments.size(), "output buffer has the wrong length");
  std::copy(result->impl.assignments.begin(), result->impl.assignments.end(), labels);
  return CG_OK;
}

size_t cg_clustering_trace_length(const cg_clustering* result) {
  return result ? result->impl.potential_trace.size() : 0;
}

cg_status cg_clustering_trace(const cg_clustering* result, double* trace, size_t len) {
  CG_REQUIRE(result && trace, "null argument");
  CG_REQUIRE(len == result->impl.potential_trace.size(), "output buffer has the wrong length");
  std::memcpy(trace, result->impl.potential_trace.data(), sizeof(double) * len);
  return CG_OK;
}

cg_status cg_clustering_seeds(const cg_clustering* result, size_t* chosen, size_t len) {
  CG_REQUIRE(result && chosen, "null argument");
  CG_REQUIRE(len == result->impl.seeding.chosen.size(), "output buffer has the wrong length");
  std::copy(result->impl.seeding.chosen.begin(), result->impl.seeding.chosen.end(), chosen);
  return CG_OK;
}

cg_status cg_clustering_seed_probabilities(const cg_clustering* result, double* probabilities,
                                           size_t len) {
  CG_REQUIRE(result && probabilities, "null argument");
  const auto& probs = result->impl.seeding.probabilities;
  CG_REQUIRE(len == probs.size() * result->n, "output buffer has the wrong length");
  for (std::size_t j = 0; j < probs.size(); ++j) {
    std::memcpy(probabilities + j * result->n, probs[j].data(), sizeof(double) * result->n);
  }
  return CG_OK;
}

cg_status cg_brute_force_optimum(const cg_generator* gen, const cg_pointset* set, size_t k,
                                 const cg_params* params, double* phi_star, size_t* labels) {
  CG_REQUIRE(gen && set && params && phi_star, "null argument");
  return guarded([&] {
    require_len(gen, set->impl.coordinates());
    const cg::OptimalClustering opt =
        cg::brute_force_optimum(*gen->impl, set->impl, k, to_params(params));
    *phi_star = opt.phi_star;
    if (labels) std::copy(opt.labels.begin(), opt.labels.end(), labels);
  });
}

cg_status cg_estimate_uv_rho(const cg_generator* gen, const cg_pointset* set,
                             const cg_params* params, size_t samples, uint64_t seed, double* u,
                             double* v, double* rho) {
  CG_REQUIRE(gen && set && params && u && v && rho, "null argument");
  return guarded([&] {
    require_len(gen, set->impl.coordinates());
    const cg::ConstantEstimates e =
        cg::estimate_uv_rho(*gen->impl, set->impl, to_params(params), samples, seed);
    *u = e.u;
    *v = e.v;
    *rho = e.rho;
  });
}

cg_bench_options cg_bench_options_default(void) {
  const cg::BenchOptions o;
  return {o.k, o.trials, o.seed, o.uv_samples, o.bootstrap_resamples, o.confidence, o.threads};
}

cg_status cg_competitive_bench(const cg_generator* gen, const cg_pointset* const* instances,
                               size_t count, const cg_params* params,
                               const cg_bench_options* options, cg_instance_report* reports) {
  CG_REQUIRE(gen && instances && params && options && reports, "null argument");
  for (size_t i = 0; i < count; ++i) CG_REQUIRE(instances[i], "null instance");
  return guarded([&] {
    std::vector<cg::WeightedPointSet> ensemble;
    for (size_t i = 0; i < count; ++i) {
      require_len(gen, instances[i]->impl.coordinates());
      ensemble.push_back(instances[i]->impl);
    }
    cg::BenchOptions o;
    o.k = options->k;
    o.trials = options->trials;
    o.seed = options->seed;
    o.uv_samples = options->uv_samples;
    o.bootstrap_resamples = options->bootstrap_resamples;
    o.confidence = options->confidence;
    o.threads = options->threads;
    const cg::CompetitiveReport r =
        cg::competitive_bench(*gen->impl, ensemble, to_params(params), o);
    for (size_t i = 0; i < count; ++i) {
      const cg::InstanceReport& ir = r.instances[i];
      reports[i] = {ir.phi_star,       ir.mean_ratio,       ir.bootstrap_upper,
                    ir.min_ratio,      ir.constants.u,      ir.constants.v,
                    ir.constants.rho,  ir.bound,            ir.skipped ? 1 : 0,
                    ir.zero_optimum ? 1 : 0};
    }
  });
}

cg_status cg_random_instance(const cg_generator* gen, size_t n, uint64_t seed, uint64_t index,
                             cg_pointset** out) {
  CG_REQUIRE(gen && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    cg::Rng rng(seed, index, cg::StreamPurpose::kEnsemble);
    *out = new cg_pointset{cg::random_instance(*gen->impl, n, rng)};
  });
}

cg_status cg_distribution_gaussian(const double* mean, const double* cov, size_t d,
                                   cg_distribution** out) {
  CG_REQUIRE(mean && cov && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto model = cg::ExponentialFamilyModel::gaussian(d);
    cg::SourceParams params = cg::GaussianParams{to_vector(mean, d), to_matrix(cov, d)};
    model.to_natural(params);  // validates
    *out = new cg_distribution{std::move(model), std::move(params)};
  });
}

cg_status cg_distribution_categorical(const double* prob, size_t categories,
                                      cg_distribution** out) {
  CG_REQUIRE(prob && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto model = cg::ExponentialFamilyModel::multinoulli(categories);
    cg::SourceParams params = cg::CategoricalParams{to_vector(prob, categories)};
    model.to_natural(params);
    *out = new cg_distribution{std::move(model), std::move(params)};
  });
}

void cg_distribution_destroy(cg_distribution* dist) { delete dist; }

size_t cg_distribution_natural_size(const cg_distribution* dist) {
  return dist ? dist->model.cumulant().coordinates() : 0;
}

cg_status cg_distribution_natural(const cg_distribution* dist, double* theta, size_t len) {
  CG_REQUIRE(dist && theta, "null argument");
  CG_REQUIRE(len == dist->model.cumulant().coordinates(), "output buffer has the wrong length");
  return guarded([&] { copy_out(dist->model.to_natural(dist->params), theta); });
}

cg_status cg_bhattacharyya(const cg_distribution* p, const cg_distribution* q, double alpha,
                           double* value) {
  CG_REQUIRE(p && q && value, "null argument");
  return guarded([&] {
    require_same_family(p, q);
    *value = cg::bhattacharyya_skew(p->model, p->params, q->params, alpha);
  });
}

cg_status cg_generalized_bhattacharyya(const cg_distribution* p, const cg_distribution* q,
                                       const cg_params* params, double* value) {
  CG_REQUIRE(p && q && params && value, "null argument");
  return guarded([&] {
    require_same_family(p, q);
    *value = cg::generalized_bhattacharyya(p->model, p->params, q->params, to_params(params));
  });
}

cg_status cg_kl(const cg_distribution* p, const cg_distribution* q, double* value) {
  CG_REQUIRE(p && q && value, "null argument");
  return guarded([&] {
    require_same_family(p, q);
    *value = cg::kl_divergence(p->model, p->params, q->params);
  });
}

cg_status cg_bhattacharyya_discrete(const cg_distribution* p, const cg_distribution* q,
                                    double alpha, double* value) {
  CG_REQUIRE(p && q && value, "null argument");
  return guarded(
      [&] { *value = cg::bhattacharyya_discrete_oracle(discrete(p), discrete(q), alpha); });
}

cg_status cg_generalized_bhattacharyya_discrete(const cg_distribution* p, const cg_distribution* q,
                                                const cg_params* params, double* value) {
  CG_REQUIRE(p && q && params && value, "null argument");
  return guarded([&] {
    *value = cg::generalized_bhattacharyya_discrete(discrete(p), discrete(q), to_params(params));
  });
}

cg_status cg_z_normalizer(const cg_distribution* p, const cg_distribution* q, double delta,
                          double* value) {
  CG_REQUIRE(p && q && value, "null argument");
  return guarded([&] { *value = cg::z_normalizer(discrete(p), discrete(q), delta); });
}

cg_status cg_interpolated_distribution(const cg_distribution* p, const cg_distribution* q,
                                       double delta, double* prob, size_t len) {
  CG_REQUIRE(p && q && prob, "null argument");
  return guarded([&] {
    const cg::DiscreteDistribution g = cg::interpolated_distribution(discrete(p), discrete(q), delta);
    if (len != g.size()) throw cg::DataError("output buffer has the wrong length");
    copy_out(g.prob(), prob);
  });
}

cg_status cg_gaussian_skew_jensen_closed_form(const double* mean_p, const double* cov_p,
                                              const double* mean_q, const double* cov_q, size_t d,
                                              double alpha, double* value) {
  CG_REQUIRE(mean_p && cov_p && mean_q && cov_q && value, "null argument");
  return guarded([&] {
    *value = cg::gaussian_skew_jensen_closed_form(to_vector(mean_p, d), to_matrix(cov_p, d),
                                                  to_vector(mean_q, d), to_matrix(cov_q, d),
                                                  alpha);
  });
}

}  // extern "C"
