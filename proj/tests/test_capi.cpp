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


// Exercises the shared library through its C header only.

#include "doctest.h"

#include <chordgap/chordgap.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct Gen {
  cg_generator* g = nullptr;
  Gen(const char* id, size_t d) { REQUIRE(cg_generator_create(id, d, &g) == CG_OK); }
  ~Gen() { cg_generator_destroy(g); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(cg_version()).size() > 0);
  CHECK(std::string(cg_status_name(CG_ERR_DOMAIN)) == "domain");
  CHECK(std::string(cg_status_name(CG_OK)) == "ok");
}

TEST_CASE("errors map to status codes and messages") {
  cg_generator* g = nullptr;
  CHECK(cg_generator_create("cubic", 2, &g) == CG_ERR_PARAMETER);
  CHECK(g == nullptr);
  CHECK(std::strlen(cg_last_error()) > 0);
  CHECK(cg_generator_create(nullptr, 2, &g) == CG_ERR_ARGUMENT);

  Gen neg("negentropy", 2);
  const double bad[2] = {1.0, -1.0};
  const double good[2] = {1.0, 2.0};
  double value = 0.0;
  CHECK(cg_generator_eval(neg.g, bad, 2, &value) == CG_ERR_DOMAIN);
  CHECK(cg_generator_eval(neg.g, good, 1, &value) == CG_ERR_DATA);
  CHECK(cg_generator_eval(neg.g, good, 2, &value) == CG_OK);
  CHECK(std::string(cg_last_error()).empty());

  const cg_params invalid = {0.2, 0.6, 0.9};
  double lambda = 0.0;
  CHECK(cg_params_lambda(&invalid, &lambda) == CG_ERR_PARAMETER);
  const cg_params ok = {0.2, 0.6, 0.5};
  CHECK(cg_params_lambda(&ok, &lambda) == CG_OK);
  CHECK(lambda == doctest::Approx(0.75));
  CHECK(cg_chord_gap(neg.g, good, good, 2, &invalid, &value) == CG_ERR_PARAMETER);
}

TEST_CASE("divergence values") {
  Gen quad("quadratic", 1);
  const double p = 0.0;
  const double q = 1.0;
  double value = 0.0;
  CHECK(cg_skew_jensen(quad.g, &p, &q, 1, 0.5, &value) == CG_OK);
  CHECK(value == 0.25);
  CHECK(cg_scaled_skew_jensen(quad.g, &p, &q, 1, 0.5, &value) == CG_OK);
  CHECK(value == 1.0);
  CHECK(cg_scaled_skew_jensen(quad.g, &p, &q, 1, 0.0, &value) == CG_ERR_PARAMETER);
  CHECK(cg_bregman(quad.g, &p, &q, 1, &value) == CG_OK);
  CHECK(value == 1.0);
  CHECK(cg_jensen_bregman(quad.g, &p, &q, 1, 0.5, &value) == CG_OK);
  CHECK(value == 0.25);
  const cg_params prm = {0.25, 0.75, 0.5};
  CHECK(cg_chord_gap(quad.g, &p, &q, 1, &prm, &value) == CG_OK);
  CHECK(value == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
  double lower = 0.0, upper = 0.0;
  CHECK(cg_taylor_lagrange_bounds(quad.g, &p, &q, 1, &prm, &lower, &upper) == CG_OK);
  CHECK(lower == doctest::Approx(3.0 / 16.0));
  CHECK(upper == doctest::Approx(3.0 / 16.0));
  CHECK(cg_chord_gap_alpha0(quad.g, &p, &q, 1, 0.5, 0.3, &value) == CG_OK);
  CHECK(value == doctest::Approx(2 * 0.3 * 0.25));
}

TEST_CASE("matrix generators use dense row-major points") {
  Gen ld("logdet", 2);
  CHECK(cg_generator_dimension(ld.g) == 2);
  CHECK(cg_generator_dense_size(ld.g) == 4);
  CHECK(cg_generator_coordinates(ld.g) == 3);
  char id[32];
  CHECK(cg_generator_id(ld.g, id, sizeof id) == CG_OK);
  CHECK(std::string(id) == "logdet");
  CHECK(cg_generator_id(ld.g, id, 3) == CG_ERR_ARGUMENT);
  size_t d = 0;
  CHECK(cg_dimension_from_dense("logdet", 9, &d) == CG_OK);
  CHECK(d == 3);
  CHECK(cg_dimension_from_dense("logdet", 8, &d) != CG_OK);

  const double x[4] = {2, 0.5, 0.5, 3};
  double c[3], back[4], grad[3], inv[3], h[9];
  CHECK(cg_generator_encode(ld.g, x, 4, c, 3) == CG_OK);
  CHECK(cg_generator_grad(ld.g, c, 3, grad) == CG_OK);
  CHECK(cg_generator_grad_inverse(ld.g, grad, 3, inv) == CG_OK);
  CHECK(cg_generator_decode(ld.g, inv, 3, back, 4) == CG_OK);
  for (int i = 0; i < 4; ++i) CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-13));
  CHECK(cg_generator_hessian(ld.g, c, 3, h) == CG_OK);
  CHECK(h[1] == doctest::Approx(h[3]));
  double value = 0.0;
  CHECK(cg_generator_eval(ld.g, c, 3, &value) == CG_OK);
  CHECK(value == doctest::Approx(-std::log(6.0 - 0.25)));
  const double nonsym[4] = {2, 0.5, 0.1, 3};
  CHECK(cg_generator_encode(ld.g, nonsym, 4, c, 3) == CG_ERR_DOMAIN);
}

TEST_CASE("point sets and centroids") {
  Gen quad("quadratic", 2);
  const double pts[6] = {0, 0, 1, 0, 0, 4};
  const double w[3] = {1, 1, 2};
  cg_pointset* set = nullptr;
  REQUIRE(cg_pointset_create(pts, 3, 2, w, &set) == CG_OK);
  CHECK(cg_pointset_size(set) == 3);
  CHECK(cg_pointset_coordinates(set) == 2);
  double wn[3];
  CHECK(cg_pointset_weights(set, wn, 3) == CG_OK);
  CHECK(wn[2] == 0.5);
  const double zero_w[3] = {1, 0, 1};
  cg_pointset* bad = nullptr;
  CHECK(cg_pointset_create(pts, 3, 2, zero_w, &bad) == CG_ERR_DATA);

  const cg_params prm = {0.1, 0.8, 0.3};
  cg_centroid_options opt = cg_centroid_options_default();
  CHECK(opt.tol == 1e-10);
  CHECK(opt.max_iter == 1000);
  cg_centroid* res = nullptr;
  REQUIRE(cg_solve_centroid(quad.g, set, &prm, &opt, &res) == CG_OK);
  double x[2];
  CHECK(cg_centroid_point(res, x, 2) == CG_OK);
  CHECK(x[0] == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cg_centroid_converged(res) == 1);
  const size_t len = cg_centroid_trace_length(res);
  CHECK(len == static_cast<size_t>(cg_centroid_iterations(res)) + 1);
  std::vector<double> trace(len);
  CHECK(cg_centroid_trace(res, trace.data(), len) == CG_OK);
  CHECK(trace.back() == cg_centroid_energy_value(res));
  double e = 0.0, r = 0.0, next[2];
  CHECK(cg_centroid_energy(quad.g, set, x, 2, &prm, &e) == CG_OK);
  CHECK(e == doctest::Approx(trace.back()));
  CHECK(cg_fixed_point_residual(quad.g, set, x, 2, &prm, &r) == CG_OK);
  CHECK(r < 1e-9);
  CHECK(cg_cccp_step(quad.g, set, x, 2, &prm, next) == CG_OK);
  CHECK(next[0] == doctest::Approx(x[0]));
  opt.tol = -1.0;
  cg_centroid* none = nullptr;
  CHECK(cg_solve_centroid(quad.g, set, &prm, &opt, &none) == CG_ERR_PARAMETER);
  cg_centroid_destroy(res);
  cg_pointset_destroy(set);
}

TEST_CASE("clustering through the C interface") {
  Gen quad("quadratic", 1);
  const double pts[6] = {0, 0.2, 0.1, 9, 9.3, 9.1};
  cg_pointset* set = nullptr;
  REQUIRE(cg_pointset_create(pts, 6, 1, nullptr, &set) == CG_OK);
  cg_cluster_config cfg = cg_cluster_config_default();
  cfg.k = 2;
  cfg.seed = 42;
  cg_clustering* res = nullptr;
  REQUIRE(cg_cluster(quad.g, set, &cfg, &res) == CG_OK);
  CHECK(cg_clustering_k(res) == 2);
  size_t labels[6];
  CHECK(cg_clustering_assignments(res, labels, 6) == CG_OK);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[0] == labels[2]);
  CHECK(labels[3] == labels[4]);
  CHECK(labels[0] != labels[3]);
  double centers[2];
  CHECK(cg_clustering_centers(res, centers, 2) == CG_OK);
  size_t seeds[2];
  CHECK(cg_clustering_seeds(res, seeds, 2) == CG_OK);
  double probs[12];
  CHECK(cg_clustering_seed_probabilities(res, probs, 12) == CG_OK);
  CHECK(probs[0] == doctest::Approx(1.0 / 6.0));
  std::vector<double> trace(cg_clustering_trace_length(res));
  CHECK(cg_clustering_trace(res, trace.data(), trace.size()) == CG_OK);
  CHECK(cg_clustering_converged(res) == 1);
  CHECK(cg_clustering_rounds(res) >= 1);
  const cg_params half = {0.5, 0.5, 0.5};
  double phi = 0.0;
  CHECK(cg_potential(quad.g, set, centers, 2, &half, CG_POINT_FIRST, &phi) == CG_OK);
  CHECK(phi == doctest::Approx(trace.back()));

  size_t chosen[2];
  double sp[12];
  CHECK(cg_kmeanspp_seed(quad.g, set, 2, &half, 42, CG_POINT_FIRST, chosen, sp) == CG_OK);
  CHECK(chosen[0] == seeds[0]);
  CHECK(chosen[1] == seeds[1]);
  CHECK(cg_kmeanspp_seed(quad.g, set, 7, &half, 42, CG_POINT_FIRST, chosen, nullptr) ==
        CG_ERR_PARAMETER);

  double phi_star = 0.0;
  size_t opt_labels[6];
  CHECK(cg_brute_force_optimum(quad.g, set, 2, &half, &phi_star, opt_labels) == CG_OK);
  CHECK(phi_star <= trace.back() + 1e-12);
  double u = 0, v = 0, rho = 0;
  CHECK(cg_estimate_uv_rho(quad.g, set, &half, 500, 3, &u, &v, &rho) == CG_OK);
  CHECK(u <= 2.0 + 1e-9);
  CHECK(v <= 1.0 + 1e-9);
  cg_clustering_destroy(res);

  cg_pointset* inst = nullptr;
  Gen q2("quadratic", 2);
  REQUIRE(cg_random_instance(q2.g, 8, 99, 0, &inst) == CG_OK);
  CHECK(cg_pointset_size(inst) == 8);
  cg_bench_options bo = cg_bench_options_default();
  bo.trials = 500;
  bo.uv_samples = 500;
  bo.bootstrap_resamples = 100;
  bo.threads = 2;
  const cg_pointset* list[1] = {inst};
  cg_instance_report report;
  CHECK(cg_competitive_bench(q2.g, list, 1, &half, &bo, &report) == CG_OK);
  CHECK(report.mean_ratio >= 1.0);
  CHECK(report.mean_ratio <= report.bound);
  cg_pointset_destroy(inst);
  cg_pointset_destroy(set);
}

TEST_CASE("statistical distances") {
  const double m0 = 0.0, m1 = 1.0, one = 1.0;
  cg_distribution *p = nullptr, *q = nullptr;
  REQUIRE(cg_distribution_gaussian(&m0, &one, 1, &p) == CG_OK);
  REQUIRE(cg_distribution_gaussian(&m1, &one, 1, &q) == CG_OK);
  CHECK(cg_distribution_natural_size(p) == 2);
  double value = 0.0;
  CHECK(cg_bhattacharyya(p, q, 0.5, &value) == CG_OK);
  CHECK(std::abs(value - 0.125) < 1e-12);
  CHECK(cg_kl(p, q, &value) == CG_OK);
  CHECK(std::abs(value - 0.5) < 1e-12);
  const cg_params half = {0.5, 0.5, 0.5};
  CHECK(cg_generalized_bhattacharyya(p, q, &half, &value) == CG_OK);
  CHECK(std::abs(value - 0.125) < 1e-12);
  CHECK(cg_bhattacharyya_discrete(p, q, 0.5, &value) == CG_ERR_DATA);
  CHECK(cg_gaussian_skew_jensen_closed_form(&m0, &one, &m1, &one, 1, 0.5, &value) == CG_OK);
  CHECK(value == doctest::Approx(0.125));

  const double pa[2] = {0.9, 0.1};
  const double pb[2] = {0.1, 0.9};
  cg_distribution *a = nullptr, *b = nullptr;
  REQUIRE(cg_distribution_categorical(pa, 2, &a) == CG_OK);
  REQUIRE(cg_distribution_categorical(pb, 2, &b) == CG_OK);
  CHECK(cg_bhattacharyya(p, a, 0.5, &value) == CG_ERR_DATA);
  CHECK(cg_bhattacharyya_discrete(a, b, 0.5, &value) == CG_OK);
  CHECK(value == doctest::Approx(-std::log(2 * std::sqrt(0.09))));
  const cg_params tri = {0.25, 0.75, 0.5};
  double g1 = 0.0, g2 = 0.0;
  CHECK(cg_generalized_bhattacharyya(a, b, &tri, &g1) == CG_OK);
  CHECK(cg_generalized_bhattacharyya_discrete(a, b, &tri, &g2) == CG_OK);
  CHECK(std::abs(g1 - g2) < 1e-12);
  double z = 0.0, j = 0.0;
  CHECK(cg_z_normalizer(a, b, 0.3, &z) == CG_OK);
  CHECK(cg_bhattacharyya(a, b, 0.3, &j) == CG_OK);
  CHECK(z * std::exp(j) == doctest::Approx(1.0).epsilon(1e-12));
  double gamma[2];
  CHECK(cg_interpolated_distribution(a, b, 0.0, gamma, 2) == CG_OK);
  CHECK(gamma[0] == 0.9);
  CHECK(cg_interpolated_distribution(a, b, 0.0, gamma, 3) == CG_ERR_DATA);
  double theta[1];
  CHECK(cg_distribution_natural(a, theta, 1) == CG_OK);
  CHECK(theta[0] == doctest::Approx(std::log(9.0)));
  const double zero[2] = {1.0, 0.0};
  cg_distribution* c = nullptr;
  CHECK(cg_distribution_categorical(zero, 2, &c) == CG_ERR_DOMAIN);
  const double neg_var = -1.0;
  CHECK(cg_distribution_gaussian(&m0, &neg_var, 1, &c) == CG_ERR_DOMAIN);
  for (cg_distribution* d : {p, q, a, b}) cg_distribution_destroy(d);
}
