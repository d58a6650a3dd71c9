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


#include "clustering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "errors.hpp"

namespace chordgap {

namespace {

// D(c : p) = J^{1-alpha,1-beta,1-gamma}(p : c).
ChordGapParams flipped(const ChordGapParams& params) {
  return {1.0 - params.alpha(), 1.0 - params.beta(), 1.0 - params.gamma()};
}

ChordGapParams point_first_params(const ChordGapParams& params, Orientation orientation) {
  return orientation == Orientation::kPointFirst ? params : flipped(params);
}

void require_k(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw ParameterError("k must satisfy 1 <= k <= n (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
}

std::vector<std::size_t> assign_all(const ConvexGenerator& f, const WeightedPointSet& set,
                                    const std::vector<Vector>& centers,
                                    const ChordGapParams& params, Orientation orientation,
                                    std::vector<double>* divergences = nullptr) {
  std::vector<std::size_t> labels(set.size());
  if (divergences) divergences->assign(set.size(), 0.0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const NearestCenter nc = nearest_center(f, set.point(i), centers, params, orientation);
    labels[i] = nc.index;
    if (divergences) (*divergences)[i] = nc.divergence;
  }
  return labels;
}

}  // namespace

double oriented_divergence(const ConvexGenerator& f, const Vector& point, const Vector& center,
                           const ChordGapParams& params, Orientation orientation) {
  return orientation == Orientation::kPointFirst ? chord_gap(f, point, center, params)
                                                 : chord_gap(f, center, point, params);
}

NearestCenter nearest_center(const ConvexGenerator& f, const Vector& point,
                             const std::vector<Vector>& centers, const ChordGapParams& params,
                             Orientation orientation) {
  if (centers.empty()) throw ParameterError("center set is empty");
  NearestCenter best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const double d = oriented_divergence(f, point, centers[j], params, orientation);
    if (d < best.divergence) best = {j, d};
  }
  return best;
}

double potential(const ConvexGenerator& f, const WeightedPointSet& set,
                 const std::vector<Vector>& centers, const ChordGapParams& params,
                 Orientation orientation) {
  double phi = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    phi += set.weight(i) * nearest_center(f, set.point(i), centers, params, orientation).divergence;
  }
  return phi;
}

std::size_t sample_index(const std::vector<double>& weights, double u) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double target = u * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (cumulative > target) return i;
  }
  return last_positive;
}

Seeding kmeanspp_seed(const ConvexGenerator& f, const WeightedPointSet& set, std::size_t k,
                      const ChordGapParams& params, Rng& rng, Orientation orientation) {
  const std::size_t n = set.size();
  require_k(k, n);
  Seeding s;
  std::vector<bool> taken(n, false);
  std::vector<double> closest(n, std::numeric_limits<double>::infinity());

  auto draw = [&](std::vector<double> w) {
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    const std::size_t i = sample_index(w, rng.uniform());
    for (double& x : w) x /= total;
    s.record.probabilities.push_back(std::move(w));
    s.record.chosen.push_back(i);
    s.centers.push_back(set.point(i));
    taken[i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      closest[j] = std::min(
          closest[j], std::max(0.0, oriented_divergence(f, set.point(j), set.point(i), params,
                                                        orientation)));
    }
  };

  draw(set.weights());
  while (s.centers.size() < k) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i]) w[i] = set.weight(i) * closest[i];
    }
    if (std::accumulate(w.begin(), w.end(), 0.0) <= 0.0) {
      // Every remaining point coincides with a center.
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        const bool duplicate = std::any_of(s.centers.begin(), s.centers.end(),
                                           [&](const Vector& c) { return c == set.point(i); });
        w[i] = duplicate ? 0.0 : set.weight(i);
      }
      if (std::accumulate(w.begin(), w.end(), 0.0) <= 0.0) {
        for (std::size_t i = 0; i < n; ++i) w[i] = taken[i] ? 0.0 : set.weight(i);
      }
    }
    draw(std::move(w));
  }
  return s;
}

ClusteringResult lloyd_from(const ConvexGenerator& f, const WeightedPointSet& set,
                            const ClusteringConfig& config, std::vector<Vector> centers) {
  require_k(config.k, set.size());
  if (centers.size() != config.k) throw ParameterError("need exactly k initial centers");
  if (config.cccp_steps < 1) throw ParameterError("cccp_steps must be at least 1");
  const ChordGapParams update_params = point_first_params(config.params, config.orientation);

  ClusteringResult r;
  std::vector<double> div;
  std::vector<std::size_t> labels =
      assign_all(f, set, centers, config.params, config.orientation, &div);
  r.potential_trace.push_back(potential(f, set, centers, config.params, config.orientation));

  for (int round = 0; round < config.max_rounds; ++round) {
    // Empty clusters take the point farthest from its current center.
    std::vector<std::size_t> sizes(config.k, 0);
    for (std::size_t l : labels) ++sizes[l];
    std::vector<bool> moved(set.size(), false);
    for (std::size_t j = 0; j < config.k; ++j) {
      if (sizes[j] > 0) continue;
      std::size_t far = set.size();
      double far_div = 0.0;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (!moved[i] && sizes[labels[i]] > 1 && div[i] > far_div) {
          far = i;
          far_div = div[i];
        }
      }
      if (far == set.size()) continue;
      --sizes[labels[far]];
      labels[far] = j;
      sizes[j] = 1;
      div[far] = 0.0;
      moved[far] = true;
      centers[j] = set.point(far);
    }

    double movement = 0.0;
    for (std::size_t j = 0; j < config.k; ++j) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (labels[i] == j) members.push_back(i);
      }
      if (members.empty()) continue;
      const WeightedPointSet cluster = set.subset(members);
      CentroidOptions opts;
      opts.tol = config.tol;
      opts.max_iter = config.cccp_steps;
      Vector next = solve_centroid_from(f, cluster, update_params, centers[j], opts).centroid;
      movement = std::max(movement, (next - centers[j]).cwiseAbs().maxCoeff());
      centers[j] = std::move(next);
    }

    std::vector<std::size_t> next =
        assign_all(f, set, centers, config.params, config.orientation, &div);
    r.potential_trace.push_back(potential(f, set, centers, config.params, config.orientation));
    r.rounds = round + 1;
    const bool stable = next == labels && movement <= config.tol;
    labels = std::move(next);
    if (stable) {
      r.converged = true;
      break;
    }
  }
  r.centers = std::move(centers);
  r.assignments = std::move(labels);
  return r;
}

ClusteringResult lloyd_cluster(const ConvexGenerator& f, const WeightedPointSet& set,
                               const ClusteringConfig& config) {
  Rng rng(config.seed, 0, StreamPurpose::kSeeding);
  Seeding s = kmeanspp_seed(f, set, config.k, config.params, rng, config.orientation);
  ClusteringResult r = lloyd_from(f, set, config, s.centers);
  r.seeding = std::move(s.record);
  return r;
}

OptimalClustering brute_force_optimum(const ConvexGenerator& f, const WeightedPointSet& set,
                                      std::size_t k, const ChordGapParams& params) {
  const std::size_t n = set.size();
  if (n > kBruteForceMaxPoints) {
    throw ParameterError("brute force optimum is limited to " +
                         std::to_string(kBruteForceMaxPoints) + " points");
  }
  require_k(k, n);
  const std::size_t full = (std::size_t{1} << n) - 1;

  std::vector<double> cost(full + 1, 0.0);
  std::vector<Vector> center(full + 1);
  CentroidOptions opts;
  opts.tol = 1e-12;
  opts.max_iter = 2000;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    std::vector<std::size_t> members;
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        members.push_back(i);
        mass += set.weight(i);
      }
    }
    const WeightedPointSet part = set.subset(members);
    if (part.size() == 1) {
      center[mask] = part.point(0);
      cost[mask] = 0.0;
      continue;
    }
    // CCCP is local: try the gradient-space mean, the first and last
    // members, and the member with the lowest energy.
    std::vector<Vector> starts{gradient_mean(f, part), part.point(0),
                               part.point(part.size() - 1)};
    std::size_t best_member = 0;
    double best_member_energy = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < part.size(); ++i) {
      const double e = centroid_energy(f, part, part.point(i), params);
      if (e < best_member_energy) {
        best_member_energy = e;
        best_member = i;
      }
    }
    starts.push_back(part.point(best_member));
    double best = std::numeric_limits<double>::infinity();
    for (const Vector& s : starts) {
      const CentroidResult r = solve_centroid_from(f, part, params, s, opts);
      if (r.energy() < best) {
        best = r.energy();
        center[mask] = r.centroid;
      }
    }
    cost[mask] = mass * best;
  }

  // best[j][mask]: minimal cost of covering mask with at most j+1 parts.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best(k, std::vector<double>(full + 1, inf));
  std::vector<std::vector<std::size_t>> choice(k, std::vector<std::size_t>(full + 1, 0));
  best[0] = cost;
  for (std::size_t mask = 1; mask <= full; ++mask) choice[0][mask] = mask;
  for (std::size_t j = 1; j < k; ++j) {
    for (std::size_t mask = 1; mask <= full; ++mask) {
      best[j][mask] = best[j - 1][mask];
      choice[j][mask] = 0;  // 0 marks "use fewer parts"
      const std::size_t low = mask & (~mask + 1);
      const std::size_t rest = mask ^ low;
      // Parts containing the lowest element: low | sub for sub a subset of rest.
      for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
        const std::size_t part = low | sub;
        if (part != mask) {
          const double c = cost[part] + best[j - 1][mask ^ part];
          if (c < best[j][mask]) {
            best[j][mask] = c;
            choice[j][mask] = part;
          }
        }
        if (sub == 0) break;
      }
    }
  }

  OptimalClustering out;
  out.phi_star = best[k - 1][full];
  out.labels.assign(n, 0);
  std::size_t mask = full;
  std::size_t j = k - 1;
  std::size_t label = 0;
  while (mask != 0) {
    while (j > 0 && choice[j][mask] == 0) --j;
    const std::size_t part = j == 0 ? mask : choice[j][mask];
    for (std::size_t i = 0; i < n; ++i) {
      if (part & (std::size_t{1} << i)) out.labels[i] = label;
    }
    out.centers.push_back(center[part]);
    ++label;
    mask ^= part;
    if (j > 0) --j;
  }
  return out;
}

ConstantEstimates estimate_uv_rho(const ConvexGenerator& f, const WeightedPointSet& set,
                                  const ChordGapParams& params, std::size_t samples,
                                  std::uint64_t seed) {
  if (samples < 1) throw ParameterError("samples must be at least 1");
  Rng rng(seed, 0, StreamPurpose::kConstantEstimate);
  const std::size_t n = set.size();
  auto hull_point = [&]() {
    // Uniform Dirichlet weights from exponential spacings.
    Vector x = Vector::Zero(static_cast<Eigen::Index>(set.coordinates()));
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = -std::log(1.0 - rng.uniform());
      x += e * set.point(i);
      total += e;
    }
    x /= total;
    if (!f.contains(x)) x = f.project_inward(x);
    return x;
  };
  constexpr double kGuard = 1e-12;
  ConstantEstimates est;
  double len_min = std::numeric_limits<double>::infinity();
  double len_max = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vector x = hull_point();
    const Vector y = hull_point();
    const Vector z = hull_point();
    const double dxz = chord_gap(f, x, z, params);
    const double dxy = chord_gap(f, x, y, params);
    const double dyz = chord_gap(f, y, z, params);
    const double dyx = chord_gap(f, y, x, params);
    if (dxy + dyz > kGuard) est.u = std::max(est.u, dxz / (dxy + dyz));
    if (dxy > kGuard) est.v = std::max(est.v, dyx / dxy);
    if (dyx > kGuard) est.v = std::max(est.v, dxy / dyx);
    const Vector dir = y - z;
    const double norm = dir.norm();
    if (norm > kGuard) {
      const Vector u = dir / norm;
      const double len = std::sqrt(std::max(0.0, u.dot(f.hessian(x) * u)));
      len_min = std::min(len_min, len);
      len_max = std::max(len_max, len);
    }
  }
  if (len_min > 0.0 && std::isfinite(len_min)) est.rho = std::max(1.0, len_max / len_min);
  return est;
}

double competitive_bound(double u, double v, std::size_t k) {
  return 2.0 * u * u * (1.0 + v) * (2.0 + std::log(static_cast<double>(k)));
}

CompetitiveReport competitive_bench(const ConvexGenerator& f,
                                    const std::vector<WeightedPointSet>& ensemble,
                                    const ChordGapParams& params, const BenchOptions& options) {
  if (ensemble.empty()) throw ParameterError("ensemble is empty");
  if (options.trials < 1) throw ParameterError("trials must be at least 1");
  if (!(options.confidence > 0.0 && options.confidence < 1.0)) {
    throw ParameterError("confidence must lie in (0, 1)");
  }
  CompetitiveReport report;
  report.trials = options.trials;
  report.min_bound = std::numeric_limits<double>::infinity();
  double ratio_sum = 0.0;
  std::size_t counted = 0;

  for (std::size_t m = 0; m < ensemble.size(); ++m) {
    const WeightedPointSet& set = ensemble[m];
    require_k(options.k, set.size());
    InstanceReport ir;
    ir.phi_star = brute_force_optimum(f, set, options.k, params).phi_star;
    ir.constants = estimate_uv_rho(f, set, params, options.uv_samples, options.seed + m);
    ir.bound = competitive_bound(ir.constants.u, ir.constants.v, options.k);

    std::vector<double> phi(options.trials, 0.0);
    auto run = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        Rng rng(options.seed, (static_cast<std::uint64_t>(m) << 32) | t, StreamPurpose::kSeeding);
        const Seeding s = kmeanspp_seed(f, set, options.k, params, rng);
        phi[t] = potential(f, set, s.centers, params);
      }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      run(0, options.trials);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (options.trials + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w) {
        const std::size_t b = std::min(options.trials, w * chunk);
        const std::size_t e = std::min(options.trials, b + chunk);
        if (b < e) pool.emplace_back(run, b, e);
      }
      for (auto& th : pool) th.join();
    }

    std::vector<double> ratios(options.trials, 1.0);
    if (ir.phi_star <= 0.0) {
      const bool all_zero = std::all_of(phi.begin(), phi.end(), [](double x) { return x <= 0.0; });
      if (all_zero) {
        ir.zero_optimum = true;
        ++report.zero_optimum;
      } else {
        ir.skipped = true;
        ++report.skipped;
      }
    } else {
      for (std::size_t t = 0; t < options.trials; ++t) ratios[t] = phi[t] / ir.phi_star;
    }
    if (!ir.skipped) {
      ir.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) /
                      static_cast<double>(ratios.size());
      ir.min_ratio = *std::min_element(ratios.begin(), ratios.end());
      Rng boot(options.seed, m, StreamPurpose::kBootstrap);
      std::vector<double> means(options.bootstrap_resamples);
      for (double& mean : means) {
        double s = 0.0;
        for (std::size_t t = 0; t < ratios.size(); ++t) s += ratios[boot.below(ratios.size())];
        mean = s / static_cast<double>(ratios.size());
      }
      if (means.empty()) {
        ir.bootstrap_upper = ir.mean_ratio;
      } else {
        std::sort(means.begin(), means.end());
        const auto idx = static_cast<std::size_t>(
            std::ceil(options.confidence * static_cast<double>(means.size()))) - 1;
        ir.bootstrap_upper = means[std::min(idx, means.size() - 1)];
      }
      ratio_sum += ir.mean_ratio;
      ++counted;
    }
    report.u = std::max(report.u, ir.constants.u);
    report.v = std::max(report.v, ir.constants.v);
    report.rho = std::max(report.rho, ir.constants.rho);
    report.max_bound = std::max(report.max_bound, ir.bound);
    report.min_bound = std::min(report.min_bound, ir.bound);
    report.instances.push_back(ir);
  }
  report.mean_ratio = counted ? ratio_sum / static_cast<double>(counted) : 1.0;
  return report;
}

WeightedPointSet random_instance(const ConvexGenerator& f, std::size_t n, Rng& rng,
                                 bool random_weights) {
  if (n < 1) throw ParameterError("instance needs at least one point");
  const DomainDescriptor dom = f.domain();
  const auto d = static_cast<Eigen::Index>(dom.dimension);
  auto random_spd = [&]() {
    Matrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) a(i, j) = rng.normal();
    return symmetrize(a * a.transpose() / static_cast<double>(d) + 0.5 * Matrix::Identity(d, d));
  };
  std::vector<Vector> pts;
  std::vector<double> w;
  for (std::size_t i = 0; i < n; ++i) {
    Vector x(static_cast<Eigen::Index>(dom.coordinates));
    switch (dom.kind) {
      case DomainKind::kFullSpace:
        for (Eigen::Index c = 0; c < x.size(); ++c) x(c) = rng.uniform(-2.0, 2.0);
        break;
      case DomainKind::kPositiveOrthant:
        for (Eigen::Index c = 0; c < x.size(); ++c) x(c) = rng.uniform(0.2, 3.0);
        break;
      case DomainKind::kOpenSimplex: {
        double total = 0.0;
        for (Eigen::Index c = 0; c < x.size(); ++c) total += (x(c) = rng.uniform(0.1, 1.0));
        x /= 1.5 * total;
        break;
      }
      case DomainKind::kSpdCone:
        x = svec(random_spd());
        break;
      case DomainKind::kGaussianNatural: {
        const Matrix prec = spd_inverse(random_spd());
        Vector mu(d);
        for (Eigen::Index c = 0; c < d; ++c) mu(c) = rng.normal();
        x.head(d) = prec * mu;
        x.tail(x.size() - d) = svec(-0.5 * prec);
        break;
      }
    }
    pts.push_back(std::move(x));
    w.push_back(random_weights ? rng.uniform(0.5, 2.0) : 1.0);
  }
  return {std::move(pts), std::move(w)};
}

}  // namespace chordgap
