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


#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "centroid.hpp"
#include "random.hpp"

namespace chordgap {

// Which argument the data point occupies in D(. : .).
enum class Orientation {
  kPointFirst,   // D(p_i : c)
  kCenterFirst,  // D(c : p_i)
};

double oriented_divergence(const ConvexGenerator& f, const Vector& point, const Vector& center,
                           const ChordGapParams& params, Orientation orientation);

struct NearestCenter {
  std::size_t index = 0;
  double divergence = 0.0;
};

// Ties go to the lowest center index.
NearestCenter nearest_center(const ConvexGenerator& f, const Vector& point,
                             const std::vector<Vector>& centers, const ChordGapParams& params,
                             Orientation orientation = Orientation::kPointFirst);

// Phi(C) = sum w_i min_c D(p_i : c).
double potential(const ConvexGenerator& f, const WeightedPointSet& set,
                 const std::vector<Vector>& centers, const ChordGapParams& params,
                 Orientation orientation = Orientation::kPointFirst);

struct SeedingRecord {
  std::vector<std::size_t> chosen;
  // probabilities[s][i]: probability that point i was drawn at step s.
  std::vector<std::vector<double>> probabilities;
};

struct Seeding {
  std::vector<Vector> centers;
  SeedingRecord record;
};

// Index i with cumulative(weights)[i] > u * sum(weights); u in [0, 1).
std::size_t sample_index(const std::vector<double>& weights, double u);

// k-means++: first center with probability proportional to w_i, then
// proportional to w_i min_c D(p_i : c). If every remaining divergence is 0,
// the draw is weight-proportional over unchosen points distinct from the
// chosen centers. One uniform draw per center.
Seeding kmeanspp_seed(const ConvexGenerator& f, const WeightedPointSet& set, std::size_t k,
                      const ChordGapParams& params, Rng& rng,
                      Orientation orientation = Orientation::kPointFirst);

struct ClusteringConfig {
  std::size_t k = 2;
  ChordGapParams params = ChordGapParams::skew(0.5);
  std::uint64_t seed = 0;
  int max_rounds = 100;
  double tol = 1e-10;  // center movement (sup norm) that ends the iteration
  int cccp_steps = 5;
  Orientation orientation = Orientation::kPointFirst;
};

struct ClusteringResult {
  std::vector<Vector> centers;
  std::vector<std::size_t> assignments;
  std::vector<double> potential_trace;  // after seeding, then after each round
  SeedingRecord seeding;
  int rounds = 0;
  bool converged = false;  // labels stable and centers moved <= tol before max_rounds
};

// Variational Lloyd iterations from k-means++ seeds drawn with config.seed.
ClusteringResult lloyd_cluster(const ConvexGenerator& f, const WeightedPointSet& set,
                               const ClusteringConfig& config);

// Lloyd iterations from given centers.
ClusteringResult lloyd_from(const ConvexGenerator& f, const WeightedPointSet& set,
                            const ClusteringConfig& config, std::vector<Vector> centers);

inline constexpr std::size_t kBruteForceMaxPoints = 12;

struct OptimalClustering {
  double phi_star = 0.0;
  std::vector<std::size_t> labels;
  std::vector<Vector> centers;
};

// Exhaustive search over partitions into at most k parts, each part's
// center found by CCCP from several starts. Refuses n > 12.
OptimalClustering brute_force_optimum(const ConvexGenerator& f, const WeightedPointSet& set,
                                      std::size_t k, const ChordGapParams& params);

struct ConstantEstimates {
  double u = 1.0;    // D(x:z) <= U (D(x:y) + D(y:z))
  double v = 1.0;    // D(y:x) <= V D(x:y)
  double rho = 1.0;  // spread of Hessian-metric lengths over co(P)
};

// Sampled lower estimates of U, V and rho over the convex hull of the set.
// Draws with the same seed are nested, so estimates never decrease as
// `samples` grows.
ConstantEstimates estimate_uv_rho(const ConvexGenerator& f, const WeightedPointSet& set,
                                  const ChordGapParams& params, std::size_t samples,
                                  std::uint64_t seed);

// 2 U^2 (1 + V) (2 + ln k).
double competitive_bound(double u, double v, std::size_t k);

struct BenchOptions {
  std::size_t k = 2;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t uv_samples = 20000;
  std::size_t bootstrap_resamples = 1000;
  double confidence = 0.95;
  unsigned threads = 1;
};

struct InstanceReport {
  double phi_star = 0.0;
  double mean_ratio = 1.0;
  double bootstrap_upper = 1.0;  // one-sided upper confidence bound of the mean
  double min_ratio = 1.0;
  ConstantEstimates constants;
  double bound = 0.0;
  bool skipped = false;          // Phi* == 0 with Phi(seeding) > 0 in some trial
  bool zero_optimum = false;     // Phi* == 0 and every seeding reached 0: ratio 1
};

struct CompetitiveReport {
  std::vector<InstanceReport> instances;
  double mean_ratio = 1.0;       // over non-skipped instances
  double max_bound = 0.0;
  double min_bound = 0.0;
  double u = 1.0;                // maxima over instances
  double v = 1.0;
  double rho = 1.0;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::size_t zero_optimum = 0;
};

CompetitiveReport competitive_bench(const ConvexGenerator& f,
                                    const std::vector<WeightedPointSet>& ensemble,
                                    const ChordGapParams& params, const BenchOptions& options);

// Random instance with n points strictly inside the generator domain.
WeightedPointSet random_instance(const ConvexGenerator& f, std::size_t n, Rng& rng,
                                 bool random_weights = false);

}  // namespace chordgap
