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


// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// measurements. Exit status is nonzero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core/centroid.hpp"
#include "core/clustering.hpp"
#include "core/divergences.hpp"
#include "core/statistical.hpp"
#include "support.hpp"

using namespace chordgap;
using testsupport::rel_err;
using testsupport::Sampler;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("     " + what); }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

struct Pair {
  GeneratorPtr f;
  std::size_t d;
  Vector p, q;
};

Pair random_pair(const std::string& id, Sampler& s, bool separate) {
  Pair c;
  c.d = testsupport::sample_dimension(id, s);
  c.f = make_generator(id, c.d);
  do {
    c.p = c.f->encode(s.dense_point(id, c.d));
    c.q = c.f->encode(s.dense_point(id, c.d));
  } while (separate && !testsupport::separated(c.p, c.q));
  return c;
}

Vector vec(const std::vector<double>& xs) {
  return Eigen::Map<const Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

// Tracks the worst value of a metric and compares it to a threshold.
struct Worst {
  double value = 0.0;
  void add(double x) { value = std::max(value, std::isnan(x) ? INFINITY : x); }
};

constexpr int kIdentityInputs = 1000;
constexpr double kIdentityTol = 1e-11;

Outcome identities() {
  Outcome out;
  Sampler s(101);
  for (const auto& id : testsupport::all_generators()) {
    Worst collapse, endpoints, swap, decomposition, jb, half;
    for (int t = 0; t < kIdentityInputs; ++t) {
      const Pair c = random_pair(id, s, true);
      const ChordGapParams prm = s.params();
      const double a = s.uniform(0.05, 0.95);
      const double g = s.uniform(0.05, 0.95);
      const double j = skew_jensen(*c.f, c.p, c.q, a);
      collapse.add(rel_err(chord_gap(*c.f, c.p, c.q, {a, a, a}), j));
      endpoints.add(rel_err(chord_gap(*c.f, c.p, c.q, {0.0, 1.0, g}),
                            skew_jensen(*c.f, c.p, c.q, g)));
      const ChordGapParams flip(1 - prm.alpha(), 1 - prm.beta(), 1 - prm.gamma());
      swap.add(rel_err(chord_gap(*c.f, c.q, c.p, prm), chord_gap(*c.f, c.p, c.q, flip)));
      const Vector pa = interpolate(c.p, c.q, prm.alpha());
      const Vector pb = interpolate(c.p, c.q, prm.beta());
      decomposition.add(rel_err(chord_gap(*c.f, c.p, c.q, prm),
                                skew_jensen(*c.f, c.p, c.q, prm.gamma()) -
                                    skew_jensen(*c.f, pa, pb, prm.lambda())));
      jb.add(rel_err(jensen_bregman(*c.f, c.p, c.q, a), j));
      const double gh = s.uniform(0.01, 0.5);
      half.add(rel_err(chord_gap(*c.f, c.p, c.q, {0.0, 0.5, gh}),
                       2 * gh * skew_jensen(*c.f, c.p, c.q, 0.5)));
    }
    const auto check = [&](const Worst& w, const std::string& name) {
      out.require(w.value < kIdentityTol, id + " " + name + ": max rel err " + sci(w.value));
    };
    check(collapse, "J^{a,a,a} = J^a");
    check(endpoints, "J^{0,1,g} = J^g");
    check(swap, "swap duality");
    check(decomposition, "decomposition");
    check(jb, "Jensen-Bregman = J");
    check(half, "J^{0,1/2,g} = 2g J");
  }
  out.note(std::to_string(kIdentityInputs) + " separated inputs per generator");
  return out;
}

double fitted_slope(const double* alphas, const double* errors, int n) {
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += std::log(alphas[i]) / n;
    my += std::log(errors[i]) / n;
  }
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = std::log(alphas[i]) - mx;
    sxy += dx * (std::log(errors[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

constexpr double kAlphas[3] = {1e-3, 1e-4, 1e-5};

struct SlopeRange {
  double lo = INFINITY;
  double hi = -INFINITY;
  void add(double x) {
    lo = std::min(lo, std::isnan(x) ? -INFINITY : x);
    hi = std::max(hi, std::isnan(x) ? INFINITY : x);
  }
  bool within() const { return lo >= 0.8 && hi <= 1.2; }
  std::string str() const { return "[" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "]"; }
};

Outcome limits() {
  Outcome out;
  Sampler s(202);
  for (const auto& id : testsupport::all_generators()) {
    if (id == "quadratic") {
      // J^a = a (1 - a) |p - q|^2 exactly: the scaled divergence has no O(a) term.
      Worst err;
      for (int t = 0; t < 50; ++t) {
        const Pair c = random_pair(id, s, true);
        for (double a : kAlphas) {
          err.add(rel_err(scaled_skew_jensen(*c.f, c.p, c.q, a), bregman(*c.f, c.q, c.p)));
          err.add(rel_err(scaled_skew_jensen(*c.f, c.p, c.q, 1 - a), bregman(*c.f, c.p, c.q)));
        }
      }
      out.require(err.value < 1e-8, "quadratic: scaled J equals B for every alpha, max rel err " +
                                        sci(err.value));
      continue;
    }
    SlopeRange low, high;
    for (int t = 0; t < 50; ++t) {
      const Pair c = random_pair(id, s, true);
      double e0[3], e1[3];
      for (int i = 0; i < 3; ++i) {
        e0[i] = std::abs(scaled_skew_jensen(*c.f, c.p, c.q, kAlphas[i]) - bregman(*c.f, c.q, c.p));
        e1[i] = std::abs(scaled_skew_jensen(*c.f, c.p, c.q, 1 - kAlphas[i]) -
                         bregman(*c.f, c.p, c.q));
      }
      low.add(fitted_slope(kAlphas, e0, 3));
      high.add(fitted_slope(kAlphas, e1, 3));
    }
    out.require(low.within(), id + " sJ_a -> B(q:p), slope range " + low.str());
    out.require(high.within(), id + " sJ_{1-a} -> B(p:q), slope range " + high.str());
  }

  SlopeRange cat, gauss;
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = static_cast<std::size_t>(s.integer(2, 6));
    const auto model = ExponentialFamilyModel::multinoulli(k);
    const SourceParams p = CategoricalParams{vec(testsupport::random_simplex(s, k))};
    const SourceParams q = CategoricalParams{vec(testsupport::random_simplex(s, k))};
    const double kl = kl_divergence(model, p, q);
    double e[3];
    for (int i = 0; i < 3; ++i) e[i] = std::abs(bhattacharyya_skew(model, p, q, kAlphas[i]) / kAlphas[i] - kl);
    cat.add(fitted_slope(kAlphas, e, 3));
  }
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = static_cast<std::size_t>(s.integer(1, 3));
    const auto model = ExponentialFamilyModel::gaussian(d);
    const SourceParams p = GaussianParams{s.vec(d, -1, 1), s.spd(d)};
    const SourceParams q = GaussianParams{s.vec(d, -1, 1), s.spd(d)};
    const double kl = kl_divergence(model, p, q);
    double e[3];
    for (int i = 0; i < 3; ++i) e[i] = std::abs(bhattacharyya_skew(model, p, q, kAlphas[i]) / kAlphas[i] - kl);
    gauss.add(fitted_slope(kAlphas, e, 3));
  }
  out.require(cat.within(), "multinoulli Bhat_a / a -> KL, slope range " + cat.str());
  out.require(gauss.within(), "gaussian Bhat_a / a -> KL, slope range " + gauss.str());
  out.note("alpha in {1e-3, 1e-4, 1e-5}, 50 inputs per line");
  return out;
}

Outcome bhattacharyya_oracle() {
  Outcome out;
  Sampler s(303);
  Worst skew, tri, oracle, z;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = static_cast<std::size_t>(s.integer(2, 8));
    const auto model = ExponentialFamilyModel::multinoulli(k);
    const auto p = testsupport::random_simplex(s, k);
    const auto q = testsupport::random_simplex(s, k);
    const DiscreteDistribution dp(vec(p));
    const DiscreteDistribution dq(vec(q));
    const SourceParams sp = CategoricalParams{vec(p)};
    const SourceParams sq = CategoricalParams{vec(q)};
    const double a = s.uniform(0.0, 1.0);
    const double summed = bhattacharyya_discrete_oracle(dp, dq, a);
    skew.add(std::abs(summed - bhattacharyya_skew(model, sp, sq, a)));
    oracle.add(std::abs(summed - testsupport::oracle_bhattacharyya(p, q, a)));
    const ChordGapParams prm = s.params();
    tri.add(std::abs(generalized_bhattacharyya_discrete(dp, dq, prm) -
                     generalized_bhattacharyya(model, sp, sq, prm)));
    const double delta = s.uniform(0.0, 1.0);
    const double j = skew_jensen(model.cumulant(), model.to_natural(sp), model.to_natural(sq), delta);
    z.add(std::abs(z_normalizer(dp, dq, delta) - std::exp(-j)));
  }
  out.require(skew.value < 1e-9, "skew: summation vs cumulant path, max abs err " + sci(skew.value));
  out.require(tri.value < 1e-9, "triparametric: summation vs cumulant path, max abs err " + sci(tri.value));
  out.require(oracle.value < 1e-12, "summation vs independent oracle, max abs err " + sci(oracle.value));
  out.require(z.value < 1e-10, "Z_d = exp(-J^d), max abs err " + sci(z.value));
  out.note("1000 multinoulli pairs with 2 to 8 categories");
  return out;
}

Outcome gaussian_closed_form() {
  Outcome out;
  Sampler s(404);
  Worst err;
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = static_cast<std::size_t>(s.integer(1, 3));
    const auto model = ExponentialFamilyModel::gaussian(d);
    const GaussianParams p{s.vec(d, -1, 1), s.spd(d)};
    const GaussianParams q{s.vec(d, -1, 1), s.spd(d)};
    const double a = s.uniform(0.0, 1.0);
    const Vector tp = model.to_natural(p);
    const Vector tq = model.to_natural(q);
    err.add(std::abs(gaussian_skew_jensen_closed_form(p.mean, p.cov, q.mean, q.cov, a) -
                     skew_jensen(model.cumulant(), tp, tq, a)));
  }
  out.require(err.value < 1e-9, "closed form vs cumulant path, 500 pairs, max abs err " + sci(err.value));
  const auto model = ExponentialFamilyModel::gaussian(1);
  const SourceParams n01 = GaussianParams{Vector::Constant(1, 0.0), Matrix::Constant(1, 1, 1.0)};
  const SourceParams n11 = GaussianParams{Vector::Constant(1, 1.0), Matrix::Constant(1, 1, 1.0)};
  const double bhat = bhattacharyya_skew(model, n01, n11, 0.5);
  const double kl = kl_divergence(model, n01, n11);
  out.require(std::abs(bhat - 0.125) <= 1e-12, "Bhat_1/2(N(0,1), N(1,1)) = " + fmt("%.17g", bhat));
  out.require(std::abs(kl - 0.5) <= 1e-12, "KL(N(0,1) : N(1,1)) = " + fmt("%.17g", kl));
  return out;
}

bool non_increasing(const std::vector<double>& trace) {
  for (std::size_t t = 1; t < trace.size(); ++t) {
    if (trace[t] > trace[t - 1] + 1e-12 * std::max(1.0, std::abs(trace[t - 1]))) return false;
  }
  return true;
}

WeightedPointSet random_set(const GeneratorPtr& f, const std::string& id, std::size_t d,
                            Sampler& s, std::size_t n) {
  std::vector<Vector> pts;
  std::vector<double> w;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(f->encode(s.dense_point(id, d)));
    w.push_back(s.uniform(0.1, 2.0));
  }
  return WeightedPointSet(pts, w);
}

Outcome cccp() {
  Outcome out;
  Sampler s(505);
  const std::vector<std::string> ids = {"quadratic", "negentropy", "logsumexp"};
  const CentroidOptions opt;
  int monotone = 0, converged = 0, quadratic = 0, mean_ok = 0;
  Worst residual, mean_err;
  for (int t = 0; t < 200; ++t) {
    const std::string& id = ids[static_cast<std::size_t>(t) % ids.size()];
    const std::size_t d = static_cast<std::size_t>(s.integer(1, 4));
    const auto f = make_generator(id, d);
    const WeightedPointSet set = random_set(f, id, d, s, static_cast<std::size_t>(s.integer(1, 10)));
    const ChordGapParams prm = s.params();
    const CentroidResult r = solve_centroid(*f, set, prm, opt);
    monotone += non_increasing(r.energy_trace);
    if (r.converged) {
      ++converged;
      residual.add(fixed_point_residual(*f, set, r.centroid, prm));
    }
    if (id == "quadratic") {
      ++quadratic;
      Vector mean = Vector::Zero(static_cast<Eigen::Index>(d));
      for (std::size_t i = 0; i < set.size(); ++i) mean += set.weight(i) * set.point(i);
      const double e = (r.centroid - mean).cwiseAbs().maxCoeff();
      mean_err.add(e);
      mean_ok += e <= 10 * opt.tol;
    }
  }
  out.require(monotone == 200, "energy trace non-increasing on " + std::to_string(monotone) + "/200");
  out.require(converged == 200, "converged on " + std::to_string(converged) + "/200");
  out.require(residual.value <= 10 * opt.tol, "max fixed-point residual " + sci(residual.value));
  out.require(mean_ok == quadratic, "quadratic centroid = weighted mean on " + std::to_string(mean_ok) +
                                        "/" + std::to_string(quadratic) + ", max err " + sci(mean_err.value));
  out.note("tol " + sci(opt.tol) + ", random valid (alpha, beta, gamma) per instance");
  return out;
}

Outcome sandwich() {
  Outcome out;
  Sampler s(606);
  for (const auto& id : testsupport::all_generators()) {
    int inside = 0;
    Worst width;
    for (int t = 0; t < 1000; ++t) {
      const Pair c = random_pair(id, s, false);
      const ChordGapParams prm = t % 4 == 0 ? ChordGapParams::skew(s.uniform(0.05, 0.95)) : s.params();
      const double value = chord_gap(*c.f, c.p, c.q, prm);
      const TaylorBounds b = taylor_lagrange_bounds(*c.f, c.p, c.q, prm);
      // The divergence itself carries rounding of order eps |F|.
      const double slack = 4 * std::numeric_limits<double>::epsilon() *
                           (1 + std::abs(c.f->eval(c.p)) + std::abs(c.f->eval(c.q)));
      inside += b.lower <= value + slack && value <= b.upper + slack;
      width.add(b.upper - b.lower);
    }
    std::string line = id + ": inside on " + std::to_string(inside) + "/1000";
    bool ok = inside == 1000;
    if (id == "quadratic") {
      line += ", max width " + sci(width.value);
      ok = ok && width.value < 1e-12;
    }
    out.require(ok, line);
  }
  return out;
}

std::vector<std::size_t> classical_kmeanspp(const WeightedPointSet& set, std::size_t k, Rng& rng) {
  const std::size_t n = set.size();
  std::vector<std::size_t> chosen;
  std::vector<double> d2(n, INFINITY);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = c == 0 ? set.weight(i) : set.weight(i) * d2[i];
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) w[i] = 0.0;
      total += w[i];
    }
    const double u = rng.uniform() * total;
    double run = 0.0;
    std::size_t pick = n;
    for (std::size_t i = 0; i < n && pick == n; ++i) {
      run += w[i];
      if (run > u) pick = i;
    }
    if (pick == n) {
      for (std::size_t i = 0; i < n; ++i)
        if (w[i] > 0) pick = i;
    }
    chosen.push_back(pick);
    for (std::size_t j = 0; j < n; ++j) {
      d2[j] = std::min(d2[j], 0.25 * (set.point(j) - set.point(pick)).squaredNorm());
    }
  }
  return chosen;
}

struct BenchCase {
  std::string id;
  ChordGapParams params;
};

Outcome kmeanspp_bound() {
  Outcome out;
  const std::vector<BenchCase> cases = {{"quadratic", ChordGapParams::skew(0.5)},
                                        {"negentropy", ChordGapParams(0.2, 0.8, 0.5)},
                                        {"logsumexp", ChordGapParams(0.1, 0.6, 0.3)}};
  const std::uint64_t seed = 20260101;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  for (const BenchCase& bc : cases) {
    const auto f = make_generator(bc.id, 2);
    std::vector<WeightedPointSet> k2, k3;
    for (std::uint64_t m = 0; m < 20; ++m) {
      Rng rng(seed, m, StreamPurpose::kEnsemble);
      const std::size_t n = 4 + rng.below(7);
      (m % 2 ? k3 : k2).push_back(random_instance(*f, n, rng, m % 4 < 2));
    }
    std::size_t checked = 0, within = 0, skipped = 0;
    double worst = 0.0;
    for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
      BenchOptions opt;
      opt.k = k;
      opt.seed = seed + k;
      opt.threads = threads;
      const auto& ensemble = k == 2 ? k2 : k3;
      const CompetitiveReport rep = competitive_bench(*f, ensemble, bc.params, opt);
      for (const InstanceReport& ir : rep.instances) {
        if (ir.skipped) {
          ++skipped;
          continue;
        }
        ++checked;
        within += ir.bootstrap_upper <= 1.05 * ir.bound;
        worst = std::max(worst, ir.bootstrap_upper / ir.bound);
      }
      if (bc.id == "quadratic") {
        std::size_t same = 0, total = 0;
        for (std::size_t m = 0; m < ensemble.size(); ++m) {
          for (std::size_t t = 0; t < opt.trials; ++t) {
            const std::uint64_t stream = (static_cast<std::uint64_t>(m) << 32) | t;
            Rng a(opt.seed, stream, StreamPurpose::kSeeding);
            Rng b(opt.seed, stream, StreamPurpose::kSeeding);
            const Seeding sd = kmeanspp_seed(*f, ensemble[m], k, bc.params, a);
            const auto classical = classical_kmeanspp(ensemble[m], k, b);
            bool match = sd.record.chosen == classical;
            for (std::size_t c = 0; match && c < k; ++c) {
              match = sd.centers[c] == ensemble[m].point(classical[c]);
            }
            same += match;
            ++total;
          }
        }
        out.require(same == total, "quadratic k=" + std::to_string(k) + ": seedings bit-match classical k-means++ on " +
                                       std::to_string(same) + "/" + std::to_string(total));
      }
    }
    out.require(checked > 0 && within == checked,
                bc.id + ": 95% bootstrap upper <= 1.05 bound on " + std::to_string(within) + "/" +
                    std::to_string(checked) + " instances (" + std::to_string(skipped) +
                    " skipped), max upper/bound " + fmt("%.4f", worst));
  }
  out.note("20 instances per generator, n in [4, 10], d = 2, k in {2, 3}, 10000 trials each, " +
           std::to_string(threads) + " threads");
  return out;
}

std::string run_cli(const std::string& args) {
  FILE* pipe = ::popen((std::string(CHORDGAP_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return {};
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
  const int status = ::pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {};
  return text;
}

Outcome determinism() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("chordgap_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path pts = dir / "points.csv";
  {
    std::ofstream csv(pts);
    csv << "f0,f1,w\n";
    Sampler s(808);
    for (int i = 0; i < 30; ++i) csv << s.uniform(0.1, 3) << "," << s.uniform(0.1, 3) << "," << s.uniform(0.5, 2) << "\n";
  }
  const fs::path spec = dir / "bench.json";
  std::ofstream(spec) << R"({"generator":"negentropy","alpha":0.2,"beta":0.8,"gamma":0.5,"k":3,)"
                      << R"("trials":500,"uv_samples":500,"bootstrap_resamples":100,)"
                      << R"("random":{"count":4,"n":8,"dimension":2}})";
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"cluster", "cluster --generator negentropy --alpha 0.2 --beta 0.8 --gamma 0.5 --k 3 --seed 42 --points " +
                      pts.string()},
      {"seed-bench", "seed-bench --seed 42 --input " + spec.string()},
      {"seed-bench, 1 vs 4 threads", "seed-bench --seed 42 --threads 4 --input " + spec.string()},
  };
  const std::string bench_once = run_cli(runs[1].second + " --threads 1");
  for (const auto& [name, args] : runs) {
    const std::string a = name == runs[2].first ? bench_once : run_cli(args);
    const std::string b = run_cli(args);
    out.require(!a.empty() && a == b, name + ": " + std::to_string(a.size()) + " bytes, identical=" +
                                          (a == b ? "yes" : "no"));
  }
  fs::remove_all(dir);
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "algebraic identities", 30, identities},
      {2, "limits", 10, limits},
      {3, "Bhattacharyya oracle equivalence", 10, bhattacharyya_oracle},
      {4, "Gaussian closed form", 0, gaussian_closed_form},
      {5, "CCCP", 60, cccp},
      {6, "Taylor-Lagrange sandwich", 0, sandwich},
      {7, "k-means++ bound", 300, kmeanspp_bound},
      {8, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0) {
      o.require(secs < c.budget_seconds, "runtime " + fmt("%.2f", secs) + " s < " + fmt("%.0f", c.budget_seconds) + " s");
    }
    failed += !o.pass;
    std::printf("%s %d %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.name, secs);
    for (const std::string& line : o.details) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
