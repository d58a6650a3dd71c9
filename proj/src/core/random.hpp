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

#include <cstdint>
#include <random>

namespace chordgap {

// Reproducible random stream: std::mt19937_64 seeded through std::seed_seq
// from (seed, stream, purpose). Both engines are fully specified by the
// standard, so draws are identical on every platform. Each benchmark trial
// and each auxiliary task gets its own stream id.
enum class StreamPurpose : std::uint32_t {
  kSeeding = 0,
  kBootstrap = 1,
  kConstantEstimate = 2,
  kEnsemble = 3,
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0,
               StreamPurpose purpose = StreamPurpose::kSeeding)
      : engine_(make_seq(seed, stream, purpose)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal through Box-Muller on two uniforms.
  double normal();

  // Index in [0, n).
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * n) % n; }

 private:
  static std::mt19937_64 make_seq(std::uint64_t seed, std::uint64_t stream,
                                  StreamPurpose purpose) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(purpose)};
    return std::mt19937_64(seq);
  }

  std::mt19937_64 engine_;
};

}  // namespace chordgap
