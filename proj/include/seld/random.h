/* Copyright 2026 The seldkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SELD_RANDOM_H_
#define SELD_RANDOM_H_

#include <cstdint>
#include <random>

namespace seld {

// Seeded generator used by every stochastic stage. Work units derive their
// own stream with ForUnit() so results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Independent stream for (seed, unit). Mixing is SplitMix64.
  static Rng ForUnit(uint64_t seed, uint64_t unit);

  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);
  // Uniform integer in [lo, hi], inclusive.
  int UniformInt(int lo, int hi);
  double Normal(double mean = 0.0, double stddev = 1.0);
  bool Bernoulli(double p);
  uint64_t NextU64() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

uint64_t SplitMix64(uint64_t x);

}  // namespace seld

#endif  // SELD_RANDOM_H_
