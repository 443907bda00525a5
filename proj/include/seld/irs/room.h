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

#ifndef SELD_IRS_ROOM_H_
#define SELD_IRS_ROOM_H_

#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "seld/random.h"

namespace seld::irs {

// Shoebox room spanning [0, L] x [0, W] x [0, H].
struct RoomSpec {
  Eigen::Vector3d dimensions{6.0, 5.0, 3.0};
  double rt60_s = 0.3;
  Eigen::Vector3d array_position{3.0, 2.5, 1.5};
  std::vector<Eigen::Vector3d> sources;
  double speed_of_sound = 343.0;

  double Volume() const { return dimensions.prod(); }
  double SurfaceArea() const;
  // Throws ValidationError unless every position keeps `margin` metres from
  // every wall and rt60_s and the dimensions are positive.
  void Validate(double margin = 0.1) const;
};

struct RoomSamplerConfig {
  Eigen::Vector3d min_dimensions{3.0, 3.0, 2.5};
  Eigen::Vector3d max_dimensions{10.0, 8.0, 4.0};
  double rt60_min_s = 0.1;
  double rt60_max_s = 0.5;
  double wall_margin = 0.1;
  int min_sources = 1;
  int max_sources = 3;
  // Minimum source-to-array distance, keeps the far-field assumption sane.
  double min_source_distance = 0.5;
  int max_attempts = 1000;
};

// RT60 ~ U[rt60_min, rt60_max], dimensions uniform per axis, positions uniform
// inside the margins. Throws SamplingError when no valid geometry is found
// within max_attempts draws.
RoomSpec SampleRoom(Rng& rng, const RoomSamplerConfig& config = {});

enum class AbsorptionModel {
  kSabine,  // alpha = 0.161 V / (S T)
  kEyring,  // alpha = 1 - exp(-0.161 V / (S T))
};

// Uniform wall energy absorption, clamped below 1.
double WallAbsorption(const RoomSpec& room, AbsorptionModel model);
// Pressure reflection coefficient sqrt(1 - alpha).
inline double ReflectionCoefficient(double absorption) { return std::sqrt(1.0 - absorption); }

struct ImageSource {
  Eigen::Vector3d position;
  int order = 0;  // number of wall reflections
  double distance = 0.0;
  double amplitude = 0.0;  // beta^order / distance
};

// All images with at most `max_order` reflections as seen from `receiver`.
std::vector<ImageSource> EnumerateImages(const RoomSpec& room, const Eigen::Vector3d& source,
                                         const Eigen::Vector3d& receiver, double beta,
                                         int max_order);

// Smallest order K at which beta^K * d0 / max(d0, (K - 1) * min_dimension)
// drops below -60 dB, capped at 30.
int AutoMaxOrder(const RoomSpec& room, const Eigen::Vector3d& source, double beta);

}  // namespace seld::irs

#endif  // SELD_IRS_ROOM_H_
