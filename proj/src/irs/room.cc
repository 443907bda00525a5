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

#include "seld/irs/room.h"

#include <algorithm>
#include <cmath>

#include "seld/errors.h"

namespace seld::irs {

double RoomSpec::SurfaceArea() const {
  const Eigen::Vector3d& d = dimensions;
  return 2.0 * (d.x() * d.y() + d.x() * d.z() + d.y() * d.z());
}

void RoomSpec::Validate(double margin) const {
  if ((dimensions.array() <= 0.0).any() || !(rt60_s > 0.0) || !(speed_of_sound > 0.0)) {
    throw ValidationError("room dimensions, RT60 and speed of sound must be positive");
  }
  auto inside = [&](const Eigen::Vector3d& p) {
    return (p.array() >= margin).all() && ((dimensions - p).array() >= margin).all();
  };
  if (!inside(array_position)) throw ValidationError("array position violates the wall margin");
  for (const auto& s : sources) {
    if (!inside(s)) throw ValidationError("source position violates the wall margin");
  }
}

RoomSpec SampleRoom(Rng& rng, const RoomSamplerConfig& config) {
  if (config.rt60_min_s <= 0 || config.rt60_min_s > config.rt60_max_s ||
      config.min_sources < 1 || config.min_sources > config.max_sources ||
      (config.min_dimensions.array() > config.max_dimensions.array()).any()) {
    throw ValidationError("invalid room sampler ranges");
  }
  RoomSpec room;
  room.rt60_s = rng.Uniform(config.rt60_min_s, config.rt60_max_s);
  for (int i = 0; i < 3; ++i) {
    room.dimensions[i] = rng.Uniform(config.min_dimensions[i], config.max_dimensions[i]);
  }
  const double m = config.wall_margin;
  if ((room.dimensions.array() <= 2.0 * m).any()) {
    throw SamplingError("room too small for the wall margin");
  }
  auto position = [&] {
    Eigen::Vector3d p;
    for (int i = 0; i < 3; ++i) p[i] = rng.Uniform(m, room.dimensions[i] - m);
    return p;
  };
  room.array_position = position();
  const int count = rng.UniformInt(config.min_sources, config.max_sources);
  int attempts = 0;
  while (static_cast<int>(room.sources.size()) < count) {
    if (++attempts > config.max_attempts) {
      throw SamplingError("no valid source position after " +
                          std::to_string(config.max_attempts) + " attempts");
    }
    const Eigen::Vector3d p = position();
    if ((p - room.array_position).norm() >= config.min_source_distance) room.sources.push_back(p);
  }
  return room;
}

double WallAbsorption(const RoomSpec& room, AbsorptionModel model) {
  const double sabine = 0.161 * room.Volume() / (room.SurfaceArea() * room.rt60_s);
  const double alpha = model == AbsorptionModel::kSabine ? sabine : 1.0 - std::exp(-sabine);
  return std::min(alpha, 0.999);
}

namespace {

// Image coordinate and reflection count for index p along one axis.
inline double ImageCoordinate(int p, double length, double x) {
  return (p % 2 == 0) ? p * length + x : (p + 1) * length - x;
}

}  // namespace

std::vector<ImageSource> EnumerateImages(const RoomSpec& room, const Eigen::Vector3d& source,
                                         const Eigen::Vector3d& receiver, double beta,
                                         int max_order) {
  std::vector<ImageSource> images;
  const Eigen::Vector3d& d = room.dimensions;
  for (int px = -max_order; px <= max_order; ++px) {
    const int rx = max_order - std::abs(px);
    for (int py = -rx; py <= rx; ++py) {
      const int rz = rx - std::abs(py);
      for (int pz = -rz; pz <= rz; ++pz) {
        ImageSource img;
        img.position = {ImageCoordinate(px, d.x(), source.x()),
                        ImageCoordinate(py, d.y(), source.y()),
                        ImageCoordinate(pz, d.z(), source.z())};
        img.order = std::abs(px) + std::abs(py) + std::abs(pz);
        img.distance = (img.position - receiver).norm();
        img.amplitude = std::pow(beta, img.order) / std::max(img.distance, 1e-3);
        images.push_back(img);
      }
    }
  }
  return images;
}

int AutoMaxOrder(const RoomSpec& room, const Eigen::Vector3d& source, double beta) {
  constexpr int kCap = 30;
  const double d0 = std::max((source - room.array_position).norm(), 1e-3);
  const double min_dim = room.dimensions.minCoeff();
  for (int k = 1; k <= kCap; ++k) {
    const double att = std::pow(beta, k) * d0 / std::max(d0, (k - 1) * min_dim);
    if (att < 1e-3) return k;
  }
  return kCap;
}

}  // namespace seld::irs
