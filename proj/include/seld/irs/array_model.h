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

#ifndef SELD_IRS_ARRAY_MODEL_H_
#define SELD_IRS_ARRAY_MODEL_H_

#include <complex>
#include <filesystem>
#include <vector>

#include <Eigen/Core>

#include "seld/foa_clip.h"

namespace seld::irs {

// Rigid spherical baffle with omnidirectional capsules on its surface.
struct ArrayModel {
  double radius = 0.042;
  std::vector<Eigen::Vector3d> capsules;  // unit vectors
  int order = 4;                          // spherical-harmonic encoding order

  int size() const { return static_cast<int>(capsules.size()); }
  // Throws ConfigError unless Q >= (N+1)^2, radius > 0 and the capsule
  // directions are distinct unit vectors.
  void Validate() const;

  // 32-capsule layout, radius 4.2 cm, order 4.
  static ArrayModel Em32();
  // CSV rows `capsule,azimuth_deg,colatitude_deg`; '#' lines are comments.
  static ArrayModel FromLayoutCsv(const std::filesystem::path& path, double radius = 0.042,
                                  int order = 4);
};

struct EncoderConfig {
  // Soft limit on the radial equalizer gain, relative to the order-0 gain at
  // DC.
  double max_gain_db = 60.0;
  int limiter_sharpness = 8;
  double speed_of_sound = 343.0;
};

// Capsule pressure -> FOA (ACN/SN3D). Per frequency: least-squares SH
// coefficients with pinv(Y), orders 0-1 kept, divided by the rigid-sphere
// mode strength under a soft gain limit, rescaled to SN3D.
class FoaEncoder {
 public:
  // Throws ConfigError when cond(Y) > 1e6.
  FoaEncoder(const ArrayModel& array, EncoderConfig config = {});

  // Capsule impulse responses (Q channels, equal length) -> FOA impulse response.
  FoaClip Encode(const AudioBuffer& capsule_rirs) const;

  // Radial equalizer for order n at frequency `hz` (1 / b_n, soft-limited).
  std::complex<double> RadialFilter(int n, double hz) const;
  double condition_number() const { return condition_; }

 private:
  ArrayModel array_;
  EncoderConfig config_;
  Eigen::MatrixXd first_order_pinv_;  // 4 x Q rows of pinv(Y)
  double condition_ = 0.0;
};

inline FoaClip EncodeFoa(const AudioBuffer& capsule_rirs, const ArrayModel& array,
                         const EncoderConfig& config = {}) {
  return FoaEncoder(array, config).Encode(capsule_rirs);
}

}  // namespace seld::irs

#endif  // SELD_IRS_ARRAY_MODEL_H_
