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

#ifndef SELD_SPATIAL_H_
#define SELD_SPATIAL_H_

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "seld/accdoa.h"
#include "seld/doa.h"
#include "seld/event_list.h"
#include "seld/foa_clip.h"

namespace seld {

// Orthogonal 3x3 transform of (x, y, z); reflections are allowed.
class FoaRotation {
 public:
  FoaRotation() : m_(Eigen::Matrix3d::Identity()) {}
  // Throws ValidationError unless R^T R = I within 1e-9.
  static FoaRotation FromMatrix(const Eigen::Matrix3d& m);
  static FoaRotation Identity() { return {}; }
  // Counterclockwise rotation about +z by quarter_turns * 90 degrees.
  static FoaRotation YawQuarterTurns(int quarter_turns);
  static FoaRotation ReflectY();
  static FoaRotation FlipZ();

  const Eigen::Matrix3d& matrix() const { return m_; }
  double Determinant() const { return m_.determinant(); }
  FoaRotation Inverse() const;
  // (a * b) applies b first, then a.
  FoaRotation operator*(const FoaRotation& other) const;
  bool operator==(const FoaRotation& other) const { return m_ == other.m_; }
  bool ApproxEqual(const FoaRotation& other, double tol = 1e-12) const;

 private:
  explicit FoaRotation(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

// W passes through; the dipole triple (X, Y, Z) is mapped by R per sample.
FoaClip RotateFoa(const FoaClip& clip, const FoaRotation& rotation);

// DOAs mapped through R and re-quantized to integer degrees.
EventList RotateLabels(const EventList& events, const FoaRotation& rotation);

// Every ACCDOA vector mapped through R; no quantization.
AccdoaGrid RotateGrid(const AccdoaGrid& grid, const FoaRotation& rotation);

// Yaw {0, 90, 180, 270} x azimuth reflection (y -> -y) x elevation flip
// (z -> -z). Index = yaw + 4 * reflect + 8 * flip, so index 0 is identity.
std::vector<FoaRotation> DiscreteRotationSet();

// `all16`, `identity` or `list:<i>,<j>,...` (indices into the discrete set).
std::vector<FoaRotation> ParseRotationSpec(std::string_view spec);

using GridModel = std::function<AccdoaGrid(const FoaClip&)>;

// Mean over rotations R of R^-1 * model(RotateFoa(clip, R)). With jobs > 1 the
// model is evaluated concurrently and must be reentrant; the reduction order
// is fixed so the result does not depend on `jobs`.
AccdoaGrid TtaAverage(const GridModel& model, const FoaClip& clip,
                      std::span<const FoaRotation> rotations, int jobs = 1);

// SN3D plane wave carrying `signal` from `direction`.
FoaClip EncodePlaneWave(std::span<const float> signal, int sample_rate, const Doa& direction);

}  // namespace seld

#endif  // SELD_SPATIAL_H_
