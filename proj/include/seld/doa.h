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

#ifndef SELD_DOA_H_
#define SELD_DOA_H_

#include <Eigen/Core>

namespace seld {

// Axis convention: x front, y left, z up. Azimuth is counterclockwise from +x
// in [-180, 180), elevation in [-90, 90].
struct AzEl {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
};

// Unit direction of arrival.
class Doa {
 public:
  Doa() : v_(1.0, 0.0, 0.0) {}

  // Normalizes `v`. Throws DomainError if |v| == 0 or not finite.
  static Doa FromVector(const Eigen::Vector3d& v);
  static Doa FromAzEl(double azimuth_deg, double elevation_deg);

  const Eigen::Vector3d& vector() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

  AzEl ToAzEl() const;

 private:
  explicit Doa(const Eigen::Vector3d& unit) : v_(unit) {}
  Eigen::Vector3d v_;
};

inline Doa AzElToVec(double azimuth_deg, double elevation_deg) {
  return Doa::FromAzEl(azimuth_deg, elevation_deg);
}

// Inverse of AzElToVec for any non-zero vector. At the poles the azimuth is
// reported as 0. Throws DomainError for a zero vector.
AzEl VecToAzEl(const Eigen::Vector3d& v);

// Great-circle angle in degrees, in [0, 180].
double AngularDistanceDeg(const Doa& u, const Doa& v);
double AngularDistanceDeg(const Eigen::Vector3d& u, const Eigen::Vector3d& v);

// Wraps into [-180, 180).
double WrapAzimuthDeg(double azimuth_deg);
int WrapAzimuthDeg(int azimuth_deg);

constexpr double kPi = 3.14159265358979323846;
constexpr double DegToRad(double deg) { return deg * kPi / 180.0; }
constexpr double RadToDeg(double rad) { return rad * 180.0 / kPi; }

}  // namespace seld

#endif  // SELD_DOA_H_
