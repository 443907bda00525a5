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

#include "seld/doa.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Geometry>

#include "seld/errors.h"

namespace seld {

Doa Doa::FromVector(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("direction of a zero or non-finite vector");
  }
  return Doa(v / n);
}

Doa Doa::FromAzEl(double azimuth_deg, double elevation_deg) {
  const double az = DegToRad(azimuth_deg);
  const double el = DegToRad(elevation_deg);
  return Doa(Eigen::Vector3d(std::cos(el) * std::cos(az), std::cos(el) * std::sin(az),
                             std::sin(el)));
}

AzEl Doa::ToAzEl() const { return VecToAzEl(v_); }

AzEl VecToAzEl(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("azimuth/elevation of a zero or non-finite vector");
  }
  const double horizontal = std::hypot(v.x(), v.y());
  AzEl out;
  out.elevation_deg = RadToDeg(std::atan2(v.z(), horizontal));
  if (horizontal <= 1e-12 * n) {
    out.azimuth_deg = 0.0;
    out.elevation_deg = v.z() > 0 ? 90.0 : -90.0;
  } else {
    out.azimuth_deg = WrapAzimuthDeg(RadToDeg(std::atan2(v.y(), v.x())));
  }
  return out;
}

double AngularDistanceDeg(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  // atan2 stays accurate near 0 and 180 degrees, unlike acos of the dot product.
  return RadToDeg(std::atan2(u.cross(v).norm(), u.dot(v)));
}

double AngularDistanceDeg(const Doa& u, const Doa& v) {
  return AngularDistanceDeg(u.vector(), v.vector());
}

double WrapAzimuthDeg(double azimuth_deg) {
  double a = std::fmod(azimuth_deg + 180.0, 360.0);
  if (a < 0) a += 360.0;
  a -= 180.0;
  // fmod can land exactly on 180 after the shift for inputs like -180 - eps.
  if (a >= 180.0) a -= 360.0;
  return a;
}

int WrapAzimuthDeg(int azimuth_deg) {
  int a = (azimuth_deg + 180) % 360;
  if (a < 0) a += 360;
  return a - 180;
}

}  // namespace seld
