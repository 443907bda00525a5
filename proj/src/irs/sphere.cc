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

#include "seld/irs/sphere.h"

#include <algorithm>
#include <cmath>

#include "seld/doa.h"

namespace seld::irs {

Eigen::VectorXd RealSphericalHarmonics(int order, const Eigen::Vector3d& u) {
  Eigen::VectorXd y(ShCount(order));
  const double norm = u.norm();
  const double cos_theta = std::clamp(u.z() / norm, -1.0, 1.0);
  const double phi = std::atan2(u.y(), u.x());
  for (int n = 0; n <= order; ++n) {
    for (int m = -n; m <= n; ++m) {
      const int am = std::abs(m);
      // (n - |m|)! / (n + |m|)!
      const double ratio = std::exp(std::lgamma(n - am + 1.0) - std::lgamma(n + am + 1.0));
      const double k = std::sqrt((2.0 * n + 1.0) / (4.0 * kPi) * ratio);
      const double p = std::assoc_legendre(n, am, cos_theta);
      double v = k * p;
      if (m > 0) v *= std::sqrt(2.0) * std::cos(am * phi);
      if (m < 0) v *= std::sqrt(2.0) * std::sin(am * phi);
      y[Acn(n, m)] = v;
    }
  }
  return y;
}

double SphBesselJ(int n, double x) { return std::sph_bessel(n, x); }
double SphBesselY(int n, double x) { return std::sph_neumann(n, x); }

double SphBesselJPrime(int n, double x) {
  if (n == 0) return -SphBesselJ(1, x);
  return SphBesselJ(n - 1, x) - (n + 1.0) / x * SphBesselJ(n, x);
}

double SphBesselYPrime(int n, double x) {
  if (n == 0) return -SphBesselY(1, x);
  return SphBesselY(n - 1, x) - (n + 1.0) / x * SphBesselY(n, x);
}

std::complex<double> SphHankel2(int n, double x) { return {SphBesselJ(n, x), -SphBesselY(n, x)}; }

std::complex<double> SphHankel2Prime(int n, double x) {
  return {SphBesselJPrime(n, x), -SphBesselYPrime(n, x)};
}

namespace {

std::complex<double> IPow(int n) {
  static const std::complex<double> kUnit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kUnit[((n % 4) + 4) % 4];
}

}  // namespace

std::complex<double> RigidSphereModeStrength(int n, double x) {
  if (x < 1e-4) {
    double dfact = 1.0;  // (2n-1)!!
    for (int k = 2 * n - 1; k > 1; k -= 2) dfact *= k;
    return 4.0 * kPi * IPow(n) * std::pow(x, n) / ((n + 1.0) * dfact);
  }
  const std::complex<double> hp = SphHankel2Prime(n, x);
  return -4.0 * kPi * IPow(n + 1) / (x * x * hp);
}

}  // namespace seld::irs
