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

#ifndef SELD_IRS_SPHERE_H_
#define SELD_IRS_SPHERE_H_

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace seld::irs {

// Number of spherical harmonics up to and including `order`.
constexpr int ShCount(int order) { return (order + 1) * (order + 1); }
// Ambisonic channel number of (n, m).
constexpr int Acn(int n, int m) { return n * n + n + m; }

// Real orthonormal spherical harmonics (no Condon-Shortley phase) up to
// `order` in ACN order, evaluated at unit direction `u`. Y_1 is proportional
// to (y, z, x).
Eigen::VectorXd RealSphericalHarmonics(int order, const Eigen::Vector3d& u);

// Spherical Bessel/Neumann functions and derivatives.
double SphBesselJ(int n, double x);
double SphBesselY(int n, double x);
double SphBesselJPrime(int n, double x);
double SphBesselYPrime(int n, double x);
// Spherical Hankel function of the second kind, h = j - i y. Outgoing waves
// under the forward transform convention X(w) = sum x(t) exp(-i w t).
std::complex<double> SphHankel2(int n, double x);
std::complex<double> SphHankel2Prime(int n, double x);

// Rigid-sphere mode strength 4 pi i^n (j_n - j_n'/h_n' h_n) at x = k a.
// Evaluated through the Wronskian as -4 pi i^(n+1) / (x^2 h_n'(x)), with
// the leading small-argument term 4 pi i^n x^n / ((n+1) (2n-1)!!) below
// x = 1e-4. b_0(0) = 4 pi and b_n(0) = 0 for n > 0.
std::complex<double> RigidSphereModeStrength(int n, double x);

}  // namespace seld::irs

#endif  // SELD_IRS_SPHERE_H_
