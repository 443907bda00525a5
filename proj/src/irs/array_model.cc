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

#include "seld/irs/array_model.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "seld/doa.h"
#include "seld/errors.h"
#include "seld/irs/sphere.h"

namespace seld::irs {

namespace {

Eigen::Vector3d FromAzColat(double az_deg, double colat_deg) {
  const double az = DegToRad(az_deg);
  const double th = DegToRad(colat_deg);
  return {std::sin(th) * std::cos(az), std::sin(th) * std::sin(az), std::cos(th)};
}

// Capsule azimuth / colatitude in degrees.
constexpr double kEm32Layout[32][2] = {
    {0, 69},    {32, 90},   {0, 111},   {328, 90},  {0, 32},    {45, 55},   {69, 90},
    {45, 125},  {0, 148},   {315, 125}, {291, 90},  {315, 55},  {91, 21},   {90, 58},
    {90, 121},  {89, 159},  {180, 69},  {212, 90},  {180, 111}, {148, 90},  {180, 32},
    {225, 55},  {249, 90},  {225, 125}, {180, 148}, {135, 125}, {111, 90},  {135, 55},
    {269, 21},  {270, 58},  {270, 122}, {271, 159}};

}  // namespace

void ArrayModel::Validate() const {
  if (!(radius > 0.0)) throw ConfigError("array radius must be positive");
  if (order < 1) throw ConfigError("encoding order must be at least 1");
  if (size() < ShCount(order)) {
    throw ConfigError("array has " + std::to_string(size()) + " capsules, order " +
                      std::to_string(order) + " needs " + std::to_string(ShCount(order)));
  }
  for (int i = 0; i < size(); ++i) {
    if (std::abs(capsules[i].norm() - 1.0) > 1e-9) throw ConfigError("capsule direction not unit");
    for (int j = 0; j < i; ++j) {
      if ((capsules[i] - capsules[j]).norm() < 1e-9) {
        throw ConfigError("duplicate capsule direction " + std::to_string(i));
      }
    }
  }
}

ArrayModel ArrayModel::Em32() {
  ArrayModel a;
  for (const auto& c : kEm32Layout) a.capsules.push_back(FromAzColat(c[0], c[1]));
  return a;
}

ArrayModel ArrayModel::FromLayoutCsv(const std::filesystem::path& path, double radius, int order) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open array layout " + path.string());
  ArrayModel a;
  a.radius = radius;
  a.order = order;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string idx, az, colat;
    if (!std::getline(ss, idx, ',') || !std::getline(ss, az, ',') || !std::getline(ss, colat)) {
      throw ParseError("expected capsule,azimuth,colatitude", row);
    }
    try {
      a.capsules.push_back(FromAzColat(std::stod(az), std::stod(colat)));
    } catch (const std::logic_error&) {
      throw ParseError("bad number in array layout", row);
    }
  }
  a.Validate();
  return a;
}

FoaEncoder::FoaEncoder(const ArrayModel& array, EncoderConfig config)
    : array_(array), config_(config) {
  array_.Validate();
  Eigen::MatrixXd y(array_.size(), ShCount(array_.order));
  for (int q = 0; q < array_.size(); ++q) {
    y.row(q) = RealSphericalHarmonics(array_.order, array_.capsules[q]).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  condition_ = s[s.size() - 1] > 0 ? s[0] / s[s.size() - 1]
                                   : std::numeric_limits<double>::infinity();
  if (!(condition_ <= 1e6)) {
    throw ConfigError("capsule SH matrix is ill-conditioned (cond " + std::to_string(condition_) +
                      ")");
  }
  const Eigen::MatrixXd pinv =
      svd.matrixV() * s.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
  first_order_pinv_ = pinv.topRows(4);
}

std::complex<double> FoaEncoder::RadialFilter(int n, double hz) const {
  const double x = 2.0 * kPi * hz * array_.radius / config_.speed_of_sound;
  if (x == 0.0) return n == 0 ? 1.0 / (4.0 * kPi) : 0.0;
  const std::complex<double> b = RigidSphereModeStrength(n, x);
  const double gain = 4.0 * kPi / std::abs(b);
  if (!std::isfinite(gain)) return 0.0;
  const double limit = std::pow(10.0, config_.max_gain_db / 20.0);
  const double p = config_.limiter_sharpness;
  const double limited = gain / std::pow(1.0 + std::pow(gain / limit, p), 1.0 / p);
  return (1.0 / b) * (limited / gain);
}

FoaClip FoaEncoder::Encode(const AudioBuffer& capsule_rirs) const {
  if (static_cast<int>(capsule_rirs.channels.size()) != array_.size()) {
    throw ValidationError("expected " + std::to_string(array_.size()) + " capsule channels");
  }
  const size_t len = capsule_rirs.num_samples();
  for (const Signal& ch : capsule_rirs.channels) {
    if (ch.size() != len) throw ValidationError("capsule channels differ in length");
  }
  if (len == 0) return FoaClip(capsule_rirs.sample_rate, 0);
  const int nfft = static_cast<int>(len + (len % 2));
  const int bins = nfft / 2 + 1;

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  Eigen::MatrixXcd spectra(array_.size(), bins);
  std::vector<double> buf(nfft, 0.0);
  std::vector<std::complex<double>> spec;
  for (int q = 0; q < array_.size(); ++q) {
    std::copy(capsule_rirs.channels[q].begin(), capsule_rirs.channels[q].end(), buf.begin());
    fft.fwd(spec, buf);
    for (int f = 0; f < bins; ++f) spectra(q, f) = spec[f];
  }
  const Eigen::MatrixXcd coeffs = first_order_pinv_.cast<std::complex<double>>() * spectra;

  static const double kSn3d[4] = {std::sqrt(4.0 * kPi), std::sqrt(4.0 * kPi / 3.0),
                                  std::sqrt(4.0 * kPi / 3.0), std::sqrt(4.0 * kPi / 3.0)};
  std::array<Signal, kFoaChannels> out;
  std::vector<std::complex<double>> half(bins);
  std::vector<double> time;
  for (int c = 0; c < 4; ++c) {
    const int n = c == 0 ? 0 : 1;
    for (int f = 0; f < bins; ++f) {
      const double hz = static_cast<double>(f) * capsule_rirs.sample_rate / nfft;
      half[f] = kSn3d[c] * coeffs(c, f) * RadialFilter(n, hz);
    }
    half[0] = half[0].real();
    half[bins - 1] = half[bins - 1].real();
    fft.inv(time, half, nfft);
    out[c].assign(time.begin(), time.begin() + len);
  }
  return FoaClip(capsule_rirs.sample_rate, std::move(out));
}

}  // namespace seld::irs
