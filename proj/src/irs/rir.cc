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

#include "seld/irs/rir.h"

#include <cmath>
#include <optional>

#include <unsupported/Eigen/FFT>

#include "seld/dsp/stft.h"
#include "seld/errors.h"
#include "seld/irs/sphere.h"
#include "seld/logging.h"

namespace seld::irs {

void AddFractionalImpulse(std::span<double> out, double delay, double amplitude, int taps) {
  const long long base = static_cast<long long>(std::floor(delay));
  const double frac = delay - static_cast<double>(base);
  const int half = taps / 2;
  for (int k = -half + 1; k <= half; ++k) {
    const long long idx = base + k;
    if (idx < 0 || idx >= static_cast<long long>(out.size())) continue;
    const double t = k - frac;
    const double sinc = t == 0.0 ? 1.0 : std::sin(kPi * t) / (kPi * t);
    // Hann window spanning (-half, half).
    const double w = 0.5 * (1.0 + std::cos(kPi * t / half));
    out[idx] += amplitude * sinc * w;
  }
}

size_t RirLength(std::span<const ImageSource> images, double speed_of_sound, int sample_rate) {
  double max_delay = 0.0;
  for (const auto& img : images) max_delay = std::max(max_delay, img.distance / speed_of_sound);
  return static_cast<size_t>(
      dsp::NextPowerOfTwo(static_cast<int>(std::ceil(max_delay * sample_rate)) + 256));
}

namespace {

struct SourceImages {
  std::vector<ImageSource> images;
  size_t length = 0;
  int max_order = 0;
};

SourceImages PrepareImages(const RoomSpec& room, int source_index, const SimulationConfig& config) {
  room.Validate(0.0);
  if (source_index < 0 || source_index >= static_cast<int>(room.sources.size())) {
    throw RangeError("source index out of range");
  }
  const Eigen::Vector3d& src = room.sources[source_index];
  const double beta = ReflectionCoefficient(WallAbsorption(room, config.absorption));
  SourceImages out;
  out.max_order = config.max_order >= 0 ? config.max_order : AutoMaxOrder(room, src, beta);
  out.images = EnumerateImages(room, src, room.array_position, beta, out.max_order);
  out.length = RirLength(out.images, room.speed_of_sound, config.sample_rate);
  return out;
}

}  // namespace

AudioBuffer SimulateCapsuleRirs(const RoomSpec& room, int source_index, const ArrayModel& array,
                                const SimulationConfig& config) {
  array.Validate();
  const SourceImages prep = PrepareImages(room, source_index, config);
  const int order = std::max(config.sphere_order, array.order);
  const int sh = ShCount(order);
  const size_t len = prep.length;
  const double fs = config.sample_rate;

  // Spherical-harmonic domain impulse responses of the incident field.
  std::vector<std::vector<double>> sh_ir(sh, std::vector<double>(len, 0.0));
  std::vector<double> kernel(len, 0.0);
  for (const ImageSource& img : prep.images) {
    const Eigen::Vector3d u = (img.position - room.array_position) / img.distance;
    const Eigen::VectorXd y = RealSphericalHarmonics(order, u);
    const double delay = img.distance / room.speed_of_sound * fs;
    const long long base = static_cast<long long>(std::floor(delay));
    const int half = config.fractional_delay_taps / 2;
    // Kernel taps once, then scattered into every SH channel.
    std::fill(kernel.begin(), kernel.end(), 0.0);
    AddFractionalImpulse(kernel, delay, img.amplitude, config.fractional_delay_taps);
    const long long lo = std::max<long long>(0, base - half + 1);
    const long long hi = std::min<long long>(static_cast<long long>(len) - 1, base + half);
    for (int c = 0; c < sh; ++c) {
      const double g = y[c];
      double* dst = sh_ir[c].data();
      for (long long i = lo; i <= hi; ++i) dst[i] += g * kernel[i];
    }
  }

  Eigen::MatrixXd ycap(array.size(), sh);
  for (int q = 0; q < array.size(); ++q) {
    ycap.row(q) = RealSphericalHarmonics(order, array.capsules[q]).transpose();
  }

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  const int nfft = static_cast<int>(len);
  const int bins = nfft / 2 + 1;
  Eigen::MatrixXcd s(sh, bins);
  std::vector<std::complex<double>> spec;
  for (int c = 0; c < sh; ++c) {
    fft.fwd(spec, sh_ir[c]);
    for (int f = 0; f < bins; ++f) s(c, f) = spec[f];
  }

  int clamped = 0;
  Eigen::VectorXcd b(order + 1);
  Eigen::MatrixXcd p(array.size(), bins);
  for (int f = 0; f < bins; ++f) {
    const double x = 2.0 * kPi * f * fs / nfft * array.radius / room.speed_of_sound;
    for (int n = 0; n <= order; ++n) {
      b[n] = RigidSphereModeStrength(n, x);
      if (!std::isfinite(b[n].real()) || !std::isfinite(b[n].imag())) {
        b[n] = 0.0;
        ++clamped;
      }
    }
    Eigen::VectorXcd weighted(sh);
    for (int n = 0; n <= order; ++n) {
      for (int m = -n; m <= n; ++m) weighted[Acn(n, m)] = b[n] * s(Acn(n, m), f);
    }
    p.col(f) = ycap.cast<std::complex<double>>() * weighted;
  }
  if (clamped > 0) {
    Log().warn("stage=irs msg=\"mode strength out of range, clamped\" count={}", clamped);
  }

  AudioBuffer out;
  out.sample_rate = config.sample_rate;
  out.channels.resize(array.size());
  std::vector<std::complex<double>> half(bins);
  std::vector<double> time;
  for (int q = 0; q < array.size(); ++q) {
    for (int f = 0; f < bins; ++f) half[f] = p(q, f);
    half[0] = half[0].real();
    half[bins - 1] = half[bins - 1].real();
    fft.inv(time, half, nfft);
    out.channels[q].assign(time.begin(), time.begin() + len);
  }
  return out;
}

FoaClip SimulateDirectFoaRir(const RoomSpec& room, int source_index,
                             const SimulationConfig& config) {
  const SourceImages prep = PrepareImages(room, source_index, config);
  const size_t len = prep.length;
  std::array<std::vector<double>, kFoaChannels> acc;
  for (auto& ch : acc) ch.assign(len, 0.0);
  std::vector<double> kernel(len, 0.0);
  const int half = config.fractional_delay_taps / 2;
  for (const ImageSource& img : prep.images) {
    const Eigen::Vector3d u = (img.position - room.array_position) / img.distance;
    const double delay = img.distance / room.speed_of_sound * config.sample_rate;
    const long long base = static_cast<long long>(std::floor(delay));
    std::fill(kernel.begin(), kernel.end(), 0.0);
    AddFractionalImpulse(kernel, delay, img.amplitude, config.fractional_delay_taps);
    const double gains[kFoaChannels] = {1.0, u.y(), u.z(), u.x()};
    const long long lo = std::max<long long>(0, base - half + 1);
    const long long hi = std::min<long long>(static_cast<long long>(len) - 1, base + half);
    for (int c = 0; c < kFoaChannels; ++c) {
      for (long long i = lo; i <= hi; ++i) acc[c][i] += gains[c] * kernel[i];
    }
  }
  std::array<Signal, kFoaChannels> out;
  for (int c = 0; c < kFoaChannels; ++c) out[c].assign(acc[c].begin(), acc[c].end());
  return FoaClip(config.sample_rate, std::move(out));
}

FoaRirSet SimulateFoaRirs(const RoomSpec& room, const ArrayModel& array, RirMode mode,
                          const SimulationConfig& config) {
  FoaRirSet set;
  set.sample_rate = config.sample_rate;
  set.room = room;
  std::optional<FoaEncoder> encoder;
  if (mode == RirMode::kEigenmike) encoder.emplace(array, config.encoder);
  for (size_t i = 0; i < room.sources.size(); ++i) {
    const Eigen::Vector3d rel = room.sources[i] - room.array_position;
    set.doas.push_back(Doa::FromVector(rel));
    set.direct_delay_samples.push_back(rel.norm() / room.speed_of_sound * config.sample_rate);
    if (mode == RirMode::kEigenmike) {
      set.rirs.push_back(
          encoder->Encode(SimulateCapsuleRirs(room, static_cast<int>(i), array, config)));
    } else {
      set.rirs.push_back(SimulateDirectFoaRir(room, static_cast<int>(i), config));
    }
  }
  return set;
}

}  // namespace seld::irs
