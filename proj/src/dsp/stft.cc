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

#include "seld/dsp/stft.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "seld/errors.h"

namespace seld::dsp {

StftConfig StftConfig::ForSampleRate(int sample_rate) {
  StftConfig c;
  c.frame_length = static_cast<int>(std::lround(sample_rate * 0.020));
  c.hop = static_cast<int>(std::lround(sample_rate * 0.010));
  c.fft_size = NextPowerOfTwo(c.frame_length);
  return c;
}

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> MakeWindow(WindowType type, int length) {
  std::vector<double> w(length, 1.0);
  if (type == WindowType::kHann) {
    for (int n = 0; n < length; ++n) {
      w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / length);
    }
  }
  return w;
}

SpectralTensor::SpectralTensor(int channels, int frames, const StftConfig& config, int sample_rate,
                               size_t signal_length)
    : channels_(channels),
      frames_(frames),
      bins_(config.bins()),
      config_(config),
      sample_rate_(sample_rate),
      signal_length_(signal_length),
      data_(static_cast<size_t>(channels) * frames * config.bins()) {}

void ValidateStftConfig(const StftConfig& config) {
  if (config.hop <= 0 || config.frame_length < config.hop) {
    throw ConfigError("STFT requires frame_length >= hop > 0");
  }
  if (config.fft_size < config.frame_length) {
    throw ConfigError("STFT fft_size must be at least frame_length");
  }
}

int StftFrameCount(size_t length, const StftConfig& config) {
  if (length < static_cast<size_t>(config.frame_length)) return 0;
  const size_t padded = config.center ? length + 2 * (config.frame_length / 2) : length;
  return static_cast<int>((padded - config.frame_length) / config.hop) + 1;
}

namespace {

// Reflect padding without repeating the edge sample (numpy "reflect").
double PaddedSample(std::span<const float> x, long long i) {
  const long long n = static_cast<long long>(x.size());
  if (n == 1) return x[0];
  const long long period = 2 * (n - 1);
  long long k = i % period;
  if (k < 0) k += period;
  if (k >= n) k = period - k;
  return x[static_cast<size_t>(k)];
}

}  // namespace

SpectralTensor Stft(std::span<const Signal> channels, int sample_rate, const StftConfig& config) {
  ValidateStftConfig(config);
  const size_t length = channels.empty() ? 0 : channels[0].size();
  const int frames = StftFrameCount(length, config);
  SpectralTensor spec(static_cast<int>(channels.size()), frames, config, sample_rate, length);
  if (frames == 0) return spec;

  const std::vector<double> window = MakeWindow(config.window, config.frame_length);
  const long long offset = config.center ? config.frame_length / 2 : 0;
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  std::vector<double> buf(config.fft_size, 0.0);
  std::vector<std::complex<double>> out;
  for (size_t c = 0; c < channels.size(); ++c) {
    std::span<const float> x = channels[c];
    for (int t = 0; t < frames; ++t) {
      const long long start = static_cast<long long>(t) * config.hop - offset;
      std::fill(buf.begin(), buf.end(), 0.0);
      for (int n = 0; n < config.frame_length; ++n) {
        const long long i = start + n;
        const double v = (i >= 0 && i < static_cast<long long>(length)) ? x[i] : PaddedSample(x, i);
        buf[n] = v * window[n];
      }
      fft.fwd(out, buf);
      std::copy(out.begin(), out.begin() + spec.bins(), spec.frame(static_cast<int>(c), t).begin());
    }
  }
  return spec;
}

SpectralTensor Stft(const FoaClip& clip, const StftConfig& config) {
  return Stft(std::span<const Signal>(clip.channels()), clip.sample_rate(), config);
}

std::vector<Signal> Istft(const SpectralTensor& spec) {
  const StftConfig& config = spec.config();
  ValidateStftConfig(config);
  const std::vector<double> window = MakeWindow(config.window, config.frame_length);

  // Steady-state coverage: every residue modulo hop must receive window energy.
  double min_cover = std::numeric_limits<double>::infinity();
  double max_cover = 0;
  for (int r = 0; r < config.hop; ++r) {
    double s = 0;
    for (int n = r; n < config.frame_length; n += config.hop) s += window[n] * window[n];
    min_cover = std::min(min_cover, s);
    max_cover = std::max(max_cover, s);
  }
  if (!(min_cover > 1e-10 * max_cover)) {
    throw ConfigError("window/hop pair does not overlap-add to a positive sum");
  }

  const int frames = spec.frames();
  const long long offset = config.center ? config.frame_length / 2 : 0;
  size_t out_len = spec.signal_length();
  if (out_len == 0 && frames > 0) {
    const size_t full = static_cast<size_t>(frames - 1) * config.hop + config.frame_length;
    out_len = full > static_cast<size_t>(2 * offset) ? full - 2 * offset : 0;
  }
  std::vector<Signal> result(spec.channels(), Signal(out_len, 0.0f));
  if (frames == 0) return result;

  const size_t total = static_cast<size_t>(frames - 1) * config.hop + config.frame_length;
  std::vector<double> norm(total, 0.0);
  for (int t = 0; t < frames; ++t) {
    for (int n = 0; n < config.frame_length; ++n) {
      norm[static_cast<size_t>(t) * config.hop + n] += window[n] * window[n];
    }
  }

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  std::vector<std::complex<double>> half(spec.bins());
  std::vector<double> frame;
  std::vector<double> acc(total);
  for (int c = 0; c < spec.channels(); ++c) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int t = 0; t < frames; ++t) {
      auto bins = spec.frame(c, t);
      std::copy(bins.begin(), bins.end(), half.begin());
      // The DC and Nyquist bins of a real signal are real.
      half.front() = half.front().real();
      half.back() = half.back().real();
      fft.inv(frame, half, config.fft_size);
      for (int n = 0; n < config.frame_length; ++n) {
        acc[static_cast<size_t>(t) * config.hop + n] += frame[n] * window[n];
      }
    }
    for (size_t i = 0; i < out_len; ++i) {
      const size_t j = i + static_cast<size_t>(offset);
      if (j < total && norm[j] > 1e-10 * max_cover) {
        result[c][i] = static_cast<float>(acc[j] / norm[j]);
      }
    }
  }
  return result;
}

}  // namespace seld::dsp
