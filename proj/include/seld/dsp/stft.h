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

#ifndef SELD_DSP_STFT_H_
#define SELD_DSP_STFT_H_

#include <complex>
#include <span>
#include <vector>

#include "seld/foa_clip.h"

namespace seld::dsp {

enum class WindowType { kHann, kRectangular };

struct StftConfig {
  int frame_length = 480;  // 20 ms at 24 kHz
  int hop = 240;           // 10 ms at 24 kHz
  int fft_size = 512;      // next power of two >= frame_length; zero-padded
  WindowType window = WindowType::kHann;
  // Reflect-pad frame_length / 2 samples on both ends so frame t is centered
  // on sample t * hop.
  bool center = true;

  int bins() const { return fft_size / 2 + 1; }

  // 20 ms frames and 10 ms hop at `sample_rate`.
  static StftConfig ForSampleRate(int sample_rate);
};

// Periodic window of `length` samples.
std::vector<double> MakeWindow(WindowType type, int length);

int NextPowerOfTwo(int n);

// channels x frames x bins complex STFT coefficients.
class SpectralTensor {
 public:
  SpectralTensor() = default;
  SpectralTensor(int channels, int frames, const StftConfig& config, int sample_rate,
                 size_t signal_length);

  int channels() const { return channels_; }
  int frames() const { return frames_; }
  int bins() const { return bins_; }
  const StftConfig& config() const { return config_; }
  int sample_rate() const { return sample_rate_; }
  // Length of the analysed signal; Istft reproduces this many samples.
  size_t signal_length() const { return signal_length_; }
  bool empty() const { return frames_ == 0; }

  std::complex<double>& at(int c, int t, int f) {
    return data_[(static_cast<size_t>(c) * frames_ + t) * bins_ + f];
  }
  const std::complex<double>& at(int c, int t, int f) const {
    return data_[(static_cast<size_t>(c) * frames_ + t) * bins_ + f];
  }
  // Contiguous bins of one frame.
  std::span<std::complex<double>> frame(int c, int t) {
    return {&data_[(static_cast<size_t>(c) * frames_ + t) * bins_], static_cast<size_t>(bins_)};
  }
  std::span<const std::complex<double>> frame(int c, int t) const {
    return {&data_[(static_cast<size_t>(c) * frames_ + t) * bins_], static_cast<size_t>(bins_)};
  }

  double BinFrequency(int f) const {
    return static_cast<double>(f) * sample_rate_ / config_.fft_size;
  }

 private:
  int channels_ = 0;
  int frames_ = 0;
  int bins_ = 0;
  StftConfig config_;
  int sample_rate_ = 0;
  size_t signal_length_ = 0;
  std::vector<std::complex<double>> data_;
};

// Number of frames for a signal of `length` samples; 0 when shorter than one
// frame.
int StftFrameCount(size_t length, const StftConfig& config);

// Throws ConfigError if frame_length < hop, hop <= 0 or fft_size < frame_length.
void ValidateStftConfig(const StftConfig& config);

SpectralTensor Stft(std::span<const Signal> channels, int sample_rate, const StftConfig& config);
SpectralTensor Stft(const FoaClip& clip, const StftConfig& config);

// Weighted overlap-add synthesis normalised by the summed squared window.
// Throws ConfigError when the window/hop pair leaves samples uncovered in
// steady state (the squared windows do not overlap-add to a positive sum).
std::vector<Signal> Istft(const SpectralTensor& spec);

}  // namespace seld::dsp

#endif  // SELD_DSP_STFT_H_
