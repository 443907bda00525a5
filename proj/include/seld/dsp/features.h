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

#ifndef SELD_DSP_FEATURES_H_
#define SELD_DSP_FEATURES_H_

#include <span>
#include <string>
#include <vector>

#include "seld/dsp/stft.h"

namespace seld::dsp {

enum class FeatureKind { kAmplitude, kLogAmplitude, kIpd, kCosIpd, kSinIpd, kPcen };

// Identifies one feature map: its kind and the Ambisonic channel it belongs to.
struct FeatureMapTag {
  FeatureKind kind = FeatureKind::kAmplitude;
  int channel = 0;

  std::string Name() const;  // e.g. "amp0", "ipd2", "pcen3"
  static FeatureMapTag FromName(const std::string& name);
  bool operator==(const FeatureMapTag& other) const = default;
};

// maps x frames x bins real features.
class FeatureTensor {
 public:
  FeatureTensor() = default;
  FeatureTensor(std::vector<FeatureMapTag> layout, int frames, int bins);

  int maps() const { return static_cast<int>(layout_.size()); }
  int frames() const { return frames_; }
  int bins() const { return bins_; }
  const std::vector<FeatureMapTag>& layout() const { return layout_; }

  float& at(int m, int t, int f) { return data_[(static_cast<size_t>(m) * frames_ + t) * bins_ + f]; }
  float at(int m, int t, int f) const {
    return data_[(static_cast<size_t>(m) * frames_ + t) * bins_ + f];
  }
  std::span<float> data() { return data_; }
  std::span<const float> data() const { return data_; }

  // Stacks the maps of several tensors with identical frames/bins.
  static FeatureTensor Concat(std::span<const FeatureTensor> parts);

  bool operator==(const FeatureTensor& other) const = default;

 private:
  std::vector<FeatureMapTag> layout_;
  int frames_ = 0;
  int bins_ = 0;
  std::vector<float> data_;
};

// |x_{t,f,p}| per channel; with `log_amplitude`, log(|x| + 1e-8) instead.
FeatureTensor Amplitude(const SpectralTensor& spec, bool log_amplitude = false);

// Phase of x_ref minus phase of x_q, wrapped to (-pi, pi], for every q != ref.
FeatureTensor Ipd(const SpectralTensor& spec, int ref_channel = 0);

// cos and sin of each IPD map (all cos maps first, then all sin maps).
FeatureTensor CosSinIpd(const SpectralTensor& spec, int ref_channel = 0);

struct PcenConfig {
  double smoother = 0.04;  // s in M_t = (1 - s) M_{t-1} + s E_t
  double alpha = 0.98;
  double delta = 2.0;
  double root = 0.5;
  double eps = 1e-6;
};

// Per-channel energy normalization over the amplitude maps of `amplitude`:
// (E / (eps + M)^alpha + delta)^r - delta^r, with M_0 = E_0.
FeatureTensor Pcen(const FeatureTensor& amplitude, const PcenConfig& config = {});

// Wraps to (-pi, pi].
double WrapPhase(double phase);

}  // namespace seld::dsp

#endif  // SELD_DSP_FEATURES_H_
