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

#ifndef SELD_AUGMENT_H_
#define SELD_AUGMENT_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seld/dsp/features.h"
#include "seld/event_list.h"
#include "seld/foa_clip.h"
#include "seld/random.h"

namespace seld {

struct LabeledClip {
  FoaClip clip;
  EventList events;
};

struct EmdaConfig {
  int max_mixed_events = 2;  // never more than two
  double gain_db_min = -12.0;
  double gain_db_max = 0.0;
  // Delay in samples, uniform in [delay_min, delay_max]; a negative maximum
  // means "up to the clip length".
  long long delay_min = 0;
  long long delay_max = -1;
  double eq_freq_min_hz = 100.0;
  double eq_freq_max_hz = 8000.0;
  double eq_gain_db_min = -6.0;
  double eq_gain_db_max = 6.0;
  double eq_q = 1.0;
  double label_hop_s = kDefaultLabelHopSeconds;

  // Throws ValidationError on inverted ranges or max_mixed_events outside [0, 2].
  void Validate() const;
};

// Processing applied to one extra before it is added to the base.
struct EmdaExtraParams {
  double gain = 1.0;  // linear; 0 drops the extra and its labels
  long long delay_samples = 0;
  double eq_freq_hz = 1000.0;
  double eq_gain_db = 0.0;
  double eq_q = 1.0;
};

std::vector<EmdaExtraParams> SampleEmdaParams(Rng& rng, const EmdaConfig& config, size_t extras,
                                              size_t clip_samples);

// Deterministic mix: each extra is EQ-filtered (same biquad on all four
// channels), scaled, delayed and truncated at the end of the base clip. Its
// labels move by round(delay / label_hop) frames, lose frames beyond the clip
// and get track ids past those already present.
LabeledClip ApplyEmda(const LabeledClip& base, std::span<const LabeledClip> extras,
                      std::span<const EmdaExtraParams> params, const EmdaConfig& config = {});

// Samples parameters from `rng` and mixes. More extras than
// config.max_mixed_events is a ValidationError.
LabeledClip Emda(const LabeledClip& base, std::span<const LabeledClip> extras, Rng& rng,
                 const EmdaConfig& config = {});

// Second-order peaking equalizer (RBJ cookbook), normalized so a0 = 1.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0, a1 = 0.0, a2 = 0.0;
  static Biquad Peaking(double sample_rate, double freq_hz, double gain_db, double q);
  // Direct form I over the whole signal, zero initial state.
  Signal Process(std::span<const float> x) const;
};

struct SpecAugmentConfig {
  int max_time_masks = 2;
  int max_time_width = 64;
  int max_freq_masks = 2;
  int max_freq_width = 16;
  double channel_mask_prob = 0.1;

  void Validate() const;
};

struct SpecAugmentMasks {
  std::vector<std::pair<int, int>> time;  // (start frame, width)
  std::vector<std::pair<int, int>> freq;  // (start bin, width)
  std::optional<int> channel;             // Ambisonic channel whose maps are zeroed
};

SpecAugmentMasks SampleMasks(Rng& rng, const SpecAugmentConfig& config,
                             const dsp::FeatureTensor& features);

// Hard masking: masked cells become 0, everything else is copied bit for bit.
dsp::FeatureTensor ApplyMasks(const dsp::FeatureTensor& features, const SpecAugmentMasks& masks);

dsp::FeatureTensor SpecAugmentMc(const dsp::FeatureTensor& features, Rng& rng,
                                 const SpecAugmentConfig& config = {});

}  // namespace seld

#endif  // SELD_AUGMENT_H_
