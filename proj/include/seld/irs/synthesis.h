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

#ifndef SELD_IRS_SYNTHESIS_H_
#define SELD_IRS_SYNTHESIS_H_

#include <span>
#include <vector>

#include "seld/augment.h"
#include "seld/irs/rir.h"
#include "seld/random.h"

namespace seld::irs {

struct SynthesisSource {
  Signal signal;  // mono, at the RIR sample rate
  int class_id = 0;
};

struct SynthesisConfig {
  double gain_db_min = -6.0;
  double gain_db_max = 0.0;
  double peak = 0.9;
  double label_hop_s = kDefaultLabelHopSeconds;
  // A label frame is active when the delayed dry source's frame energy is
  // within this many dB of its loudest frame.
  double activity_db = -40.0;
  int class_count = kDefaultClassCount;
};

// Placement of one source, sampled or given explicitly.
struct SourcePlacement {
  size_t onset = 0;  // samples
  double gain = 1.0;
};

std::vector<SourcePlacement> SamplePlacements(std::span<const SynthesisSource> sources,
                                              size_t clip_samples, Rng& rng,
                                              const SynthesisConfig& config = {});

// Source i is convolved with rirs.rirs[i], scaled and placed at its onset,
// truncated to the clip; the sum is peak-normalized. Labels carry the RIR's
// direct-path DOA on frames where the direct-path-aligned dry source is
// active; track id = source index.
LabeledClip SynthesizeWithPlacements(std::span<const SynthesisSource> sources,
                                     const FoaRirSet& rirs, size_t clip_samples,
                                     std::span<const SourcePlacement> placements,
                                     const SynthesisConfig& config = {});

LabeledClip Synthesize(std::span<const SynthesisSource> sources, const FoaRirSet& rirs,
                       size_t clip_samples, Rng& rng, const SynthesisConfig& config = {});

}  // namespace seld::irs

#endif  // SELD_IRS_SYNTHESIS_H_
