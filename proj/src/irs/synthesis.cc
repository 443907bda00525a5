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

#include "seld/irs/synthesis.h"

#include <algorithm>
#include <cmath>

#include "seld/dsp/convolve.h"
#include "seld/errors.h"

namespace seld::irs {

std::vector<SourcePlacement> SamplePlacements(std::span<const SynthesisSource> sources,
                                              size_t clip_samples, Rng& rng,
                                              const SynthesisConfig& config) {
  std::vector<SourcePlacement> out;
  for (const SynthesisSource& s : sources) {
    SourcePlacement p;
    const long long room = static_cast<long long>(clip_samples) - static_cast<long long>(s.signal.size());
    p.onset = room > 0 ? static_cast<size_t>(std::floor(rng.Uniform(0.0, 1.0) * (room + 1))) : 0;
    p.gain = std::pow(10.0, rng.Uniform(config.gain_db_min, config.gain_db_max) / 20.0);
    out.push_back(p);
  }
  return out;
}

LabeledClip SynthesizeWithPlacements(std::span<const SynthesisSource> sources,
                                     const FoaRirSet& rirs, size_t clip_samples,
                                     std::span<const SourcePlacement> placements,
                                     const SynthesisConfig& config) {
  if (sources.size() > rirs.size()) {
    throw ValidationError("need one RIR per source: " + std::to_string(sources.size()) +
                          " sources, " + std::to_string(rirs.size()) + " RIRs");
  }
  if (placements.size() != sources.size()) throw ValidationError("one placement per source");
  const int sr = rirs.sample_rate;
  const int hop = LabelHopSamples(sr, config.label_hop_s);
  const int label_frames = static_cast<int>((clip_samples + hop - 1) / hop);

  std::array<std::vector<double>, kFoaChannels> mix;
  for (auto& ch : mix) ch.assign(clip_samples, 0.0);
  std::vector<Event> events;

  for (size_t i = 0; i < sources.size(); ++i) {
    const SynthesisSource& src = sources[i];
    const SourcePlacement& pl = placements[i];
    if (src.signal.empty()) continue;
    if (src.class_id < 0 || src.class_id >= config.class_count) {
      throw RangeError("source class out of range");
    }
    const FoaClip& rir = rirs.rirs[i];
    for (int c = 0; c < kFoaChannels; ++c) {
      const Signal wet = dsp::FftConvolve(src.signal, rir.channel(c));
      for (size_t n = 0; n < wet.size() && pl.onset + n < clip_samples; ++n) {
        mix[c][pl.onset + n] += pl.gain * wet[n];
      }
    }

    // Frame energies of the dry source shifted by onset + direct delay.
    const size_t shift = pl.onset + static_cast<size_t>(std::llround(rirs.direct_delay_samples[i]));
    std::vector<double> energy(label_frames, 0.0);
    for (size_t n = 0; n < src.signal.size(); ++n) {
      const size_t pos = shift + n;
      if (pos >= clip_samples) break;
      energy[pos / hop] += static_cast<double>(src.signal[n]) * src.signal[n];
    }
    double peak = 0.0;
    for (double e : energy) peak = std::max(peak, e);
    if (peak <= 0.0) continue;
    const double floor = peak * std::pow(10.0, config.activity_db / 10.0);
    const AzEl dir = rirs.doas[i].ToAzEl();
    const int az = WrapAzimuthDeg(static_cast<int>(std::lround(dir.azimuth_deg)));
    const int el = static_cast<int>(std::lround(dir.elevation_deg));
    for (int t = 0; t < label_frames; ++t) {
      if (energy[t] > 0.0 && energy[t] >= floor) {
        events.push_back({t, src.class_id, static_cast<int>(i), az, el});
      }
    }
  }

  double peak = 0.0;
  for (const auto& ch : mix) {
    for (double v : ch) peak = std::max(peak, std::abs(v));
  }
  const double scale = peak > 0.0 ? config.peak / peak : 1.0;
  std::array<Signal, kFoaChannels> out;
  for (int c = 0; c < kFoaChannels; ++c) {
    out[c].resize(clip_samples);
    for (size_t n = 0; n < clip_samples; ++n) {
      // Keep the float result inside the peak even after rounding.
      out[c][n] = static_cast<float>(std::clamp(mix[c][n] * scale, -config.peak, config.peak));
    }
  }
  return {FoaClip(sr, std::move(out)), EventList(config.class_count, std::move(events))};
}

LabeledClip Synthesize(std::span<const SynthesisSource> sources, const FoaRirSet& rirs,
                       size_t clip_samples, Rng& rng, const SynthesisConfig& config) {
  const auto placements = SamplePlacements(sources, clip_samples, rng, config);
  return SynthesizeWithPlacements(sources, rirs, clip_samples, placements, config);
}

}  // namespace seld::irs
