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

#include "seld/augment.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "seld/doa.h"
#include "seld/errors.h"

namespace seld {

void EmdaConfig::Validate() const {
  if (max_mixed_events < 0 || max_mixed_events > 2) {
    throw ValidationError("EMDA mixes at most two extra events");
  }
  if (gain_db_min > gain_db_max || eq_freq_min_hz > eq_freq_max_hz || eq_freq_min_hz <= 0 ||
      eq_gain_db_min > eq_gain_db_max || eq_q <= 0 || delay_min < 0 ||
      (delay_max >= 0 && delay_min > delay_max) || label_hop_s <= 0) {
    throw ValidationError("invalid EMDA ranges");
  }
}

Biquad Biquad::Peaking(double sample_rate, double freq_hz, double gain_db, double q) {
  const double a = std::pow(10.0, gain_db / 40.0);
  const double w0 = 2.0 * kPi * freq_hz / sample_rate;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double cw = std::cos(w0);
  const double a0 = 1.0 + alpha / a;
  Biquad bq;
  bq.b0 = (1.0 + alpha * a) / a0;
  bq.b1 = -2.0 * cw / a0;
  bq.b2 = (1.0 - alpha * a) / a0;
  bq.a1 = -2.0 * cw / a0;
  bq.a2 = (1.0 - alpha / a) / a0;
  return bq;
}

Signal Biquad::Process(std::span<const float> x) const {
  Signal y(x.size());
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  for (size_t n = 0; n < x.size(); ++n) {
    const double x0 = x[n];
    const double y0 = b0 * x0 + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
    x2 = x1;
    x1 = x0;
    y2 = y1;
    y1 = y0;
    y[n] = static_cast<float>(y0);
  }
  return y;
}

std::vector<EmdaExtraParams> SampleEmdaParams(Rng& rng, const EmdaConfig& config, size_t extras,
                                              size_t clip_samples) {
  config.Validate();
  const long long delay_max = config.delay_max >= 0
                                  ? config.delay_max
                                  : std::max<long long>(0, static_cast<long long>(clip_samples) - 1);
  std::vector<EmdaExtraParams> out(extras);
  for (EmdaExtraParams& p : out) {
    p.gain = std::pow(10.0, rng.Uniform(config.gain_db_min, config.gain_db_max) / 20.0);
    p.delay_samples = config.delay_min +
                      static_cast<long long>(std::floor(
                          rng.Uniform(0.0, 1.0) * static_cast<double>(delay_max - config.delay_min + 1)));
    p.eq_freq_hz = std::exp(rng.Uniform(std::log(config.eq_freq_min_hz),
                                        std::log(config.eq_freq_max_hz)));
    p.eq_gain_db = rng.Uniform(config.eq_gain_db_min, config.eq_gain_db_max);
    p.eq_q = config.eq_q;
  }
  return out;
}

LabeledClip ApplyEmda(const LabeledClip& base, std::span<const LabeledClip> extras,
                      std::span<const EmdaExtraParams> params, const EmdaConfig& config) {
  config.Validate();
  if (static_cast<int>(extras.size()) > config.max_mixed_events) {
    throw ValidationError("EMDA got " + std::to_string(extras.size()) + " extras, limit is " +
                          std::to_string(config.max_mixed_events));
  }
  if (params.size() != extras.size()) throw ValidationError("one parameter set per extra");

  const int sr = base.clip.sample_rate();
  const size_t n = base.clip.num_samples();
  const int hop = LabelHopSamples(sr, config.label_hop_s);
  const int label_frames = static_cast<int>((n + hop - 1) / hop);

  std::array<std::vector<double>, kFoaChannels> mix;
  for (int ch = 0; ch < kFoaChannels; ++ch) {
    mix[ch].assign(base.clip.channel(ch).begin(), base.clip.channel(ch).end());
  }
  std::vector<Event> events = base.events.events();
  int next_track = 0;
  for (const Event& e : events) next_track = std::max(next_track, e.track_id + 1);

  for (size_t k = 0; k < extras.size(); ++k) {
    const LabeledClip& extra = extras[k];
    const EmdaExtraParams& p = params[k];
    if (extra.clip.sample_rate() != sr) throw ValidationError("EMDA clips differ in sample rate");
    if (extra.events.class_count() != base.events.class_count()) {
      throw ValidationError("EMDA clips differ in class count");
    }
    if (p.delay_samples < 0 || !std::isfinite(p.gain) || p.gain < 0) {
      throw ValidationError("invalid EMDA extra parameters");
    }
    if (p.gain == 0.0) continue;
    const double nyquist_guard = 0.45 * sr;
    const Biquad eq =
        Biquad::Peaking(sr, std::min(p.eq_freq_hz, nyquist_guard), p.eq_gain_db, p.eq_q);
    const size_t delay = static_cast<size_t>(p.delay_samples);
    for (int ch = 0; ch < kFoaChannels; ++ch) {
      const Signal filtered = eq.Process(extra.clip.channel(ch));
      for (size_t i = 0; i < filtered.size() && i + delay < n; ++i) {
        mix[ch][i + delay] += p.gain * filtered[i];
      }
    }
    const int shift = static_cast<int>(std::llround(static_cast<double>(p.delay_samples) / hop));
    int max_track = -1;
    for (const Event& e : extra.events.events()) {
      Event moved = e;
      moved.frame += shift;
      if (moved.frame >= label_frames) continue;
      moved.track_id += next_track;
      max_track = std::max(max_track, moved.track_id);
      events.push_back(moved);
    }
    next_track = std::max(next_track, max_track + 1);
  }

  std::array<Signal, kFoaChannels> out;
  for (int ch = 0; ch < kFoaChannels; ++ch) out[ch].assign(mix[ch].begin(), mix[ch].end());
  return {FoaClip(sr, std::move(out)), EventList(base.events.class_count(), std::move(events))};
}

LabeledClip Emda(const LabeledClip& base, std::span<const LabeledClip> extras, Rng& rng,
                 const EmdaConfig& config) {
  config.Validate();
  if (static_cast<int>(extras.size()) > config.max_mixed_events) {
    throw ValidationError("EMDA got " + std::to_string(extras.size()) + " extras, limit is " +
                          std::to_string(config.max_mixed_events));
  }
  const auto params = SampleEmdaParams(rng, config, extras.size(), base.clip.num_samples());
  return ApplyEmda(base, extras, params, config);
}

void SpecAugmentConfig::Validate() const {
  if (max_time_masks < 0 || max_time_width < 0 || max_freq_masks < 0 || max_freq_width < 0 ||
      !(channel_mask_prob >= 0.0 && channel_mask_prob <= 1.0)) {
    throw ValidationError("invalid SpecAugment settings");
  }
}

SpecAugmentMasks SampleMasks(Rng& rng, const SpecAugmentConfig& config,
                             const dsp::FeatureTensor& features) {
  config.Validate();
  SpecAugmentMasks masks;
  auto sample = [&rng](int count_max, int width_max, int dim,
                       std::vector<std::pair<int, int>>* out) {
    const int count = count_max > 0 ? rng.UniformInt(0, count_max) : 0;
    const int w_max = std::min(width_max, dim);
    for (int i = 0; i < count; ++i) {
      const int w = w_max > 0 ? rng.UniformInt(0, w_max) : 0;
      const int start = rng.UniformInt(0, dim - w);
      out->emplace_back(start, w);
    }
  };
  sample(config.max_time_masks, config.max_time_width, features.frames(), &masks.time);
  sample(config.max_freq_masks, config.max_freq_width, features.bins(), &masks.freq);
  if (config.channel_mask_prob > 0.0 && rng.Bernoulli(config.channel_mask_prob)) {
    std::set<int> channels;
    for (const auto& tag : features.layout()) channels.insert(tag.channel);
    if (!channels.empty()) {
      auto it = channels.begin();
      std::advance(it, rng.UniformInt(0, static_cast<int>(channels.size()) - 1));
      masks.channel = *it;
    }
  }
  return masks;
}

dsp::FeatureTensor ApplyMasks(const dsp::FeatureTensor& features, const SpecAugmentMasks& masks) {
  dsp::FeatureTensor out = features;
  const int frames = out.frames();
  const int bins = out.bins();
  for (int m = 0; m < out.maps(); ++m) {
    const bool whole = masks.channel && out.layout()[m].channel == *masks.channel;
    for (int t = 0; t < frames; ++t) {
      bool time_masked = whole;
      for (const auto& [s, w] : masks.time) time_masked |= (t >= s && t < s + w);
      for (int f = 0; f < bins; ++f) {
        bool masked = time_masked;
        for (const auto& [s, w] : masks.freq) masked |= (f >= s && f < s + w);
        if (masked) out.at(m, t, f) = 0.0f;
      }
    }
  }
  return out;
}

dsp::FeatureTensor SpecAugmentMc(const dsp::FeatureTensor& features, Rng& rng,
                                 const SpecAugmentConfig& config) {
  return ApplyMasks(features, SampleMasks(rng, config, features));
}

}  // namespace seld
