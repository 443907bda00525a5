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

#include <gtest/gtest.h>

#include <cmath>

#include "seld/augment.h"
#include "seld/errors.h"
#include "seld/random.h"
#include "seld/spatial.h"

namespace seld {
namespace {

constexpr int kRate = 24000;

LabeledClip Source(Rng& rng, size_t n, const EventList& events) {
  Signal s(n);
  for (float& v : s) v = static_cast<float>(rng.Uniform(-0.3, 0.3));
  return {EncodePlaneWave(s, kRate, AzElToVec(rng.UniformInt(-180, 179), 0)), events};
}

TEST(Biquad, ZeroGainIsIdentity) {
  Rng rng(61);
  Signal x(1000);
  for (float& v : x) v = static_cast<float>(rng.Normal());
  const Signal y = Biquad::Peaking(kRate, 1000, 0.0, 1.0).Process(x);
  for (size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i], x[i], 1e-6);
}

TEST(Biquad, PeakGainAtCenterFrequency) {
  for (double gain_db : {-6.0, 3.0, 6.0}) {
    const double f0 = 1500;
    Signal x(24000);
    for (size_t i = 0; i < x.size(); ++i) x[i] = static_cast<float>(std::sin(2 * kPi * f0 * i / kRate));
    const Signal y = Biquad::Peaking(kRate, f0, gain_db, 1.0).Process(x);
    double ex = 0, ey = 0;
    for (size_t i = 12000; i < x.size(); ++i) {
      ex += double(x[i]) * x[i];
      ey += double(y[i]) * y[i];
    }
    EXPECT_NEAR(10 * std::log10(ey / ex), gain_db, 0.01);
  }
}

TEST(Biquad, FarFromCenterIsUnity) {
  Signal x(24000);
  for (size_t i = 0; i < x.size(); ++i) x[i] = static_cast<float>(std::sin(2 * kPi * 50.0 * i / kRate));
  const Signal y = Biquad::Peaking(kRate, 8000, 6.0, 1.0).Process(x);
  double ex = 0, ey = 0;
  for (size_t i = 12000; i < x.size(); ++i) {
    ex += double(x[i]) * x[i];
    ey += double(y[i]) * y[i];
  }
  EXPECT_NEAR(10 * std::log10(ey / ex), 0.0, 0.05);
}

TEST(Emda, PlainSumAndTrackOffsets) {
  Rng rng(62);
  const LabeledClip base = Source(rng, 4800, EventList(12, {{0, 1, 0, 10, 0}, {1, 1, 1, 20, 0}}));
  const LabeledClip extra = Source(rng, 4800, EventList(12, {{0, 2, 0, -30, 5}}));
  const std::vector<LabeledClip> extras = {extra};
  const std::vector<EmdaExtraParams> params = {EmdaExtraParams{}};
  const LabeledClip mix = ApplyEmda(base, extras, params);
  for (int c = 0; c < kFoaChannels; ++c) {
    for (size_t i = 0; i < 4800; ++i) {
      ASSERT_NEAR(mix.clip.channel(c)[i], base.clip.channel(c)[i] + extra.clip.channel(c)[i], 1e-6);
    }
  }
  ASSERT_EQ(mix.events.size(), 3u);
  EXPECT_EQ(mix.events.events()[1], (Event{0, 2, 2, -30, 5}));
}

TEST(Emda, DelayShiftsAudioAndLabels) {
  Rng rng(63);
  const LabeledClip base{FoaClip(kRate, 4800), EventList(12, {})};
  const LabeledClip extra =
      Source(rng, 4800, EventList(12, {{0, 3, 0, 0, 0}, {1, 3, 0, 0, 0}}));
  EmdaExtraParams p;
  p.gain = 0.5;
  p.delay_samples = 2400;
  const std::vector<LabeledClip> extras = {extra};
  const std::vector<EmdaExtraParams> params = {p};
  const LabeledClip mix = ApplyEmda(base, extras, params);
  for (size_t i = 0; i < 2400; ++i) {
    ASSERT_EQ(mix.clip.channel(0)[i], 0.0f);
    ASSERT_NEAR(mix.clip.channel(0)[i + 2400], 0.5f * extra.clip.channel(0)[i], 1e-6);
  }
  // Frame 1 moves to 2, which lies past the two-frame clip and is dropped.
  ASSERT_EQ(mix.events.size(), 1u);
  EXPECT_EQ(mix.events.events()[0].frame, 1);
}

TEST(Emda, ZeroGainDropsLabels) {
  Rng rng(64);
  const LabeledClip base = Source(rng, 2400, EventList(12, {}));
  const LabeledClip extra = Source(rng, 2400, EventList(12, {{0, 0, 0, 0, 0}}));
  EmdaExtraParams p;
  p.gain = 0.0;
  const std::vector<LabeledClip> extras = {extra};
  const std::vector<EmdaExtraParams> params = {p};
  const LabeledClip mix = ApplyEmda(base, extras, params);
  EXPECT_TRUE(mix.events.empty());
  EXPECT_EQ(mix.clip, base.clip);
}

TEST(Emda, LimitsAndValidation) {
  Rng rng(65);
  const LabeledClip c = Source(rng, 2400, EventList(12, {}));
  const std::vector<LabeledClip> three = {c, c, c};
  EXPECT_THROW(Emda(c, three, rng), ValidationError);
  EmdaConfig bad;
  bad.gain_db_min = 1.0;
  bad.gain_db_max = 0.0;
  EXPECT_THROW(bad.Validate(), ValidationError);
  bad = EmdaConfig{};
  bad.max_mixed_events = 3;
  EXPECT_THROW(bad.Validate(), ValidationError);
}

TEST(Emda, SampledParametersStayInRange) {
  Rng rng(66);
  EmdaConfig cfg;
  for (const auto& p : SampleEmdaParams(rng, cfg, 2, 1000)) {
    EXPECT_GE(20 * std::log10(p.gain), cfg.gain_db_min - 1e-9);
    EXPECT_LE(20 * std::log10(p.gain), cfg.gain_db_max + 1e-9);
    EXPECT_GE(p.delay_samples, 0);
    EXPECT_LE(p.delay_samples, 1000);
    EXPECT_GE(p.eq_freq_hz, cfg.eq_freq_min_hz - 1e-9);
    EXPECT_LE(p.eq_freq_hz, cfg.eq_freq_max_hz + 1e-9);
  }
}

TEST(Emda, SameSeedSameMix) {
  Rng seed_a(67), seed_b(67), src(68);
  const LabeledClip base = Source(src, 4800, EventList(12, {{0, 1, 0, 10, 0}}));
  const std::vector<LabeledClip> extras = {Source(src, 4800, EventList(12, {{1, 2, 0, 0, 0}}))};
  const LabeledClip a = Emda(base, extras, seed_a);
  const LabeledClip b = Emda(base, extras, seed_b);
  EXPECT_EQ(a.clip, b.clip);
  EXPECT_EQ(a.events, b.events);
}

dsp::FeatureTensor Filled(int channels) {
  std::vector<dsp::FeatureMapTag> layout;
  for (int c = 0; c < channels; ++c) layout.push_back({dsp::FeatureKind::kLogAmplitude, c});
  layout.push_back({dsp::FeatureKind::kIpd, 1});
  dsp::FeatureTensor ft(layout, 40, 30);
  Rng rng(69);
  for (float& v : ft.data()) v = static_cast<float>(rng.Uniform(0.5, 1.5));
  return ft;
}

TEST(SpecAugment, HardMasksOnly) {
  const dsp::FeatureTensor ft = Filled(4);
  SpecAugmentMasks masks;
  masks.time = {{5, 3}};
  masks.freq = {{10, 2}};
  masks.channel = 1;
  const dsp::FeatureTensor out = ApplyMasks(ft, masks);
  for (int m = 0; m < ft.maps(); ++m) {
    for (int t = 0; t < ft.frames(); ++t) {
      for (int f = 0; f < ft.bins(); ++f) {
        const bool masked = (t >= 5 && t < 8) || (f >= 10 && f < 12) || ft.layout()[m].channel == 1;
        ASSERT_EQ(out.at(m, t, f), masked ? 0.0f : ft.at(m, t, f));
      }
    }
  }
}

TEST(SpecAugment, SampledMasksRespectLimits) {
  const dsp::FeatureTensor ft = Filled(4);
  Rng rng(70);
  SpecAugmentConfig cfg;
  cfg.channel_mask_prob = 1.0;
  for (int i = 0; i < 100; ++i) {
    const SpecAugmentMasks m = SampleMasks(rng, cfg, ft);
    EXPECT_LE(m.time.size(), 2u);
    EXPECT_LE(m.freq.size(), 2u);
    for (auto [s, w] : m.time) {
      EXPECT_GE(s, 0);
      EXPECT_LE(s + w, ft.frames());
    }
    for (auto [s, w] : m.freq) {
      EXPECT_LE(w, 16);
      EXPECT_LE(s + w, ft.bins());
    }
    ASSERT_TRUE(m.channel.has_value());
    EXPECT_GE(*m.channel, 0);
    EXPECT_LT(*m.channel, 4);
  }
  cfg.channel_mask_prob = 1.5;
  EXPECT_THROW(SampleMasks(rng, cfg, ft), ValidationError);
}

}  // namespace
}  // namespace seld
