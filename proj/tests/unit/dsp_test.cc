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
#include <complex>
#include <filesystem>

#include "seld/doa.h"
#include "seld/dsp/convolve.h"
#include "seld/dsp/feature_io.h"
#include "seld/dsp/features.h"
#include "seld/dsp/stft.h"
#include "seld/errors.h"
#include "seld/random.h"
#include "support/oracles.h"

namespace seld::dsp {
namespace {

constexpr int kRate = 24000;

Signal Noise(Rng& rng, size_t n, double scale = 0.5) {
  Signal s(n);
  for (float& v : s) v = static_cast<float>(rng.Uniform(-scale, scale));
  return s;
}

TEST(Stft, FrameCount) {
  const StftConfig cfg = StftConfig::ForSampleRate(kRate);
  EXPECT_EQ(cfg.frame_length, 480);
  EXPECT_EQ(cfg.hop, 240);
  EXPECT_EQ(cfg.fft_size, 512);
  EXPECT_EQ(cfg.bins(), 257);
  EXPECT_EQ(StftFrameCount(24000, cfg), 101);
  EXPECT_EQ(StftFrameCount(479, cfg), 0);
}

TEST(Stft, InvalidConfig) {
  StftConfig cfg;
  cfg.hop = 0;
  EXPECT_THROW(ValidateStftConfig(cfg), ConfigError);
  cfg = StftConfig{};
  cfg.hop = 600;
  EXPECT_THROW(ValidateStftConfig(cfg), ConfigError);
  cfg = StftConfig{};
  cfg.fft_size = 256;
  EXPECT_THROW(ValidateStftConfig(cfg), ConfigError);
}

TEST(Stft, DcInteriorBinEqualsWindowSum) {
  const StftConfig cfg;
  const Signal dc(4800, 1.0f);
  const SpectralTensor spec = Stft(std::span<const Signal>(&dc, 1), kRate, cfg);
  double wsum = 0;
  for (double w : MakeWindow(cfg.window, cfg.frame_length)) wsum += w;
  for (int t = 2; t < spec.frames() - 2; ++t) {
    EXPECT_NEAR(std::abs(spec.at(0, t, 0)), wsum, 1e-9);
  }
}

TEST(Stft, BinCenteredSineDominates) {
  const StftConfig cfg;
  const int k = 40;
  Signal s(4800);
  for (size_t i = 0; i < s.size(); ++i) s[i] = static_cast<float>(std::cos(2 * kPi * k * i / cfg.fft_size));
  const SpectralTensor spec = Stft(std::span<const Signal>(&s, 1), kRate, cfg);
  for (int t = 2; t < spec.frames() - 2; ++t) {
    int best = 0;
    for (int f = 1; f < spec.bins(); ++f) {
      if (std::abs(spec.at(0, t, f)) > std::abs(spec.at(0, t, best))) best = f;
    }
    EXPECT_EQ(best, k);
  }
}

TEST(Stft, RoundTrip) {
  Rng rng(11);
  std::vector<Signal> ch = {Noise(rng, 12345, 1.0), Noise(rng, 12345, 1.0)};
  const SpectralTensor spec = Stft(ch, kRate, StftConfig{});
  const std::vector<Signal> back = Istft(spec);
  ASSERT_EQ(back.size(), 2u);
  for (int c = 0; c < 2; ++c) {
    ASSERT_EQ(back[c].size(), ch[c].size());
    for (size_t i = 0; i < ch[c].size(); ++i) ASSERT_NEAR(back[c][i], ch[c][i], 1e-6);
  }
}

TEST(Stft, ParsevalPerFrame) {
  Rng rng(12);
  StftConfig cfg;
  cfg.center = false;
  const Signal s = Noise(rng, 4800);
  const SpectralTensor spec = Stft(std::span<const Signal>(&s, 1), kRate, cfg);
  const std::vector<double> w = MakeWindow(cfg.window, cfg.frame_length);
  double spectral = 0, direct = 0;
  for (int t = 0; t < spec.frames(); ++t) {
    for (int f = 0; f < spec.bins(); ++f) {
      const double weight = (f == 0 || f == spec.bins() - 1) ? 1.0 : 2.0;
      spectral += weight * std::norm(spec.at(0, t, f));
    }
    for (int n = 0; n < cfg.frame_length; ++n) {
      const double v = s[static_cast<size_t>(t) * cfg.hop + n] * w[n];
      direct += v * v;
    }
  }
  EXPECT_NEAR(spectral / (cfg.fft_size * direct), 1.0, 1e-9);
}

TEST(Stft, Linearity) {
  Rng rng(13);
  const Signal a = Noise(rng, 3000), b = Noise(rng, 3000);
  Signal mix(3000);
  for (size_t i = 0; i < mix.size(); ++i) mix[i] = 2.0f * a[i] - 0.5f * b[i];
  const StftConfig cfg;
  const auto sa = Stft(std::span<const Signal>(&a, 1), kRate, cfg);
  const auto sb = Stft(std::span<const Signal>(&b, 1), kRate, cfg);
  const auto sm = Stft(std::span<const Signal>(&mix, 1), kRate, cfg);
  for (int t = 0; t < sm.frames(); ++t) {
    for (int f = 0; f < sm.bins(); ++f) {
      ASSERT_LT(std::abs(sm.at(0, t, f) - (2.0 * sa.at(0, t, f) - 0.5 * sb.at(0, t, f))), 1e-4);
    }
  }
}

TEST(Stft, ZeroSpectrumGivesSilence) {
  const StftConfig cfg;
  SpectralTensor spec(1, 10, cfg, kRate, 2400);
  const std::vector<Signal> out = Istft(spec);
  for (float v : out[0]) EXPECT_EQ(v, 0.0f);
}

TEST(Stft, SingleFrameReproducesWindowSupport) {
  Rng rng(14);
  StftConfig cfg;
  cfg.center = false;
  const Signal s = Noise(rng, cfg.frame_length);
  const SpectralTensor spec = Stft(std::span<const Signal>(&s, 1), kRate, cfg);
  ASSERT_EQ(spec.frames(), 1);
  const Signal back = Istft(spec)[0];
  const std::vector<double> w = MakeWindow(cfg.window, cfg.frame_length);
  for (int n = 0; n < cfg.frame_length; ++n) {
    EXPECT_NEAR(back[n], w[n] > 0 ? s[n] : 0.0f, 1e-5);
  }
}

TEST(Stft, UncoveredHopIsConfigError) {
  StftConfig cfg;
  cfg.window = WindowType::kHann;
  cfg.hop = cfg.frame_length;
  SpectralTensor spec(1, 10, cfg, kRate, 4800);
  EXPECT_THROW(Istft(spec), ConfigError);
}

SpectralTensor TwoChannel(std::complex<double> x0, std::complex<double> x1) {
  SpectralTensor spec(2, 1, StftConfig{}, kRate, 480);
  for (int f = 0; f < spec.bins(); ++f) {
    spec.at(0, 0, f) = x0;
    spec.at(1, 0, f) = x1;
  }
  return spec;
}

TEST(Features, Amplitude) {
  const auto amp = Amplitude(TwoChannel({0, 0}, std::polar(1.0, 0.7)));
  EXPECT_EQ(amp.at(0, 0, 3), 0.0f);
  EXPECT_NEAR(amp.at(1, 0, 3), 1.0f, 1e-7);
  const auto logamp = Amplitude(TwoChannel({0, 0}, {3, 4}), true);
  EXPECT_NEAR(logamp.at(0, 0, 0), std::log(1e-8), 1e-5);
  EXPECT_NEAR(logamp.at(1, 0, 0), std::log(5.0), 1e-6);
}

TEST(Features, AmplitudeMatchesDirectMagnitude) {
  Rng rng(15);
  const Signal s = Noise(rng, 2400);
  const auto spec = Stft(std::span<const Signal>(&s, 1), kRate, StftConfig{});
  const auto amp = Amplitude(spec);
  for (int t = 0; t < spec.frames(); ++t) {
    for (int f = 0; f < spec.bins(); ++f) {
      const auto z = spec.at(0, t, f);
      ASSERT_NEAR(amp.at(0, t, f), std::sqrt(z.real() * z.real() + z.imag() * z.imag()), 1e-5);
    }
  }
}

TEST(Features, IpdExamples) {
  const std::complex<double> x(0.3, -1.2);
  EXPECT_EQ(Ipd(TwoChannel(x, x)).at(0, 0, 5), 0.0f);
  EXPECT_NEAR(Ipd(TwoChannel(x, std::complex<double>(0, 1) * x)).at(0, 0, 5), -kPi / 2, 1e-6);
  // pi exactly stays at +pi.
  EXPECT_NEAR(Ipd(TwoChannel({1, 0}, {-1, 0})).at(0, 0, 5), kPi, 1e-6);
  EXPECT_THROW(Ipd(TwoChannel(x, x), 2), RangeError);
}

TEST(Features, IpdAntisymmetricAndBounded) {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const std::complex<double> a(rng.Normal(), rng.Normal()), b(rng.Normal(), rng.Normal());
    const auto spec = TwoChannel(a, b);
    const double ab = Ipd(spec, 0).at(0, 0, 1);
    const double ba = Ipd(spec, 1).at(0, 0, 1);
    EXPECT_GT(ab, -kPi);
    EXPECT_LE(ab, kPi + 1e-6);
    EXPECT_NEAR(WrapPhase(ab + ba), 0.0, 1e-5);
  }
}

TEST(Features, CosSinIpdIdentity) {
  Rng rng(17);
  const std::complex<double> a(rng.Normal(), rng.Normal()), b(rng.Normal(), rng.Normal());
  const auto cs = CosSinIpd(TwoChannel(a, b));
  ASSERT_EQ(cs.maps(), 2);
  EXPECT_EQ(cs.layout()[0].kind, FeatureKind::kCosIpd);
  EXPECT_EQ(cs.layout()[1].kind, FeatureKind::kSinIpd);
  const double c = cs.at(0, 0, 2), s = cs.at(1, 0, 2);
  EXPECT_NEAR(c * c + s * s, 1.0, 1e-6);
  EXPECT_NEAR(std::atan2(s, c), std::arg(a * std::conj(b)), 1e-5);
}

TEST(Features, WrapPhase) {
  EXPECT_NEAR(WrapPhase(-kPi), kPi, 1e-12);
  EXPECT_NEAR(WrapPhase(3 * kPi), kPi, 1e-9);
  EXPECT_NEAR(WrapPhase(2 * kPi + 0.5), 0.5, 1e-12);
}

TEST(Features, PcenStationaryClosedForm) {
  FeatureTensor amp({{FeatureKind::kAmplitude, 0}}, 50, 3);
  const double e = 0.37;
  for (float& v : amp.data()) v = static_cast<float>(e);
  const PcenConfig cfg;
  const auto p = Pcen(amp, cfg);
  const double ef = static_cast<float>(e);
  const double expected = std::pow(ef / std::pow(cfg.eps + ef, cfg.alpha) + cfg.delta, cfg.root) -
                          std::pow(cfg.delta, cfg.root);
  for (float v : p.data()) EXPECT_NEAR(v, expected, 1e-6);
  EXPECT_EQ(p.layout()[0].kind, FeatureKind::kPcen);
}

TEST(Features, PcenZeroAndMonotone) {
  FeatureTensor amp({{FeatureKind::kAmplitude, 0}}, 1, 20);
  for (int f = 0; f < 20; ++f) amp.at(0, 0, f) = 0.1f * f;
  const auto p = Pcen(amp);
  EXPECT_NEAR(p.at(0, 0, 0), 0.0f, 1e-7);
  for (int f = 1; f < 20; ++f) EXPECT_GT(p.at(0, 0, f), p.at(0, 0, f - 1));
}

TEST(Features, TagNames) {
  EXPECT_EQ((FeatureMapTag{FeatureKind::kPcen, 3}).Name(), "pcen3");
  EXPECT_EQ(FeatureMapTag::FromName("cosipd2"), (FeatureMapTag{FeatureKind::kCosIpd, 2}));
  EXPECT_EQ(FeatureMapTag::FromName("logamp0"), (FeatureMapTag{FeatureKind::kLogAmplitude, 0}));
}

TEST(FeatureIo, RoundTrip) {
  Rng rng(18);
  FeatureTensor ft({{FeatureKind::kAmplitude, 0}, {FeatureKind::kSinIpd, 3}}, 7, 5);
  for (float& v : ft.data()) v = static_cast<float>(rng.Normal());
  EXPECT_EQ(DecodeFeatures(EncodeFeatures(ft)), ft);
  const auto path = std::filesystem::temp_directory_path() / "seldkit_feat.bin";
  WriteFeatures(ft, path);
  EXPECT_EQ(ReadFeatures(path), ft);
  std::string bytes = EncodeFeatures(ft);
  bytes[0] = 'X';
  EXPECT_THROW(DecodeFeatures(bytes), FormatError);
  EXPECT_THROW(DecodeFeatures(EncodeFeatures(ft).substr(0, 40)), FormatError);
}

TEST(Convolve, Delta) {
  Rng rng(19);
  std::vector<double> x(1000);
  for (double& v : x) v = rng.Normal();
  const std::vector<double> delta = {1.0};
  const auto y = FftConvolve(x, delta);
  ASSERT_EQ(y.size(), x.size());
  for (size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i], x[i], 1e-9);
  std::vector<double> delayed(8, 0.0);
  delayed[7] = 1.0;
  const auto z = FftConvolve(x, delayed);
  ASSERT_EQ(z.size(), x.size() + 7);
  for (size_t i = 0; i < 7; ++i) EXPECT_NEAR(z[i], 0.0, 1e-9);
  for (size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(z[i + 7], x[i], 1e-9);
}

TEST(Convolve, MatchesDirectSum) {
  Rng rng(20);
  for (auto [n, l] : {std::pair<size_t, size_t>{1, 1}, {37, 5}, {5, 37}, {3000, 700}, {500, 4100}}) {
    std::vector<double> x(n), h(l);
    for (double& v : x) v = rng.Normal();
    for (double& v : h) v = rng.Normal();
    const auto fast = FftConvolve(x, h);
    const auto slow = testing::BruteConvolve(x, h);
    ASSERT_EQ(fast.size(), slow.size());
    for (size_t i = 0; i < slow.size(); ++i) ASSERT_NEAR(fast[i], slow[i], 1e-6) << n << " " << l;
  }
}

TEST(Convolve, EmptyInputRejected) {
  const std::vector<double> x = {1.0}, empty;
  EXPECT_THROW(FftConvolve(x, empty), ValidationError);
}

}  // namespace
}  // namespace seld::dsp
