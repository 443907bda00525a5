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

#include "seld/dsp/features.h"

#include <cmath>
#include <numbers>

#include "seld/errors.h"

namespace seld::dsp {
namespace {

constexpr double kPi = std::numbers::pi;

const char* KindPrefix(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kAmplitude: return "amp";
    case FeatureKind::kLogAmplitude: return "logamp";
    case FeatureKind::kIpd: return "ipd";
    case FeatureKind::kCosIpd: return "cosipd";
    case FeatureKind::kSinIpd: return "sinipd";
    case FeatureKind::kPcen: return "pcen";
  }
  return "?";
}

// Phase difference arg(a) - arg(b), wrapped.
double PhaseDifference(std::complex<double> a, std::complex<double> b) {
  return WrapPhase(std::arg(a * std::conj(b)));
}

}  // namespace

std::string FeatureMapTag::Name() const { return KindPrefix(kind) + std::to_string(channel); }

FeatureMapTag FeatureMapTag::FromName(const std::string& name) {
  // Longest prefixes first so "logamp" is not read as "amp".
  for (FeatureKind kind : {FeatureKind::kLogAmplitude, FeatureKind::kCosIpd, FeatureKind::kSinIpd,
                           FeatureKind::kPcen, FeatureKind::kIpd, FeatureKind::kAmplitude}) {
    const std::string prefix = KindPrefix(kind);
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      return {kind, std::stoi(name.substr(prefix.size()))};
    }
  }
  throw FormatError("unknown feature map tag '" + name + "'");
}

FeatureTensor::FeatureTensor(std::vector<FeatureMapTag> layout, int frames, int bins)
    : layout_(std::move(layout)),
      frames_(frames),
      bins_(bins),
      data_(layout_.size() * static_cast<size_t>(frames) * bins, 0.0f) {}

FeatureTensor FeatureTensor::Concat(std::span<const FeatureTensor> parts) {
  if (parts.empty()) return {};
  std::vector<FeatureMapTag> layout;
  for (const auto& p : parts) {
    if (p.frames() != parts[0].frames() || p.bins() != parts[0].bins()) {
      throw ValidationError("cannot concatenate feature tensors of different shapes");
    }
    layout.insert(layout.end(), p.layout().begin(), p.layout().end());
  }
  FeatureTensor out(std::move(layout), parts[0].frames(), parts[0].bins());
  size_t pos = 0;
  for (const auto& p : parts) {
    std::copy(p.data_.begin(), p.data_.end(), out.data_.begin() + pos);
    pos += p.data_.size();
  }
  return out;
}

double WrapPhase(double phase) {
  double p = std::remainder(phase, 2.0 * kPi);  // [-pi, pi]
  if (p <= -kPi) p += 2.0 * kPi;
  return p;
}

FeatureTensor Amplitude(const SpectralTensor& spec, bool log_amplitude) {
  std::vector<FeatureMapTag> layout;
  for (int c = 0; c < spec.channels(); ++c) {
    layout.push_back({log_amplitude ? FeatureKind::kLogAmplitude : FeatureKind::kAmplitude, c});
  }
  FeatureTensor out(std::move(layout), spec.frames(), spec.bins());
  for (int c = 0; c < spec.channels(); ++c) {
    for (int t = 0; t < spec.frames(); ++t) {
      for (int f = 0; f < spec.bins(); ++f) {
        const double a = std::abs(spec.at(c, t, f));
        out.at(c, t, f) = static_cast<float>(log_amplitude ? std::log(a + 1e-8) : a);
      }
    }
  }
  return out;
}

FeatureTensor Ipd(const SpectralTensor& spec, int ref_channel) {
  if (spec.channels() < 2) throw ValidationError("IPD needs at least two channels");
  if (ref_channel < 0 || ref_channel >= spec.channels()) throw RangeError("bad IPD reference channel");
  std::vector<FeatureMapTag> layout;
  for (int q = 0; q < spec.channels(); ++q) {
    if (q != ref_channel) layout.push_back({FeatureKind::kIpd, q});
  }
  FeatureTensor out(layout, spec.frames(), spec.bins());
  for (int m = 0; m < out.maps(); ++m) {
    const int q = layout[m].channel;
    for (int t = 0; t < spec.frames(); ++t) {
      for (int f = 0; f < spec.bins(); ++f) {
        out.at(m, t, f) = static_cast<float>(PhaseDifference(spec.at(ref_channel, t, f), spec.at(q, t, f)));
      }
    }
  }
  return out;
}

FeatureTensor CosSinIpd(const SpectralTensor& spec, int ref_channel) {
  const FeatureTensor ipd = Ipd(spec, ref_channel);
  std::vector<FeatureMapTag> layout;
  for (const auto& tag : ipd.layout()) layout.push_back({FeatureKind::kCosIpd, tag.channel});
  for (const auto& tag : ipd.layout()) layout.push_back({FeatureKind::kSinIpd, tag.channel});
  FeatureTensor out(std::move(layout), ipd.frames(), ipd.bins());
  const int n = ipd.maps();
  for (int m = 0; m < n; ++m) {
    const int q = ipd.layout()[m].channel;
    for (int t = 0; t < ipd.frames(); ++t) {
      for (int f = 0; f < ipd.bins(); ++f) {
        // Recompute from the complex ratio to avoid the float round trip.
        const double d = PhaseDifference(spec.at(ref_channel, t, f), spec.at(q, t, f));
        out.at(m, t, f) = static_cast<float>(std::cos(d));
        out.at(n + m, t, f) = static_cast<float>(std::sin(d));
      }
    }
  }
  return out;
}

FeatureTensor Pcen(const FeatureTensor& amplitude, const PcenConfig& config) {
  if (!(config.smoother > 0 && config.smoother <= 1) || config.alpha <= 0 || config.delta <= 0 ||
      config.root <= 0 || config.eps <= 0) {
    throw ValidationError("PCEN parameters must be positive with 0 < s <= 1");
  }
  std::vector<FeatureMapTag> layout;
  for (const auto& tag : amplitude.layout()) {
    if (tag.kind != FeatureKind::kAmplitude) {
      throw ValidationError("PCEN expects linear amplitude maps, got " + tag.Name());
    }
    layout.push_back({FeatureKind::kPcen, tag.channel});
  }
  FeatureTensor out(std::move(layout), amplitude.frames(), amplitude.bins());
  const double offset = std::pow(config.delta, config.root);
  for (int m = 0; m < amplitude.maps(); ++m) {
    for (int f = 0; f < amplitude.bins(); ++f) {
      double smooth = 0;
      for (int t = 0; t < amplitude.frames(); ++t) {
        const double e = amplitude.at(m, t, f);
        smooth = t == 0 ? e : (1.0 - config.smoother) * smooth + config.smoother * e;
        const double gain = std::pow(config.eps + smooth, -config.alpha);
        out.at(m, t, f) = static_cast<float>(std::pow(e * gain + config.delta, config.root) - offset);
      }
    }
  }
  return out;
}

}  // namespace seld::dsp
