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

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "seld/accdoa.h"
#include "seld/cli.h"
#include "seld/doa.h"
#include "seld/dsp/stft.h"
#include "seld/hungarian.h"
#include "seld/metrics.h"
#include "seld/random.h"
#include "seld/spatial.h"

namespace seld {

namespace {

bool StftRoundTrip() {
  Rng rng(7);
  FoaClip clip(24000, 4801);
  for (int c = 0; c < kFoaChannels; ++c) {
    for (float& s : clip.mutable_channel(c)) s = static_cast<float>(rng.Normal(0.0, 0.3));
  }
  const auto back = dsp::Istft(dsp::Stft(clip, {}));
  double err = 0.0;
  for (int c = 0; c < kFoaChannels; ++c) {
    for (size_t i = 0; i < clip.num_samples(); ++i) {
      err = std::max(err, std::abs(double(back[c][i]) - clip.channel(c)[i]));
    }
  }
  return err < 1e-4;
}

bool RotationGroup() {
  const auto set = DiscreteRotationSet();
  if (set.size() != 16) return false;
  for (size_t i = 0; i < set.size(); ++i) {
    const Eigen::Matrix3d m = set[i].matrix();
    if (!(m * m.transpose()).isApprox(Eigen::Matrix3d::Identity(), 1e-12)) return false;
    for (size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) return false;
    }
  }
  return true;
}

bool AccdoaRoundTrip() {
  std::vector<Event> events;
  for (int t = 0; t < 20; ++t) events.push_back({t, t % 12, 0, -180 + 17 * t, -40 + 4 * t});
  const EventList list(12, events);
  return DecodeGrid(EncodeLabels(list, 20, 12), kThresholdLow) == list;
}

bool AssignmentOptimal() {
  Eigen::MatrixXd cost(3, 3);
  cost << 4, 1, 3, 2, 0, 5, 3, 2, 2;
  const auto a = SolveAssignment(cost);
  double total = 0.0;
  for (int r = 0; r < 3; ++r) total += cost(r, a[r]);
  return total == 5.0;
}

bool PerfectMetrics() {
  std::vector<Event> events;
  for (int t = 0; t < 30; ++t) events.push_back({t, 3, 0, 45, 10});
  const EventList list(12, events);
  const SeldMetrics m = Evaluate(list, list);
  return m.er == 0.0 && m.f == 1.0 && m.le_deg < 1e-9 && m.lr == 1.0;
}

bool AzimuthWrap() {
  return WrapAzimuthDeg(180) == -180 && WrapAzimuthDeg(-181) == 179 &&
         std::abs(AngularDistanceDeg(AzElToVec(0, 90), AzElToVec(123, 90))) < 1e-6;
}

}  // namespace

int RunSelfTest(std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"stft_roundtrip", StftRoundTrip},   {"rotation_group", RotationGroup},
      {"accdoa_roundtrip", AccdoaRoundTrip}, {"assignment", AssignmentOptimal},
      {"perfect_metrics", PerfectMetrics}, {"azimuth_wrap", AzimuthWrap},
  };
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace seld
