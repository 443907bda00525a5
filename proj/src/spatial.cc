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

#include "seld/spatial.h"

#include <charconv>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "seld/errors.h"
#include "seld/parallel.h"

namespace seld {

FoaRotation FoaRotation::FromMatrix(const Eigen::Matrix3d& m) {
  const double err = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (!(err <= 1e-9)) throw ValidationError("FOA rotation matrix is not orthogonal");
  return FoaRotation(m);
}

FoaRotation FoaRotation::YawQuarterTurns(int quarter_turns) {
  static const int kCos[4] = {1, 0, -1, 0};
  static const int kSin[4] = {0, 1, 0, -1};
  const int q = ((quarter_turns % 4) + 4) % 4;
  Eigen::Matrix3d m;
  m << kCos[q], -kSin[q], 0, kSin[q], kCos[q], 0, 0, 0, 1;
  return FoaRotation(m);
}

FoaRotation FoaRotation::ReflectY() {
  return FoaRotation(Eigen::Vector3d(1, -1, 1).asDiagonal().toDenseMatrix());
}

FoaRotation FoaRotation::FlipZ() {
  return FoaRotation(Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix());
}

FoaRotation FoaRotation::Inverse() const { return FoaRotation(Eigen::Matrix3d(m_.transpose())); }

FoaRotation FoaRotation::operator*(const FoaRotation& other) const {
  return FoaRotation(Eigen::Matrix3d(m_ * other.m_));
}

bool FoaRotation::ApproxEqual(const FoaRotation& other, double tol) const {
  return (m_ - other.m_).cwiseAbs().maxCoeff() <= tol;
}

FoaClip RotateFoa(const FoaClip& clip, const FoaRotation& rotation) {
  const Eigen::Matrix3d& r = rotation.matrix();
  std::array<Signal, kFoaChannels> out = clip.channels();
  const Signal& x = clip.channel(kAcnX);
  const Signal& y = clip.channel(kAcnY);
  const Signal& z = clip.channel(kAcnZ);
  for (size_t n = 0; n < clip.num_samples(); ++n) {
    const Eigen::Vector3d v(x[n], y[n], z[n]);
    const Eigen::Vector3d w = r * v;
    out[kAcnX][n] = static_cast<float>(w.x());
    out[kAcnY][n] = static_cast<float>(w.y());
    out[kAcnZ][n] = static_cast<float>(w.z());
  }
  return FoaClip(clip.sample_rate(), std::move(out));
}

EventList RotateLabels(const EventList& events, const FoaRotation& rotation) {
  std::vector<Event> out;
  out.reserve(events.size());
  for (Event e : events.events()) {
    const Eigen::Vector3d v =
        rotation.matrix() * AzElToVec(e.azimuth_deg, e.elevation_deg).vector();
    const AzEl d = VecToAzEl(v);
    e.azimuth_deg = WrapAzimuthDeg(static_cast<int>(std::lround(d.azimuth_deg)));
    e.elevation_deg = static_cast<int>(std::lround(d.elevation_deg));
    out.push_back(e);
  }
  return EventList(events.class_count(), std::move(out));
}

AccdoaGrid RotateGrid(const AccdoaGrid& grid, const FoaRotation& rotation) {
  AccdoaGrid out(grid.frames(), grid.classes(), grid.frame_period_s());
  for (int t = 0; t < grid.frames(); ++t) {
    for (int c = 0; c < grid.classes(); ++c) out.Set(t, c, rotation.matrix() * grid.Get(t, c));
  }
  return out;
}

std::vector<FoaRotation> DiscreteRotationSet() {
  std::vector<FoaRotation> set;
  set.reserve(16);
  for (int flip = 0; flip < 2; ++flip) {
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (int yaw = 0; yaw < 4; ++yaw) {
        FoaRotation r = FoaRotation::YawQuarterTurns(yaw);
        if (reflect) r = r * FoaRotation::ReflectY();
        if (flip) r = r * FoaRotation::FlipZ();
        set.push_back(r);
      }
    }
  }
  return set;
}

std::vector<FoaRotation> ParseRotationSpec(std::string_view spec) {
  const std::vector<FoaRotation> all = DiscreteRotationSet();
  if (spec == "all16") return all;
  if (spec == "identity") return {FoaRotation::Identity()};
  if (spec.rfind("list:", 0) != 0) {
    throw ValidationError("rotation spec must be all16, identity or list:<indices>");
  }
  std::vector<FoaRotation> out;
  std::string_view rest = spec.substr(5);
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    int idx = -1;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), idx);
    if (ec != std::errc() || ptr != item.data() + item.size() || idx < 0 || idx >= 16) {
      throw ValidationError("rotation index must be in [0, 16): '" + std::string(item) + "'");
    }
    out.push_back(all[idx]);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (out.empty()) throw ValidationError("empty rotation list");
  return out;
}

AccdoaGrid TtaAverage(const GridModel& model, const FoaClip& clip,
                      std::span<const FoaRotation> rotations, int jobs) {
  if (rotations.empty()) throw ValidationError("test-time averaging needs at least one rotation");
  auto evaluate = [&](size_t i) {
    return RotateGrid(model(RotateFoa(clip, rotations[i])), rotations[i].Inverse());
  };
  std::vector<AccdoaGrid> back(rotations.size());
  ParallelFor(rotations.size(), jobs, [&](size_t i) { back[i] = evaluate(i); });

  AccdoaGrid mean(back[0].frames(), back[0].classes(), back[0].frame_period_s());
  for (const AccdoaGrid& g : back) {
    if (!g.SameShape(mean)) throw ValidationError("model returned grids of different shapes");
    for (size_t i = 0; i < g.data().size(); ++i) mean.data()[i] += g.data()[i];
  }
  const double scale = 1.0 / static_cast<double>(back.size());
  for (double& v : mean.data()) v *= scale;
  return mean;
}

FoaClip EncodePlaneWave(std::span<const float> signal, int sample_rate, const Doa& direction) {
  std::array<Signal, kFoaChannels> ch;
  ch[kAcnW].assign(signal.begin(), signal.end());
  ch[kAcnY].resize(signal.size());
  ch[kAcnZ].resize(signal.size());
  ch[kAcnX].resize(signal.size());
  for (size_t n = 0; n < signal.size(); ++n) {
    ch[kAcnY][n] = static_cast<float>(signal[n] * direction.y());
    ch[kAcnZ][n] = static_cast<float>(signal[n] * direction.z());
    ch[kAcnX][n] = static_cast<float>(signal[n] * direction.x());
  }
  return FoaClip(sample_rate, std::move(ch));
}

}  // namespace seld
