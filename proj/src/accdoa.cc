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

#include "seld/accdoa.h"

#include <cmath>
#include <string>

#include "seld/doa.h"
#include "seld/errors.h"
#include "seld/logging.h"

namespace seld {

AccdoaGrid::AccdoaGrid(int frames, int classes, double frame_period_s)
    : frames_(frames),
      classes_(classes),
      frame_period_s_(frame_period_s),
      data_(static_cast<size_t>(frames) * classes * 3, 0.0) {
  if (frames < 0 || classes <= 0) throw ValidationError("grid needs frames >= 0 and classes > 0");
}

Einv2Output::Einv2Output(int frames, int tracks, int classes, double frame_period_s)
    : frames_(frames),
      tracks_(tracks),
      classes_(classes),
      frame_period_s_(frame_period_s),
      sed_(static_cast<size_t>(frames) * tracks * classes, 0.0),
      doa_(static_cast<size_t>(frames) * tracks * 3, 0.0) {
  Validate();
}

void Einv2Output::Validate() const {
  if (tracks_ < 1) throw ValidationError("EINV2 output needs at least one track");
  if (classes_ < 1) throw ValidationError("EINV2 output needs at least one class");
  for (double s : sed_) {
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("EINV2 SED value outside [0, 1]");
  }
}

AccdoaGrid EncodeLabels(const EventList& events, int frames, int classes, EncodeStats* stats,
                        double frame_period_s) {
  AccdoaGrid grid(frames, classes, frame_period_s);
  std::vector<char> filled(static_cast<size_t>(frames) * classes, 0);
  int collisions = 0;
  // Events are sorted by (frame, class, track), so the first hit per cell is
  // the lowest track id.
  for (const Event& e : events.events()) {
    if (e.class_id >= classes) {
      throw RangeError("class " + std::to_string(e.class_id) + " outside [0, " +
                       std::to_string(classes) + ")");
    }
    if (e.frame >= frames) {
      throw RangeError("event frame " + std::to_string(e.frame) + " outside [0, " +
                       std::to_string(frames) + ")");
    }
    char& cell = filled[static_cast<size_t>(e.frame) * classes + e.class_id];
    if (cell) {
      ++collisions;
      continue;
    }
    cell = 1;
    grid.Set(e.frame, e.class_id, AzElToVec(e.azimuth_deg, e.elevation_deg).vector());
  }
  if (collisions > 0) {
    Log().warn("stage=accdoa msg=\"same-class events share a frame; kept lowest track\" collisions={}",
               collisions);
  }
  if (stats) stats->collisions = collisions;
  return grid;
}

EventList DecodeGrid(const AccdoaGrid& grid, double threshold) {
  if (!(threshold > 0)) throw ValidationError("decode threshold must be positive");
  std::vector<Event> events;
  for (int t = 0; t < grid.frames(); ++t) {
    for (int c = 0; c < grid.classes(); ++c) {
      const Eigen::Vector3d v = grid.Get(t, c);
      if (!(v.norm() > threshold)) continue;
      const AzEl d = VecToAzEl(v);
      Event e;
      e.frame = t;
      e.class_id = c;
      e.track_id = 0;
      e.azimuth_deg = WrapAzimuthDeg(static_cast<int>(std::lround(d.azimuth_deg)));
      e.elevation_deg = static_cast<int>(std::lround(d.elevation_deg));
      events.push_back(e);
    }
  }
  return EventList(grid.classes(), std::move(events));
}

double MseLoss(const AccdoaGrid& estimate, const AccdoaGrid& target) {
  if (!estimate.SameShape(target)) throw ValidationError("MSE loss: grid shapes differ");
  if (estimate.data().empty()) return 0.0;
  double sum = 0;
  for (size_t i = 0; i < estimate.data().size(); ++i) {
    const double d = estimate.data()[i] - target.data()[i];
    sum += d * d;
  }
  return sum / static_cast<double>(estimate.data().size());
}

AccdoaGrid Einv2ToAccdoa(const Einv2Output& out) {
  out.Validate();
  AccdoaGrid grid(out.frames(), out.classes(), out.frame_period_s());
  for (int t = 0; t < out.frames(); ++t) {
    for (int c = 0; c < out.classes(); ++c) {
      Eigen::Vector3d best = Eigen::Vector3d::Zero();
      double best_norm = -1.0;
      for (int k = 0; k < out.tracks(); ++k) {
        const Eigen::Vector3d candidate = out.sed(t, k, c) * out.doa(t, k);
        const double n = candidate.norm();
        if (n > best_norm) {
          best_norm = n;
          best = candidate;
        }
      }
      grid.Set(t, c, best);
    }
  }
  return grid;
}

}  // namespace seld
