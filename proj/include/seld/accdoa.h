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

#ifndef SELD_ACCDOA_H_
#define SELD_ACCDOA_H_

#include <vector>

#include <Eigen/Core>

#include "seld/event_list.h"

namespace seld {

// frames x classes field of activity-coupled Cartesian DOA vectors: the
// direction is the DOA and the length is the event activity.
class AccdoaGrid {
 public:
  AccdoaGrid() = default;
  AccdoaGrid(int frames, int classes, double frame_period_s = kDefaultLabelHopSeconds);

  int frames() const { return frames_; }
  int classes() const { return classes_; }
  double frame_period_s() const { return frame_period_s_; }

  Eigen::Vector3d Get(int t, int c) const {
    const double* p = &data_[Index(t, c)];
    return {p[0], p[1], p[2]};
  }
  void Set(int t, int c, const Eigen::Vector3d& v) {
    double* p = &data_[Index(t, c)];
    p[0] = v.x();
    p[1] = v.y();
    p[2] = v.z();
  }
  void Add(int t, int c, const Eigen::Vector3d& v) { Set(t, c, Get(t, c) + v); }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool SameShape(const AccdoaGrid& other) const {
    return frames_ == other.frames_ && classes_ == other.classes_;
  }
  bool operator==(const AccdoaGrid& other) const = default;

 private:
  size_t Index(int t, int c) const { return (static_cast<size_t>(t) * classes_ + c) * 3; }

  int frames_ = 0;
  int classes_ = 0;
  double frame_period_s_ = kDefaultLabelHopSeconds;
  std::vector<double> data_;
};

// Track-wise output: per frame and track, class probabilities and one DOA.
class Einv2Output {
 public:
  Einv2Output() = default;
  Einv2Output(int frames, int tracks, int classes, double frame_period_s = kDefaultLabelHopSeconds);

  int frames() const { return frames_; }
  int tracks() const { return tracks_; }
  int classes() const { return classes_; }
  double frame_period_s() const { return frame_period_s_; }

  double& sed(int t, int k, int c) { return sed_[(static_cast<size_t>(t) * tracks_ + k) * classes_ + c]; }
  double sed(int t, int k, int c) const {
    return sed_[(static_cast<size_t>(t) * tracks_ + k) * classes_ + c];
  }
  Eigen::Vector3d doa(int t, int k) const {
    const double* p = &doa_[(static_cast<size_t>(t) * tracks_ + k) * 3];
    return {p[0], p[1], p[2]};
  }
  void set_doa(int t, int k, const Eigen::Vector3d& v) {
    double* p = &doa_[(static_cast<size_t>(t) * tracks_ + k) * 3];
    p[0] = v.x();
    p[1] = v.y();
    p[2] = v.z();
  }

  // Throws ValidationError unless tracks >= 1 and every sed value is in [0, 1].
  void Validate() const;

 private:
  int frames_ = 0;
  int tracks_ = 0;
  int classes_ = 0;
  double frame_period_s_ = kDefaultLabelHopSeconds;
  std::vector<double> sed_;
  std::vector<double> doa_;
};

struct EncodeStats {
  // Same-class events in one frame that were dropped (lowest track kept).
  int collisions = 0;
};

// Active (frame, class) cells get the unit DOA vector, all others zero.
// Throws RangeError for classes >= `classes` or frames outside [0, frames).
AccdoaGrid EncodeLabels(const EventList& events, int frames, int classes,
                        EncodeStats* stats = nullptr,
                        double frame_period_s = kDefaultLabelHopSeconds);

// Emits one event (track 0) for every cell whose norm exceeds `threshold`,
// with the direction rounded to integer degrees.
EventList DecodeGrid(const AccdoaGrid& grid, double threshold);

// Mean over frames x classes x 3 of the squared difference.
double MseLoss(const AccdoaGrid& estimate, const AccdoaGrid& target);

// Pseudo track-wise vectors sed * doa; the track with the largest norm wins
// (ties go to the lowest track index).
AccdoaGrid Einv2ToAccdoa(const Einv2Output& out);

// Usual activity thresholds for decoding.
constexpr double kThresholdLow = 0.3;
constexpr double kThresholdHigh = 0.4;

}  // namespace seld

#endif  // SELD_ACCDOA_H_
