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

#ifndef SELD_EVENT_LIST_H_
#define SELD_EVENT_LIST_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace seld {

// Default label resolution: one label frame per 100 ms.
constexpr double kDefaultLabelHopSeconds = 0.1;
constexpr int kDefaultClassCount = 12;

// One annotated (frame, class, track) cell with an integer-degree DOA.
struct Event {
  int frame = 0;
  int class_id = 0;
  int track_id = 0;
  int azimuth_deg = 0;
  int elevation_deg = 0;

  bool operator==(const Event& other) const = default;
};

// Frame-wise annotations for one clip. Events are kept sorted by
// (frame, class_id, track_id), which is also the on-disk order.
class EventList {
 public:
  explicit EventList(int class_count = kDefaultClassCount);
  // Validates: class_id in [0, class_count), azimuth in [-180, 180),
  // elevation in [-90, 90] (RangeError); unique (frame, class, track) and
  // non-negative frame/track (ValidationError).
  EventList(int class_count, std::vector<Event> events);

  int class_count() const { return class_count_; }
  const std::vector<Event>& events() const { return events_; }
  size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  // One past the last annotated frame; 0 when empty.
  int FrameSpan() const;

  bool operator==(const EventList& other) const = default;

 private:
  int class_count_;
  std::vector<Event> events_;
};

// Metadata CSV: `frame,class,track,azimuth,elevation`, integers, no header.
// An azimuth of 180 is read as -180 (the same direction), so such a file
// normalizes after one read/write pass. Other out-of-range values are a
// RangeError.
EventList ParseMetadata(std::string_view text, int class_count);
EventList ReadMetadata(const std::filesystem::path& path, int class_count);
std::string FormatMetadata(const EventList& events);
void WriteMetadata(const EventList& events, const std::filesystem::path& path);

// Number of samples per label frame, e.g. 2400 at 24 kHz and 100 ms.
int LabelHopSamples(int sample_rate, double label_hop_s = kDefaultLabelHopSeconds);

}  // namespace seld

#endif  // SELD_EVENT_LIST_H_
