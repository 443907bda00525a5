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

#include "seld/event_list.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

#include "seld/binary_io.h"
#include "seld/doa.h"
#include "seld/errors.h"

namespace seld {
namespace {

auto Key(const Event& e) { return std::tie(e.frame, e.class_id, e.track_id); }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int ParseInt(std::string_view field, int row) {
  field = Trim(field);
  int value = 0;
  // Some writers emit integral floats ("30.0").
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc() && ptr == field.data() + field.size()) return value;
  double d = 0;
  auto [dptr, dec] = std::from_chars(field.data(), field.data() + field.size(), d);
  if (dec == std::errc() && dptr == field.data() + field.size() && std::floor(d) == d) {
    return static_cast<int>(d);
  }
  throw ParseError("not an integer: '" + std::string(field) + "'", row);
}

}  // namespace

EventList::EventList(int class_count) : class_count_(class_count) {
  if (class_count <= 0) throw ValidationError("class_count must be positive");
}

EventList::EventList(int class_count, std::vector<Event> events)
    : class_count_(class_count), events_(std::move(events)) {
  if (class_count <= 0) throw ValidationError("class_count must be positive");
  for (const Event& e : events_) {
    if (e.class_id < 0 || e.class_id >= class_count_) {
      throw RangeError("class " + std::to_string(e.class_id) + " outside [0, " +
                       std::to_string(class_count_) + ")");
    }
    if (e.frame < 0 || e.track_id < 0) {
      throw ValidationError("negative frame or track index");
    }
    if (e.azimuth_deg < -180 || e.azimuth_deg >= 180) {
      throw RangeError("azimuth " + std::to_string(e.azimuth_deg) + " outside [-180, 180)");
    }
    if (e.elevation_deg < -90 || e.elevation_deg > 90) {
      throw RangeError("elevation " + std::to_string(e.elevation_deg) + " outside [-90, 90]");
    }
  }
  std::sort(events_.begin(), events_.end(),
            [](const Event& a, const Event& b) { return Key(a) < Key(b); });
  auto dup = std::adjacent_find(events_.begin(), events_.end(), [](const Event& a, const Event& b) {
    return Key(a) == Key(b);
  });
  if (dup != events_.end()) {
    throw ValidationError("duplicate event at frame " + std::to_string(dup->frame) + ", class " +
                          std::to_string(dup->class_id) + ", track " +
                          std::to_string(dup->track_id));
  }
}

int EventList::FrameSpan() const { return events_.empty() ? 0 : events_.back().frame + 1; }

EventList ParseMetadata(std::string_view text, int class_count) {
  std::vector<Event> events;
  int row = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++row;
    line = Trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      const size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) {
      throw ParseError("expected 5 fields, got " + std::to_string(fields.size()), row);
    }
    Event e;
    e.frame = ParseInt(fields[0], row);
    e.class_id = ParseInt(fields[1], row);
    e.track_id = ParseInt(fields[2], row);
    e.azimuth_deg = ParseInt(fields[3], row);
    // Some annotation tools write the back direction as +180.
    if (e.azimuth_deg == 180) e.azimuth_deg = -180;
    e.elevation_deg = ParseInt(fields[4], row);
    if (e.class_id < 0 || e.class_id >= class_count) {
      throw RangeError("row " + std::to_string(row) + ": class " + std::to_string(e.class_id) +
                       " outside [0, " + std::to_string(class_count) + ")");
    }
    events.push_back(e);
  }
  return EventList(class_count, std::move(events));
}

EventList ReadMetadata(const std::filesystem::path& path, int class_count) {
  try {
    return ParseMetadata(ReadFileBytes(path), class_count);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.row());
  }
}

std::string FormatMetadata(const EventList& events) {
  std::string out;
  for (const Event& e : events.events()) {
    out += std::to_string(e.frame) + ',' + std::to_string(e.class_id) + ',' +
           std::to_string(e.track_id) + ',' + std::to_string(e.azimuth_deg) + ',' +
           std::to_string(e.elevation_deg) + '\n';
  }
  return out;
}

void WriteMetadata(const EventList& events, const std::filesystem::path& path) {
  WriteFileBytes(path, FormatMetadata(events));
}

int LabelHopSamples(int sample_rate, double label_hop_s) {
  const int hop = static_cast<int>(std::lround(sample_rate * label_hop_s));
  if (hop <= 0) throw ValidationError("label hop must be at least one sample");
  return hop;
}

}  // namespace seld
