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

#include "seld/irs/segments.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "seld/binary_io.h"
#include "seld/errors.h"
#include "seld/logging.h"

namespace seld::irs {

std::vector<SegmentCandidate> ExtractSegments(const std::string& clip_name, size_t num_samples,
                                              int sample_rate, const EventList& events,
                                              const SegmentConfig& config) {
  if (config.min_frames < 1 || config.max_frames < config.min_frames) {
    throw ValidationError("segment length limits must satisfy 1 <= min <= max");
  }
  const int hop = LabelHopSamples(sample_rate, config.label_hop_s);
  const int frames = static_cast<int>((num_samples + hop - 1) / hop);

  // Per frame: the single active event, or nullptr when zero or several are.
  std::vector<const Event*> solo(frames, nullptr);
  std::vector<int> active(frames, 0);
  for (const Event& e : events.events()) {
    if (e.frame >= frames) continue;
    if (active[e.frame]++ == 0) solo[e.frame] = &e;
  }
  for (int t = 0; t < frames; ++t) {
    if (active[t] != 1) solo[t] = nullptr;
  }

  auto same = [](const Event* a, const Event* b) {
    return a && b && a->class_id == b->class_id && a->track_id == b->track_id &&
           a->azimuth_deg == b->azimuth_deg && a->elevation_deg == b->elevation_deg;
  };

  std::vector<SegmentCandidate> out;
  int t = 0;
  while (t < frames) {
    if (!solo[t]) {
      ++t;
      continue;
    }
    int end = t + 1;
    while (end < frames && same(solo[t], solo[end])) ++end;
    for (int s = t; s < end; s += config.max_frames) {
      const int e = std::min(end, s + config.max_frames);
      if (e - s < config.min_frames) continue;
      SegmentCandidate c;
      c.clip = clip_name;
      c.start_frame = s;
      c.end_frame = e;
      c.start_sample = static_cast<size_t>(s) * hop;
      c.end_sample = std::min(num_samples, static_cast<size_t>(e) * hop);
      c.class_id = solo[t]->class_id;
      c.azimuth_deg = solo[t]->azimuth_deg;
      c.elevation_deg = solo[t]->elevation_deg;
      char id[32];
      std::snprintf(id, sizeof(id), "_%03zu", out.size());
      c.id = clip_name + id;
      out.push_back(c);
    }
    t = end;
  }
  return out;
}

FoaClip SliceClip(const FoaClip& clip, size_t start_sample, size_t end_sample) {
  if (start_sample > end_sample || end_sample > clip.num_samples()) {
    throw RangeError("slice outside clip");
  }
  std::array<Signal, kFoaChannels> ch;
  for (int c = 0; c < kFoaChannels; ++c) {
    ch[c].assign(clip.channel(c).begin() + start_sample, clip.channel(c).begin() + end_sample);
  }
  return FoaClip(clip.sample_rate(), std::move(ch));
}

namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) {
    const size_t a = f.find_first_not_of(" \t");
    const size_t b = f.find_last_not_of(" \t\r");
    fields.push_back(a == std::string::npos ? "" : f.substr(a, b - a + 1));
  }
  return fields;
}

}  // namespace

Verdicts ParseVerdicts(std::string_view text, int class_count) {
  Verdicts out;
  std::istringstream in{std::string(text)};
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto fields = SplitCsv(line);
    if (static_cast<int>(fields.size()) != class_count + 1) {
      throw ParseError("expected segment id and " + std::to_string(class_count) + " scores", row);
    }
    std::vector<double> scores;
    for (int c = 0; c < class_count; ++c) {
      double v = 0.0;
      try {
        size_t used = 0;
        v = std::stod(fields[c + 1], &used);
        if (used != fields[c + 1].size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        throw ParseError("bad score '" + fields[c + 1] + "'", row);
      }
      if (!(v >= 0.0 && v <= 1.0)) throw ParseError("score outside [0, 1]", row);
      scores.push_back(v);
    }
    if (!out.emplace(fields[0], std::move(scores)).second) {
      throw ParseError("duplicate segment id " + fields[0], row);
    }
  }
  return out;
}

Verdicts ReadVerdicts(const std::filesystem::path& path, int class_count) {
  return ParseVerdicts(ReadFileBytes(path), class_count);
}

std::vector<SegmentCandidate> Stage1Filter(const std::vector<SegmentCandidate>& candidates,
                                           const std::optional<Verdicts>& verdicts,
                                           double score_threshold) {
  if (!verdicts) {
    Log().warn("stage=irs.stage1 msg=\"no verdicts, passing all candidates\" candidates={}",
               candidates.size());
    return candidates;
  }
  std::vector<SegmentCandidate> kept;
  for (const SegmentCandidate& c : candidates) {
    const auto it = verdicts->find(c.id);
    if (it == verdicts->end()) throw ValidationError("no verdict for segment " + c.id);
    const double best =
        it->second.empty() ? 0.0 : *std::max_element(it->second.begin(), it->second.end());
    if (best >= score_threshold) kept.push_back(c);
  }
  return kept;
}

std::string FormatCandidates(const std::vector<SegmentCandidate>& candidates) {
  std::ostringstream os;
  for (const SegmentCandidate& c : candidates) {
    os << c.id << ',' << c.clip << ',' << c.start_sample << ',' << c.end_sample << ','
       << c.class_id << ',' << c.azimuth_deg << ',' << c.elevation_deg << '\n';
  }
  return os.str();
}

std::vector<SegmentCandidate> ParseCandidates(std::string_view text) {
  std::vector<SegmentCandidate> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto f = SplitCsv(line);
    if (f.size() != 7) throw ParseError("expected 7 candidate fields", row);
    SegmentCandidate c;
    try {
      c.id = f[0];
      c.clip = f[1];
      c.start_sample = std::stoull(f[2]);
      c.end_sample = std::stoull(f[3]);
      c.class_id = std::stoi(f[4]);
      c.azimuth_deg = std::stoi(f[5]);
      c.elevation_deg = std::stoi(f[6]);
    } catch (const std::logic_error&) {
      throw ParseError("bad candidate field", row);
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace seld::irs
