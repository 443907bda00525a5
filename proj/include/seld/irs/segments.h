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

#ifndef SELD_IRS_SEGMENTS_H_
#define SELD_IRS_SEGMENTS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seld/event_list.h"
#include "seld/foa_clip.h"

namespace seld::irs {

// A stretch of a labelled recording with one static, non-overlapped event.
struct SegmentCandidate {
  std::string id;    // "<clip>_<nnn>"
  std::string clip;  // source clip name (file stem)
  int start_frame = 0;
  int end_frame = 0;  // exclusive, label frames
  size_t start_sample = 0;
  size_t end_sample = 0;  // exclusive
  int class_id = 0;
  int azimuth_deg = 0;
  int elevation_deg = 0;
  bool overlap_free = true;
  bool is_static = true;

  bool operator==(const SegmentCandidate& other) const = default;
};

struct SegmentConfig {
  int min_frames = 5;   // shorter runs are discarded
  int max_frames = 50;  // longer runs are split into pieces of this length
  double label_hop_s = kDefaultLabelHopSeconds;
};

// Maximal label-frame runs in which exactly one event is active and its DOA
// does not change. Runs longer than max_frames are split; pieces shorter than
// min_frames are dropped. Sample spans are clamped to the clip length.
std::vector<SegmentCandidate> ExtractSegments(const std::string& clip_name,
                                              size_t num_samples, int sample_rate,
                                              const EventList& events,
                                              const SegmentConfig& config = {});

// Samples [start_sample, end_sample) of `clip`.
FoaClip SliceClip(const FoaClip& clip, size_t start_sample, size_t end_sample);

// Per-candidate class scores from an external classifier.
using Verdicts = std::map<std::string, std::vector<double>>;

// CSV rows `segment_id,score_0,...,score_{C-1}`; scores must lie in [0, 1].
Verdicts ParseVerdicts(std::string_view text, int class_count);
Verdicts ReadVerdicts(const std::filesystem::path& path, int class_count);

// Drops candidates whose best class score is below `score_threshold`.
// Without verdicts every candidate passes and a warning is logged. A
// candidate missing from the verdicts is a ValidationError.
std::vector<SegmentCandidate> Stage1Filter(const std::vector<SegmentCandidate>& candidates,
                                           const std::optional<Verdicts>& verdicts,
                                           double score_threshold = 0.5);

// `segment_id,clip,start_sample,end_sample,class,azimuth,elevation` rows.
std::string FormatCandidates(const std::vector<SegmentCandidate>& candidates);
std::vector<SegmentCandidate> ParseCandidates(std::string_view text);

}  // namespace seld::irs

#endif  // SELD_IRS_SEGMENTS_H_
