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

#ifndef SELD_IRS_PIPELINE_H_
#define SELD_IRS_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "seld/irs/array_model.h"
#include "seld/irs/cgmm_mvdr.h"
#include "seld/irs/eigen_filter.h"
#include "seld/irs/rir.h"
#include "seld/irs/room.h"
#include "seld/irs/segments.h"
#include "seld/irs/synthesis.h"
#include "seld/wav_io.h"

namespace seld::irs {

struct ExtractOptions {
  std::filesystem::path audio_dir;
  std::filesystem::path meta_dir;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> verdicts;
  double score_threshold = 0.5;
  int class_count = kDefaultClassCount;
  SegmentConfig segment;
  EigenFilterConfig eigen;
  CgmmConfig cgmm;
  bool beamform = true;  // false writes the W channel instead
  int jobs = 1;
};

struct ExtractReport {
  int clips = 0;
  int candidates = 0;
  int stage1_kept = 0;
  int stage2_kept = 0;
};

// Candidates of every `<stem>.wav` in audio_dir with `<stem>.csv` labels in
// meta_dir, in file-name order.
std::vector<SegmentCandidate> CollectCandidates(const std::filesystem::path& audio_dir,
                                                const std::filesystem::path& meta_dir,
                                                int class_count, const SegmentConfig& segment,
                                                int jobs = 1);

// Segment extraction, stage-1 verdict filter, stage-2 eigen filter and
// CGMM-MVDR. Writes `<id>.wav` (mono source) and `<id>.csv` (one candidate
// row) per kept segment plus `index.csv` and `rejected.csv`.
ExtractReport RunExtract(const ExtractOptions& options);

struct SimulateOptions {
  std::optional<std::filesystem::path> segments_dir;  // output of RunExtract
  std::filesystem::path out_dir;
  uint64_t seed = 0;
  int count = 1;
  RirMode mode = RirMode::kEigenmike;
  double clip_seconds = 60.0;
  int class_count = kDefaultClassCount;
  RoomSamplerConfig room;
  SimulationConfig simulation;
  SynthesisConfig synthesis;
  ArrayModel array = ArrayModel::Em32();
  WavEncoding encoding = WavEncoding::kFloat32;
  int jobs = 1;
};

// Clip i is generated from Rng::ForUnit(seed, i) alone, so any `jobs` value
// yields identical files: `foa/irs_<i>.wav` and `metadata/irs_<i>.csv`.
// Without segments_dir, noise-burst sources with random classes are used.
int RunSimulate(const SimulateOptions& options);

// Generates clip `index` of a simulate run in memory.
LabeledClip SimulateClip(const SimulateOptions& options, int index,
                         const std::vector<SegmentCandidate>& segments);

}  // namespace seld::irs

#endif  // SELD_IRS_PIPELINE_H_
