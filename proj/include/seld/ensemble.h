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

#ifndef SELD_ENSEMBLE_H_
#define SELD_ENSEMBLE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seld/accdoa.h"
#include "seld/metrics.h"

namespace seld {

// Inference windows as used at test time: 512 frames, shifted by 20 frames.
constexpr int kWindowFrames = 512;
constexpr int kWindowHopFrames = 20;

struct WindowOutput {
  int start_frame = 0;
  AccdoaGrid grid;
};

// Start frames k * hop for every window that begins inside [0, total_frames)
// and is needed to reach the end; the final start is not moved back to
// align with the end of the clip.
std::vector<int> WindowStarts(int total_frames, int window_frames = kWindowFrames,
                              int hop_frames = kWindowHopFrames);

// Number of windows covering each frame of [0, total_frames).
std::vector<int> CoverageCounts(std::span<const WindowOutput> windows, int total_frames);

// Per frame, the mean over the windows that actually cover it. Window frames
// past total_frames are ignored. Throws ValidationError on a coverage gap or
// inconsistent class counts.
AccdoaGrid StitchWindows(std::span<const WindowOutput> windows, int total_frames);

// Weighted vector mean; empty `weights` means uniform. Weights are normalized
// to sum to one. Throws ValidationError on shape mismatch, a negative or
// non-finite weight, all-zero weights or a length mismatch.
AccdoaGrid AverageGrids(std::span<const AccdoaGrid> members, std::span<const double> weights = {});

enum class Averaging { kSimple, kWeighted };

// One of the four ensemble configurations: averaging, threshold and the
// number of member systems.
struct EnsemblePreset {
  int id;
  Averaging averaging;
  double threshold;
  int member_count;
};
const EnsemblePreset& GetEnsemblePreset(int id);

struct EnsembleSpec {
  Averaging averaging = Averaging::kSimple;
  double threshold = kThresholdLow;
  std::vector<std::filesystem::path> members;
  std::vector<double> weights;
  std::optional<int> preset;
  std::filesystem::path output_dir;
  int class_count = kDefaultClassCount;
  // Optional evaluation of the decoded output.
  std::optional<std::filesystem::path> reference_dir;
  int jobs = 1;

  // Throws ValidationError: weights must match the member count for
  // weighted averaging and a preset fixes averaging, threshold and M.
  void Validate() const;
};

// Manifest keys: averaging (simple|weighted), threshold, preset (1-4),
// members (file with one member directory per line), weights (comma list),
// output_dir, class_count, reference_dir. Relative paths resolve against the
// manifest's directory.
EnsembleSpec LoadManifest(const std::filesystem::path& path);

struct EnsembleReport {
  int members = 0;
  std::vector<std::string> clips;
  std::optional<CorpusReport> evaluation;
};

// Member directories hold `<clip>.accd` / `<clip>.ein2` files, or a
// `<clip>/` directory of `<start_frame>.accd|.ein2` windows to be stitched.
// Every member must provide every clip; outputs are cropped to the shortest
// member (stitched windows overhang the clip end). Writes
// `<output_dir>/<clip>.csv`.
EnsembleReport RunEnsemble(const EnsembleSpec& spec);

// Loads one member's output for `clip`, stitching windows when needed.
AccdoaGrid LoadMemberOutput(const std::filesystem::path& member_dir, const std::string& clip);

// Coordinate search over per-member weights drawn from `candidates`,
// minimizing the micro-averaged SELD score on a validation set.
// member_grids[m][i] is member m's output for clip i.
struct WeightSearchResult {
  std::vector<double> weights;
  double score = 0.0;
};
WeightSearchResult SearchWeights(const std::vector<std::vector<AccdoaGrid>>& member_grids,
                                 const std::vector<EventList>& references, double threshold,
                                 const MetricConfig& metric = {},
                                 std::span<const double> candidates = {}, int passes = 3);

}  // namespace seld

#endif  // SELD_ENSEMBLE_H_
