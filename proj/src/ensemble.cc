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

#include "seld/ensemble.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "seld/config.h"
#include "seld/errors.h"
#include "seld/grid_io.h"
#include "seld/logging.h"
#include "seld/parallel.h"

namespace seld {

namespace fs = std::filesystem;

std::vector<int> WindowStarts(int total_frames, int window_frames, int hop_frames) {
  if (window_frames <= 0 || hop_frames <= 0) {
    throw ValidationError("window length and hop must be positive");
  }
  std::vector<int> starts;
  for (int s = 0; s < total_frames; s += hop_frames) {
    starts.push_back(s);
    if (s + window_frames >= total_frames) break;
  }
  return starts;
}

std::vector<int> CoverageCounts(std::span<const WindowOutput> windows, int total_frames) {
  std::vector<int> count(std::max(total_frames, 0), 0);
  for (const WindowOutput& w : windows) {
    const int end = std::min(total_frames, w.start_frame + w.grid.frames());
    for (int t = std::max(w.start_frame, 0); t < end; ++t) ++count[t];
  }
  return count;
}

AccdoaGrid StitchWindows(std::span<const WindowOutput> windows, int total_frames) {
  if (windows.empty()) throw ValidationError("no windows to stitch");
  const int classes = windows[0].grid.classes();
  for (const WindowOutput& w : windows) {
    if (w.grid.classes() != classes) throw ValidationError("windows differ in class count");
    if (w.start_frame < 0) throw ValidationError("negative window start");
  }
  AccdoaGrid out(total_frames, classes, windows[0].grid.frame_period_s());
  const std::vector<int> count = CoverageCounts(windows, total_frames);
  for (int t = 0; t < total_frames; ++t) {
    if (count[t] == 0) {
      throw ValidationError("frame " + std::to_string(t) + " is not covered by any window");
    }
  }
  for (const WindowOutput& w : windows) {
    const int end = std::min(total_frames, w.start_frame + w.grid.frames());
    for (int t = w.start_frame; t < end; ++t) {
      for (int c = 0; c < classes; ++c) out.Add(t, c, w.grid.Get(t - w.start_frame, c));
    }
  }
  for (int t = 0; t < total_frames; ++t) {
    const double inv = 1.0 / count[t];
    for (int c = 0; c < classes; ++c) out.Set(t, c, out.Get(t, c) * inv);
  }
  return out;
}

AccdoaGrid AverageGrids(std::span<const AccdoaGrid> members, std::span<const double> weights) {
  if (members.empty()) throw ValidationError("no ensemble members");
  std::vector<double> w(members.size(), 1.0);
  if (!weights.empty()) {
    if (weights.size() != members.size()) {
      throw ValidationError("weights length " + std::to_string(weights.size()) +
                            " does not match member count " + std::to_string(members.size()));
    }
    w.assign(weights.begin(), weights.end());
  }
  double total = 0.0;
  for (double v : w) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError("ensemble weights must be >= 0");
    total += v;
  }
  if (total <= 0.0) throw ValidationError("ensemble weights sum to zero");

  AccdoaGrid out(members[0].frames(), members[0].classes(), members[0].frame_period_s());
  for (size_t m = 0; m < members.size(); ++m) {
    if (!members[m].SameShape(out)) throw ValidationError("ensemble members differ in shape");
    const double scale = w[m] / total;
    if (scale == 0.0) continue;
    const auto& src = members[m].data();
    auto& dst = out.data();
    for (size_t i = 0; i < src.size(); ++i) dst[i] += scale * src[i];
  }
  return out;
}

const EnsemblePreset& GetEnsemblePreset(int id) {
  // Member counts: 11+1+1+2 and 15+2+2+4 base systems.
  static const EnsemblePreset kPresets[] = {
      {1, Averaging::kSimple, 0.3, 15},
      {2, Averaging::kSimple, 0.4, 15},
      {3, Averaging::kWeighted, 0.3, 15},
      {4, Averaging::kWeighted, 0.4, 23},
  };
  if (id < 1 || id > 4) throw ValidationError("ensemble preset must be 1-4");
  return kPresets[id - 1];
}

void EnsembleSpec::Validate() const {
  if (members.empty()) throw ValidationError("ensemble has no members");
  if (!(threshold > 0.0)) throw ValidationError("threshold must be positive");
  if (preset) {
    const EnsemblePreset& p = GetEnsemblePreset(*preset);
    if (static_cast<int>(members.size()) != p.member_count) {
      throw ValidationError("preset #" + std::to_string(p.id) + " needs " +
                            std::to_string(p.member_count) + " members, got " +
                            std::to_string(members.size()));
    }
    if (p.averaging != averaging || p.threshold != threshold) {
      throw ValidationError("averaging/threshold disagree with preset");
    }
  }
  if (averaging == Averaging::kWeighted && weights.size() != members.size()) {
    throw ValidationError("weighted averaging needs " + std::to_string(members.size()) +
                          " weights, got " + std::to_string(weights.size()));
  }
}

EnsembleSpec LoadManifest(const fs::path& path) {
  const KeyValueConfig cfg = KeyValueConfig::Load(path);
  const fs::path base = path.parent_path();
  auto resolve = [&base](const std::string& p) {
    const fs::path q(p);
    return q.is_absolute() ? q : base / q;
  };
  EnsembleSpec spec;
  if (cfg.Has("preset")) {
    const EnsemblePreset& p = GetEnsemblePreset(cfg.GetInt("preset", 0));
    spec.preset = p.id;
    spec.averaging = p.averaging;
    spec.threshold = p.threshold;
  }
  const std::string averaging =
      cfg.GetString("averaging", spec.averaging == Averaging::kSimple ? "simple" : "weighted");
  if (averaging == "simple") {
    spec.averaging = Averaging::kSimple;
  } else if (averaging == "weighted") {
    spec.averaging = Averaging::kWeighted;
  } else {
    throw ValidationError("averaging must be simple or weighted, got '" + averaging + "'");
  }
  spec.threshold = cfg.GetDouble("threshold", spec.threshold);
  spec.class_count = cfg.GetInt("class_count", kDefaultClassCount);
  spec.output_dir = resolve(cfg.GetString("output_dir", "ensemble_out"));
  if (cfg.Has("reference_dir")) spec.reference_dir = resolve(cfg.GetString("reference_dir", ""));
  if (cfg.Has("weights")) spec.weights = cfg.GetDoubleList("weights");

  const auto members_file = cfg.Find("members");
  if (!members_file) throw ValidationError("manifest has no `members` entry");
  const fs::path list_path = resolve(*members_file);
  std::ifstream in(list_path);
  if (!in) throw IoError("cannot open member list " + list_path.string());
  const fs::path list_base = list_path.parent_path();
  std::string line;
  while (std::getline(in, line)) {
    const size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    const size_t b = line.find_last_not_of(" \t\r");
    const fs::path member(line.substr(a, b - a + 1));
    spec.members.push_back(member.is_absolute() ? member : list_base / member);
  }
  spec.Validate();
  return spec;
}

namespace {

bool IsOutputFile(const fs::path& p) { return p.extension() == ".accd" || p.extension() == ".ein2"; }

std::set<std::string> ListClips(const fs::path& member) {
  if (!fs::is_directory(member)) throw IoError("missing member directory " + member.string());
  std::set<std::string> clips;
  for (const auto& entry : fs::directory_iterator(member)) {
    if (entry.is_directory()) {
      clips.insert(entry.path().filename().string());
    } else if (entry.is_regular_file() && IsOutputFile(entry.path())) {
      clips.insert(entry.path().stem().string());
    }
  }
  return clips;
}

int ParseStart(const fs::path& p) {
  const std::string stem = p.stem().string();
  size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(stem, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != stem.size() || v < 0) {
    throw ValidationError("window file name must be a start frame: " + p.string());
  }
  return v;
}

}  // namespace

AccdoaGrid LoadMemberOutput(const fs::path& member_dir, const std::string& clip) {
  for (const char* ext : {".accd", ".ein2"}) {
    const fs::path file = member_dir / (clip + ext);
    if (fs::is_regular_file(file)) return ReadAnyAsGrid(file);
  }
  const fs::path dir = member_dir / clip;
  if (!fs::is_directory(dir)) {
    throw IoError("missing member output " + (member_dir / clip).string());
  }
  std::vector<WindowOutput> windows;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || !IsOutputFile(entry.path())) continue;
    windows.push_back({ParseStart(entry.path()), ReadAnyAsGrid(entry.path())});
  }
  if (windows.empty()) throw IoError("no window outputs in " + dir.string());
  std::sort(windows.begin(), windows.end(),
            [](const WindowOutput& a, const WindowOutput& b) { return a.start_frame < b.start_frame; });
  int total = 0;
  for (const WindowOutput& w : windows) total = std::max(total, w.start_frame + w.grid.frames());
  return StitchWindows(windows, total);
}

EnsembleReport RunEnsemble(const EnsembleSpec& spec) {
  spec.Validate();
  StageTimer timer("ensemble");
  const std::set<std::string> clips = ListClips(spec.members[0]);
  for (size_t m = 1; m < spec.members.size(); ++m) {
    const std::set<std::string> other = ListClips(spec.members[m]);
    for (const auto& c : clips) {
      if (!other.count(c)) {
        throw IoError("member " + spec.members[m].string() + " has no output for " + c);
      }
    }
  }
  if (clips.empty()) throw ValidationError("ensemble members contain no outputs");

  const std::vector<double> weights =
      spec.averaging == Averaging::kWeighted ? spec.weights : std::vector<double>{};
  EnsembleReport report;
  report.members = static_cast<int>(spec.members.size());
  report.clips.assign(clips.begin(), clips.end());
  fs::create_directories(spec.output_dir);

  ParallelFor(report.clips.size(), spec.jobs, [&](size_t i) {
    const std::string& clip = report.clips[i];
    std::vector<AccdoaGrid> grids;
    grids.reserve(spec.members.size());
    for (const fs::path& member : spec.members) grids.push_back(LoadMemberOutput(member, clip));
    // Stitched windows run past the clip end; crop everything to the shortest member.
    int frames = grids[0].frames();
    for (const AccdoaGrid& g : grids) frames = std::min(frames, g.frames());
    for (AccdoaGrid& g : grids) {
      if (g.frames() == frames) continue;
      AccdoaGrid cropped(frames, g.classes(), g.frame_period_s());
      std::copy_n(g.data().begin(), cropped.data().size(), cropped.data().begin());
      g = std::move(cropped);
    }
    const AccdoaGrid mean = AverageGrids(grids, weights);
    if (mean.classes() != spec.class_count) {
      throw ValidationError("member outputs have " + std::to_string(mean.classes()) +
                            " classes, manifest says " + std::to_string(spec.class_count));
    }
    WriteMetadata(DecodeGrid(mean, spec.threshold), spec.output_dir / (clip + ".csv"));
  });

  if (spec.reference_dir) {
    CorpusOptions options;
    options.class_count = spec.class_count;
    options.jobs = spec.jobs;
    report.evaluation = EvaluateCorpus(spec.output_dir, *spec.reference_dir, options);
  }
  timer.AddCounter("members", report.members);
  timer.AddCounter("clips", static_cast<long long>(report.clips.size()));
  return report;
}

WeightSearchResult SearchWeights(const std::vector<std::vector<AccdoaGrid>>& member_grids,
                                 const std::vector<EventList>& references, double threshold,
                                 const MetricConfig& metric, std::span<const double> candidates,
                                 int passes) {
  const size_t members = member_grids.size();
  if (members == 0) throw ValidationError("no members to weight");
  for (const auto& g : member_grids) {
    if (g.size() != references.size()) {
      throw ValidationError("every member needs one output per reference clip");
    }
  }
  static const double kDefaultCandidates[] = {0.0, 0.5, 1.0, 2.0};
  if (candidates.empty()) candidates = kDefaultCandidates;

  auto score = [&](const std::vector<double>& w) {
    double total = 0.0;
    for (double v : w) total += v;
    if (total <= 0.0) return 2.0;  // worse than any achievable score
    MetricAccumulator acc;
    std::vector<AccdoaGrid> grids(members);
    for (size_t i = 0; i < references.size(); ++i) {
      for (size_t m = 0; m < members; ++m) grids[m] = member_grids[m][i];
      const EventList pred = DecodeGrid(AverageGrids(grids, w), threshold);
      AccumulateClip(EventList(references[i].class_count(), pred.events()), references[i], metric,
                     &acc);
    }
    return SeldScore(acc.Compute());
  };

  WeightSearchResult best{std::vector<double>(members, 1.0), 0.0};
  best.score = score(best.weights);
  for (int pass = 0; pass < passes; ++pass) {
    bool improved = false;
    for (size_t m = 0; m < members; ++m) {
      for (double c : candidates) {
        std::vector<double> trial = best.weights;
        trial[m] = c;
        const double s = score(trial);
        if (s < best.score) {
          best = {trial, s};
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return best;
}

}  // namespace seld
