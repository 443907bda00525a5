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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "seld/doa.h"
#include "seld/ensemble.h"
#include "seld/errors.h"
#include "seld/grid_io.h"
#include "seld/random.h"

namespace seld {
namespace {

namespace fs = std::filesystem;

AccdoaGrid RandomGrid(Rng& rng, int frames, int classes) {
  AccdoaGrid g(frames, classes);
  for (double& v : g.data()) v = static_cast<float>(rng.Uniform(-1, 1));
  return g;
}

AccdoaGrid Slice(const AccdoaGrid& g, int start, int frames) {
  AccdoaGrid out(frames, g.classes());
  for (int t = 0; t < frames && start + t < g.frames(); ++t) {
    for (int c = 0; c < g.classes(); ++c) out.Set(t, c, g.Get(start + t, c));
  }
  return out;
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("seldkit_ens_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Windows, StartsAndCoverage) {
  EXPECT_EQ(WindowStarts(100), (std::vector<int>{0}));
  EXPECT_EQ(WindowStarts(512), (std::vector<int>{0}));
  EXPECT_EQ(WindowStarts(513), (std::vector<int>{0, 20}));
  EXPECT_EQ(WindowStarts(0).size(), 0u);
  EXPECT_THROW(WindowStarts(10, 0, 5), ValidationError);
  const std::vector<int> starts = WindowStarts(3000);
  EXPECT_EQ(starts.front(), 0);
  EXPECT_GE(starts.back() + kWindowFrames, 3000);
  EXPECT_LT(starts[starts.size() - 2] + kWindowFrames, 3000);
}

TEST(Windows, ExactTilingIsConcatenation) {
  Rng rng(51);
  const AccdoaGrid full = RandomGrid(rng, 90, 3);
  std::vector<WindowOutput> windows;
  for (int s = 0; s < 90; s += 30) windows.push_back({s, Slice(full, s, 30)});
  EXPECT_EQ(StitchWindows(windows, 90), full);
}

TEST(Windows, OverlapIsAveragedAndTailIgnored) {
  AccdoaGrid a(4, 1), b(4, 1);
  for (int t = 0; t < 4; ++t) {
    a.Set(t, 0, Eigen::Vector3d(1, 0, 0));
    b.Set(t, 0, Eigen::Vector3d(0, 1, 0));
  }
  const std::vector<WindowOutput> windows = {{0, a}, {2, b}};
  EXPECT_EQ(CoverageCounts(windows, 5), (std::vector<int>{1, 1, 2, 2, 1}));
  const AccdoaGrid s = StitchWindows(windows, 5);
  EXPECT_EQ(s.frames(), 5);
  EXPECT_NEAR((s.Get(2, 0) - Eigen::Vector3d(0.5, 0.5, 0)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((s.Get(4, 0) - Eigen::Vector3d(0, 1, 0)).norm(), 0.0, 1e-12);
}

TEST(Windows, GapIsError) {
  const std::vector<WindowOutput> windows = {{0, AccdoaGrid(3, 1)}, {4, AccdoaGrid(3, 1)}};
  EXPECT_THROW(StitchWindows(windows, 7), ValidationError);
  EXPECT_THROW(StitchWindows({}, 3), ValidationError);
}

TEST(Average, UniformAndWeighted) {
  AccdoaGrid a(1, 1), b(1, 1);
  a.Set(0, 0, Eigen::Vector3d(1, 0, 0));
  b.Set(0, 0, Eigen::Vector3d(0, 1, 0));
  const std::vector<AccdoaGrid> members = {a, b};
  EXPECT_NEAR((AverageGrids(members).Get(0, 0) - Eigen::Vector3d(0.5, 0.5, 0)).norm(), 0, 1e-12);
  const std::vector<double> w = {3, 1};
  EXPECT_NEAR((AverageGrids(members, w).Get(0, 0) - Eigen::Vector3d(0.75, 0.25, 0)).norm(), 0,
              1e-12);
}

TEST(Average, WeightValidation) {
  const std::vector<AccdoaGrid> members = {AccdoaGrid(1, 1), AccdoaGrid(1, 1)};
  EXPECT_THROW(AverageGrids(members, std::vector<double>{1.0}), ValidationError);
  EXPECT_THROW(AverageGrids(members, std::vector<double>{1.0, -0.1}), ValidationError);
  EXPECT_THROW(AverageGrids(members, std::vector<double>{0.0, 0.0}), ValidationError);
  EXPECT_THROW(AverageGrids(members, std::vector<double>{1.0, NAN}), ValidationError);
  EXPECT_THROW(AverageGrids(std::vector<AccdoaGrid>{AccdoaGrid(1, 1), AccdoaGrid(2, 1)}),
               ValidationError);
  EXPECT_THROW(AverageGrids(std::vector<AccdoaGrid>{}), ValidationError);
}

TEST(Presets, Table) {
  EXPECT_EQ(GetEnsemblePreset(1).member_count, 15);
  EXPECT_EQ(GetEnsemblePreset(2).threshold, 0.4);
  EXPECT_EQ(GetEnsemblePreset(3).averaging, Averaging::kWeighted);
  EXPECT_EQ(GetEnsemblePreset(4).member_count, 23);
  EXPECT_THROW(GetEnsemblePreset(5), ValidationError);
}

TEST(Presets, SpecValidation) {
  EnsembleSpec spec;
  spec.members = {"a", "b"};
  EXPECT_NO_THROW(spec.Validate());
  spec.averaging = Averaging::kWeighted;
  EXPECT_THROW(spec.Validate(), ValidationError);
  spec.weights = {1, 2};
  EXPECT_NO_THROW(spec.Validate());
  spec.preset = 3;
  EXPECT_THROW(spec.Validate(), ValidationError);
}

TEST(Ensemble, ManifestRunWithWindowedMember) {
  const fs::path dir = FreshDir("run");
  Rng rng(52);
  const int frames = 600;
  AccdoaGrid truth(frames, 12);
  for (int t = 0; t < frames; ++t) truth.Set(t, t % 12, AzElToVec(10 * (t % 30) - 150, 20).vector());
  // Member a: one whole-clip file. Member b: stitched windows.
  fs::create_directories(dir / "a");
  WriteGrid(truth, dir / "a" / "clip1.accd");
  fs::create_directories(dir / "b" / "clip1");
  for (int s : WindowStarts(frames)) {
    WriteGrid(Slice(truth, s, kWindowFrames), dir / "b" / "clip1" / (std::to_string(s) + ".accd"));
  }
  EXPECT_EQ(LoadMemberOutput(dir / "b", "clip1").frames(), WindowStarts(frames).back() + kWindowFrames);
  {
    std::ofstream(dir / "members.txt") << "a\n# comment\n\nb\n";
    std::ofstream(dir / "manifest.cfg") << "averaging = weighted\nweights = 1, 3\nthreshold = 0.5\n"
                                        << "members = members.txt\noutput_dir = out\n";
  }
  const EnsembleSpec spec = LoadManifest(dir / "manifest.cfg");
  ASSERT_EQ(spec.members.size(), 2u);
  EXPECT_EQ(spec.output_dir, dir / "out");
  const EnsembleReport report = RunEnsemble(spec);
  EXPECT_EQ(report.clips, std::vector<std::string>{"clip1"});
  const EventList out = ReadMetadata(dir / "out" / "clip1.csv", 12);
  EXPECT_EQ(out, DecodeGrid(truth, 0.5));
}

TEST(Ensemble, MissingMemberOutput) {
  const fs::path dir = FreshDir("missing");
  fs::create_directories(dir / "a");
  fs::create_directories(dir / "b");
  WriteGrid(AccdoaGrid(3, 12), dir / "a" / "x.accd");
  EnsembleSpec spec;
  spec.members = {dir / "a", dir / "b"};
  spec.output_dir = dir / "out";
  EXPECT_THROW(RunEnsemble(spec), IoError);
}

TEST(Ensemble, SearchWeightsPrefersAccurateMember) {
  Rng rng(53);
  std::vector<EventList> refs;
  std::vector<std::vector<AccdoaGrid>> grids(2);
  for (int clip = 0; clip < 3; ++clip) {
    std::vector<Event> events;
    for (int t = 0; t < 30; ++t) events.push_back({t, clip, 0, rng.UniformInt(-170, 170), 0});
    refs.emplace_back(12, events);
    const AccdoaGrid good = EncodeLabels(refs.back(), 30, 12);
    AccdoaGrid bad(30, 12);
    for (int t = 0; t < 30; ++t) bad.Set(t, (clip + 5) % 12, Eigen::Vector3d(0, 0, 1));
    grids[0].push_back(bad);
    grids[1].push_back(good);
  }
  const WeightSearchResult r = SearchWeights(grids, refs, 0.3);
  ASSERT_EQ(r.weights.size(), 2u);
  EXPECT_GT(r.weights[1], r.weights[0]);
  EXPECT_NEAR(r.score, 0.0, 1e-9);
}

}  // namespace
}  // namespace seld
