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

#include "seld/irs/pipeline.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "seld/augment.h"
#include "seld/binary_io.h"
#include "seld/errors.h"
#include "seld/logging.h"
#include "seld/parallel.h"

namespace seld::irs {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> WavStems(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::string> stems;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".wav") {
      stems.push_back(e.path().stem().string());
    }
  }
  std::sort(stems.begin(), stems.end());
  return stems;
}

std::string UnitName(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "irs_%05d", index);
  return buf;
}

}  // namespace

std::vector<SegmentCandidate> CollectCandidates(const fs::path& audio_dir, const fs::path& meta_dir,
                                                int class_count, const SegmentConfig& segment,
                                                int jobs) {
  const auto stems = WavStems(audio_dir);
  std::vector<std::vector<SegmentCandidate>> per_clip(stems.size());
  ParallelFor(stems.size(), jobs, [&](size_t i) {
    const fs::path meta = meta_dir / (stems[i] + ".csv");
    if (!fs::is_regular_file(meta)) throw IoError("missing metadata " + meta.string());
    const AudioBuffer audio = ReadWavBuffer(audio_dir / (stems[i] + ".wav"));
    per_clip[i] = ExtractSegments(stems[i], audio.num_samples(), audio.sample_rate,
                                  ReadMetadata(meta, class_count), segment);
  });
  std::vector<SegmentCandidate> all;
  for (auto& v : per_clip) all.insert(all.end(), v.begin(), v.end());
  return all;
}

ExtractReport RunExtract(const ExtractOptions& options) {
  StageTimer timer("irs.extract");
  ExtractReport report;
  report.clips = static_cast<int>(WavStems(options.audio_dir).size());
  const auto candidates = CollectCandidates(options.audio_dir, options.meta_dir,
                                            options.class_count, options.segment, options.jobs);
  report.candidates = static_cast<int>(candidates.size());

  std::optional<Verdicts> verdicts;
  if (options.verdicts) verdicts = ReadVerdicts(*options.verdicts, options.class_count);
  const auto stage1 = Stage1Filter(candidates, verdicts, options.score_threshold);
  report.stage1_kept = static_cast<int>(stage1.size());

  std::string rejected;
  {
    std::set<std::string> kept_ids;
    for (const auto& c : stage1) kept_ids.insert(c.id);
    for (const auto& c : candidates) {
      if (!kept_ids.count(c.id)) rejected += c.id + ",stage1\n";
    }
  }

  fs::create_directories(options.out_dir);
  std::vector<std::string> reasons(stage1.size());
  ParallelFor(stage1.size(), options.jobs, [&](size_t i) {
    const SegmentCandidate& c = stage1[i];
    const FoaClip clip = ReadWav(options.audio_dir / (c.clip + ".wav"));
    const FoaClip seg = SliceClip(clip, c.start_sample, c.end_sample);
    const EigenFilterResult eig = Stage2EigenFilter(seg, options.eigen);
    if (!eig.keep) {
      reasons[i] = eig.reason;
      return;
    }
    Signal source;
    if (options.beamform) {
      CgmmConfig cgmm = options.cgmm;
      cgmm.target_direction = AzElToVec(c.azimuth_deg, c.elevation_deg).vector();
      source = CgmmMvdr(seg, cgmm).signal;
    } else {
      source = seg.channel(kAcnW);
    }
    AudioBuffer mono{seg.sample_rate(), {std::move(source)}};
    WriteWavBuffer(mono, options.out_dir / (c.id + ".wav"));
    WriteFileBytes(options.out_dir / (c.id + ".csv"), FormatCandidates({c}));
  });

  std::vector<SegmentCandidate> kept;
  for (size_t i = 0; i < stage1.size(); ++i) {
    if (reasons[i].empty()) {
      kept.push_back(stage1[i]);
    } else {
      rejected += stage1[i].id + "," + reasons[i] + "\n";
    }
  }
  report.stage2_kept = static_cast<int>(kept.size());
  WriteFileBytes(options.out_dir / "index.csv", FormatCandidates(kept));
  WriteFileBytes(options.out_dir / "rejected.csv", rejected);
  timer.AddCounter("clips", report.clips);
  timer.AddCounter("candidates", report.candidates);
  timer.AddCounter("stage1_kept", report.stage1_kept);
  timer.AddCounter("stage2_kept", report.stage2_kept);
  return report;
}

LabeledClip SimulateClip(const SimulateOptions& options, int index,
                         const std::vector<SegmentCandidate>& segments) {
  Rng rng = Rng::ForUnit(options.seed, static_cast<uint64_t>(index));
  RoomSpec room = SampleRoom(rng, options.room);
  const int sr = options.simulation.sample_rate;
  const size_t clip_samples = static_cast<size_t>(std::llround(options.clip_seconds * sr));

  std::vector<SynthesisSource> sources;
  for (size_t k = 0; k < room.sources.size(); ++k) {
    SynthesisSource s;
    if (!segments.empty()) {
      const SegmentCandidate& c =
          segments[rng.UniformInt(0, static_cast<int>(segments.size()) - 1)];
      const AudioBuffer mono = ReadWavBuffer(*options.segments_dir / (c.id + ".wav"));
      if (mono.sample_rate != sr || mono.channels.size() != 1) {
        throw FormatError("segment " + c.id + " must be mono at " + std::to_string(sr) + " Hz");
      }
      s.signal = mono.channels[0];
      s.class_id = c.class_id;
    } else {
      // Decaying noise burst of 0.5-2 s.
      const size_t len = static_cast<size_t>(rng.Uniform(0.5, 2.0) * sr);
      const double tau = rng.Uniform(0.1, 0.6) * sr;
      s.signal.resize(len);
      for (size_t n = 0; n < len; ++n) {
        s.signal[n] = static_cast<float>(rng.Normal() * 0.3 * std::exp(-static_cast<double>(n) / tau));
      }
      s.class_id = rng.UniformInt(0, options.class_count - 1);
    }
    sources.push_back(std::move(s));
  }
  const FoaRirSet rirs = SimulateFoaRirs(room, options.array, options.mode, options.simulation);
  SynthesisConfig synth = options.synthesis;
  synth.class_count = options.class_count;
  return Synthesize(sources, rirs, clip_samples, rng, synth);
}

int RunSimulate(const SimulateOptions& options) {
  if (options.count < 0) throw ValidationError("count must be >= 0");
  if (!(options.clip_seconds > 0)) throw ValidationError("clip length must be positive");
  StageTimer timer("irs.simulate");
  std::vector<SegmentCandidate> segments;
  if (options.segments_dir) {
    segments = ParseCandidates(ReadFileBytes(*options.segments_dir / "index.csv"));
    if (segments.empty()) throw ValidationError("no segments in " + options.segments_dir->string());
  } else {
    Log().warn("stage=irs.simulate msg=\"no segments given, using noise-burst sources\"");
  }
  fs::create_directories(options.out_dir / "foa");
  fs::create_directories(options.out_dir / "metadata");
  ParallelFor(static_cast<size_t>(options.count), options.jobs, [&](size_t i) {
    const LabeledClip clip = SimulateClip(options, static_cast<int>(i), segments);
    const std::string name = UnitName(static_cast<int>(i));
    WriteWav(clip.clip, options.out_dir / "foa" / (name + ".wav"), options.encoding);
    WriteMetadata(clip.events, options.out_dir / "metadata" / (name + ".csv"));
  });
  timer.AddCounter("clips", options.count);
  return options.count;
}

}  // namespace seld::irs
