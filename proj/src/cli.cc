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

#include "seld/cli.h"

#include <algorithm>
#include <fstream>
#include <set>

#include <CLI11.hpp>

#include "seld/accdoa.h"
#include "seld/augment.h"
#include "seld/binary_io.h"
#include "seld/config.h"
#include "seld/dsp/feature_io.h"
#include "seld/dsp/features.h"
#include "seld/ensemble.h"
#include "seld/errors.h"
#include "seld/grid_io.h"
#include "seld/irs/pipeline.h"
#include "seld/logging.h"
#include "seld/metrics.h"
#include "seld/parallel.h"
#include "seld/spatial.h"
#include "seld/wav_io.h"

namespace seld {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> ListByExtension(const fs::path& dir, const std::string& ext) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::string> stems;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ext) stems.push_back(e.path().stem().string());
  }
  std::sort(stems.begin(), stems.end());
  return stems;
}

// --- features ---------------------------------------------------------------

struct FeaturesArgs {
  std::string audio_dir;
  std::string out;
  std::string kinds = "amp,ipd";
  int frame_length = 480;
  int hop = 240;
  int fft_size = 512;
};

dsp::FeatureTensor ComputeFeatures(const FoaClip& clip, const FeaturesArgs& a) {
  dsp::StftConfig cfg;
  cfg.frame_length = a.frame_length;
  cfg.hop = a.hop;
  cfg.fft_size = a.fft_size;
  const dsp::SpectralTensor spec = dsp::Stft(clip, cfg);
  std::vector<dsp::FeatureTensor> parts;
  std::stringstream ss(a.kinds);
  std::string kind;
  while (std::getline(ss, kind, ',')) {
    if (kind == "amp") {
      parts.push_back(dsp::Amplitude(spec));
    } else if (kind == "logamp") {
      parts.push_back(dsp::Amplitude(spec, true));
    } else if (kind == "ipd") {
      parts.push_back(dsp::Ipd(spec));
    } else if (kind == "cossinipd") {
      parts.push_back(dsp::CosSinIpd(spec));
    } else if (kind == "pcen") {
      parts.push_back(dsp::Pcen(dsp::Amplitude(spec)));
    } else {
      throw ValidationError("unknown feature kind '" + kind + "'");
    }
  }
  if (parts.empty()) throw ValidationError("no feature kinds selected");
  return dsp::FeatureTensor::Concat(parts);
}

int RunFeatures(const FeaturesArgs& a, int jobs, std::ostream& out) {
  StageTimer timer("features");
  const auto stems = ListByExtension(a.audio_dir, ".wav");
  ParallelFor(stems.size(), jobs, [&](size_t i) {
    const FoaClip clip = ReadWav(fs::path(a.audio_dir) / (stems[i] + ".wav"));
    dsp::WriteFeatures(ComputeFeatures(clip, a), fs::path(a.out) / (stems[i] + ".feat"));
  });
  timer.AddCounter("files", static_cast<long long>(stems.size()));
  out << "features " << stems.size() << " files\n";
  return kExitOk;
}

// --- augment ----------------------------------------------------------------

struct AugmentArgs {
  std::string audio_dir;
  std::string meta_dir;
  std::string features_dir;
  std::string out;
  std::optional<uint64_t> seed;
  bool emda = false;
  bool specaugment = false;
  std::string rotations;
  int class_count = kDefaultClassCount;
  std::string bit_depth = "32f";
};

EmdaConfig EmdaFromConfig(const KeyValueConfig& c) {
  EmdaConfig e;
  e.max_mixed_events = c.GetInt("emda.max_mixed_events", e.max_mixed_events);
  e.gain_db_min = c.GetDouble("emda.gain_db_min", e.gain_db_min);
  e.gain_db_max = c.GetDouble("emda.gain_db_max", e.gain_db_max);
  e.delay_min = c.GetInt("emda.delay_min", static_cast<int>(e.delay_min));
  e.delay_max = c.GetInt("emda.delay_max", static_cast<int>(e.delay_max));
  e.eq_freq_min_hz = c.GetDouble("emda.eq_freq_min_hz", e.eq_freq_min_hz);
  e.eq_freq_max_hz = c.GetDouble("emda.eq_freq_max_hz", e.eq_freq_max_hz);
  e.eq_gain_db_min = c.GetDouble("emda.eq_gain_db_min", e.eq_gain_db_min);
  e.eq_gain_db_max = c.GetDouble("emda.eq_gain_db_max", e.eq_gain_db_max);
  e.eq_q = c.GetDouble("emda.eq_q", e.eq_q);
  e.label_hop_s = c.GetDouble("label_hop_s", e.label_hop_s);
  e.Validate();
  return e;
}

SpecAugmentConfig SpecAugmentFromConfig(const KeyValueConfig& c) {
  SpecAugmentConfig s;
  s.max_time_masks = c.GetInt("specaugment.max_time_masks", s.max_time_masks);
  s.max_time_width = c.GetInt("specaugment.max_time_width", s.max_time_width);
  s.max_freq_masks = c.GetInt("specaugment.max_freq_masks", s.max_freq_masks);
  s.max_freq_width = c.GetInt("specaugment.max_freq_width", s.max_freq_width);
  s.channel_mask_prob = c.GetDouble("specaugment.channel_mask_prob", s.channel_mask_prob);
  s.Validate();
  return s;
}

int RunAugment(const AugmentArgs& a, const KeyValueConfig& cfg, int jobs, std::ostream& out) {
  if (!a.emda && !a.specaugment && a.rotations.empty()) {
    throw ValidationError("select at least one of --emda, --specaugment, --rotations");
  }
  if ((a.emda || a.specaugment) && !a.seed) {
    throw ValidationError("--seed is required for stochastic augmentation");
  }
  StageTimer timer("augment");
  const fs::path out_dir(a.out);
  const WavEncoding enc = ParseWavEncoding(a.bit_depth);

  if (a.emda || !a.rotations.empty()) {
    if (a.audio_dir.empty() || a.meta_dir.empty()) {
      throw ValidationError("--audio-dir and --meta-dir are required for --emda/--rotations");
    }
    const auto stems = ListByExtension(a.audio_dir, ".wav");
    auto load = [&](size_t i) {
      return LabeledClip{ReadWav(fs::path(a.audio_dir) / (stems[i] + ".wav")),
                         ReadMetadata(fs::path(a.meta_dir) / (stems[i] + ".csv"), a.class_count)};
    };
    if (a.emda) {
      const EmdaConfig emda = EmdaFromConfig(cfg);
      ParallelFor(stems.size(), jobs, [&](size_t i) {
        Rng rng = Rng::ForUnit(*a.seed, i);
        const LabeledClip base = load(i);
        std::vector<LabeledClip> extras;
        if (stems.size() > 1) {
          const int n = rng.UniformInt(0, emda.max_mixed_events);
          for (int k = 0; k < n; ++k) {
            size_t j = static_cast<size_t>(rng.UniformInt(0, static_cast<int>(stems.size()) - 2));
            if (j >= i) ++j;
            extras.push_back(load(j));
          }
        }
        const LabeledClip mixed = Emda(base, extras, rng, emda);
        WriteWav(mixed.clip, out_dir / "foa" / (stems[i] + "_emda.wav"), enc);
        WriteMetadata(mixed.events, out_dir / "metadata" / (stems[i] + "_emda.csv"));
      });
      timer.AddCounter("emda", static_cast<long long>(stems.size()));
    }
    if (!a.rotations.empty()) {
      const auto all = DiscreteRotationSet();
      const auto chosen = ParseRotationSpec(a.rotations);
      std::vector<int> indices;
      for (const auto& r : chosen) {
        for (int k = 0; k < static_cast<int>(all.size()); ++k) {
          if (all[k] == r) indices.push_back(k);
        }
      }
      ParallelFor(stems.size(), jobs, [&](size_t i) {
        const LabeledClip base = load(i);
        for (int k : indices) {
          const std::string name = stems[i] + "_rot" + std::to_string(k);
          WriteWav(RotateFoa(base.clip, all[k]), out_dir / "foa" / (name + ".wav"), enc);
          WriteMetadata(RotateLabels(base.events, all[k]), out_dir / "metadata" / (name + ".csv"));
        }
      });
      timer.AddCounter("rotated", static_cast<long long>(stems.size() * indices.size()));
    }
  }
  if (a.specaugment) {
    if (a.features_dir.empty()) throw ValidationError("--features-dir is required for --specaugment");
    const SpecAugmentConfig sa = SpecAugmentFromConfig(cfg);
    const auto stems = ListByExtension(a.features_dir, ".feat");
    ParallelFor(stems.size(), jobs, [&](size_t i) {
      Rng rng = Rng::ForUnit(*a.seed, i);
      const auto feats = dsp::ReadFeatures(fs::path(a.features_dir) / (stems[i] + ".feat"));
      dsp::WriteFeatures(SpecAugmentMc(feats, rng, sa), out_dir / "features" / (stems[i] + ".feat"));
    });
    timer.AddCounter("specaugment", static_cast<long long>(stems.size()));
  }
  out << "augment done\n";
  return kExitOk;
}

// --- irs --------------------------------------------------------------------

struct IrsArgs {
  std::string audio_dir;
  std::string meta_dir;
  std::string out;
  std::string verdicts;
  std::string segments;
  double score_threshold = 0.5;
  int min_frames = 5;
  int max_frames = 50;
  bool no_beamform = false;
  bool from_labels = false;
  std::optional<uint64_t> seed;
  int count = 1;
  std::string mode = "eigenmike";
  double clip_seconds = 60.0;
  int max_order = -1;
  int class_count = kDefaultClassCount;
  std::string bit_depth = "32f";
};

irs::SegmentConfig SegmentArgs(const IrsArgs& a) {
  irs::SegmentConfig s;
  s.min_frames = a.min_frames;
  s.max_frames = a.max_frames;
  return s;
}

int RunIrsExtract(const IrsArgs& a, int jobs, std::ostream& out) {
  irs::ExtractOptions o;
  o.audio_dir = a.audio_dir;
  o.meta_dir = a.meta_dir;
  o.out_dir = a.out;
  if (!a.verdicts.empty()) o.verdicts = fs::path(a.verdicts);
  o.score_threshold = a.score_threshold;
  o.class_count = a.class_count;
  o.segment = SegmentArgs(a);
  o.beamform = !a.no_beamform;
  o.jobs = jobs;
  const irs::ExtractReport r = irs::RunExtract(o);
  out << "clips " << r.clips << ", candidates " << r.candidates << ", stage1 " << r.stage1_kept
      << ", stage2 " << r.stage2_kept << "\n";
  return kExitOk;
}

int RunIrsVerdicts(const IrsArgs& a, int jobs, std::ostream& out) {
  const auto candidates =
      irs::CollectCandidates(a.audio_dir, a.meta_dir, a.class_count, SegmentArgs(a), jobs);
  std::string text;
  if (a.from_labels) {
    for (const auto& c : candidates) {
      text += c.id;
      for (int k = 0; k < a.class_count; ++k) text += k == c.class_id ? ",1" : ",0";
      text += "\n";
    }
  } else {
    text = irs::FormatCandidates(candidates);
  }
  WriteFileBytes(a.out, text);
  out << "candidates " << candidates.size() << "\n";
  return kExitOk;
}

int RunIrsSimulate(const IrsArgs& a, int jobs, std::ostream& out) {
  if (!a.seed) throw ValidationError("--seed is required for irs simulate");
  irs::SimulateOptions o;
  if (!a.segments.empty()) o.segments_dir = fs::path(a.segments);
  o.out_dir = a.out;
  o.seed = *a.seed;
  o.count = a.count;
  if (a.mode == "eigenmike") {
    o.mode = irs::RirMode::kEigenmike;
  } else if (a.mode == "direct-foa") {
    o.mode = irs::RirMode::kDirectFoa;
  } else {
    throw ValidationError("--mode must be eigenmike or direct-foa");
  }
  o.clip_seconds = a.clip_seconds;
  o.class_count = a.class_count;
  o.simulation.max_order = a.max_order;
  o.encoding = ParseWavEncoding(a.bit_depth);
  o.jobs = jobs;
  const int n = irs::RunSimulate(o);
  out << "simulated " << n << " clips\n";
  return kExitOk;
}

// --- encode / decode --------------------------------------------------------

struct CodecArgs {
  std::string input;
  std::string out;
  int frames = -1;
  int class_count = kDefaultClassCount;
  double threshold = kThresholdLow;
};

int RunEncode(const CodecArgs& a, std::ostream& out) {
  auto encode_one = [&](const fs::path& in, const fs::path& dst) {
    const EventList events = ReadMetadata(in, a.class_count);
    const int frames = a.frames > 0 ? a.frames : events.FrameSpan();
    EncodeStats stats;
    WriteGrid(EncodeLabels(events, frames, a.class_count, &stats), dst);
    return stats.collisions;
  };
  int collisions = 0;
  size_t files = 0;
  if (fs::is_directory(a.input)) {
    for (const auto& stem : ListByExtension(a.input, ".csv")) {
      collisions += encode_one(fs::path(a.input) / (stem + ".csv"), fs::path(a.out) / (stem + ".accd"));
      ++files;
    }
  } else {
    collisions += encode_one(a.input, a.out);
    files = 1;
  }
  out << "encoded " << files << " files, " << collisions << " collisions\n";
  return kExitOk;
}

int RunDecode(const CodecArgs& a, std::ostream& out) {
  size_t files = 0;
  if (fs::is_directory(a.input)) {
    std::set<std::string> stems;
    for (const char* ext : {".accd", ".ein2"}) {
      for (const auto& s : ListByExtension(a.input, ext)) {
        if (!stems.insert(s).second) throw ValidationError("both .accd and .ein2 for " + s);
        const fs::path src = fs::path(a.input) / (s + ext);
        WriteMetadata(DecodeGrid(ReadAnyAsGrid(src), a.threshold), fs::path(a.out) / (s + ".csv"));
        ++files;
      }
    }
  } else {
    WriteMetadata(DecodeGrid(ReadAnyAsGrid(a.input), a.threshold), a.out);
    files = 1;
  }
  out << "decoded " << files << " files\n";
  return kExitOk;
}

// --- ensemble / evaluate ----------------------------------------------------

struct EnsembleArgs {
  std::string manifest;
  std::string output_dir;
};

int RunEnsembleCmd(const EnsembleArgs& a, int jobs, std::ostream& out) {
  EnsembleSpec spec = LoadManifest(a.manifest);
  if (!a.output_dir.empty()) spec.output_dir = a.output_dir;
  spec.jobs = jobs;
  const EnsembleReport r = RunEnsemble(spec);
  out << "ensemble members " << r.members << ", clips " << r.clips.size() << "\n";
  if (r.evaluation) out << FormatMetricsLine(r.evaluation->Totals()) << "\n";
  return kExitOk;
}

struct EvaluateArgs {
  std::string pred;
  std::string ref;
  double threshold_deg = 20.0;
  int segment_frames = 10;
  int class_count = kDefaultClassCount;
  bool allow_missing = false;
  std::string report_csv;
  bool table = false;
};

int RunEvaluate(const EvaluateArgs& a, int jobs, std::ostream& out) {
  CorpusOptions o;
  o.metric.threshold_deg = a.threshold_deg;
  o.metric.segment_frames = a.segment_frames;
  o.class_count = a.class_count;
  o.allow_missing = a.allow_missing;
  o.jobs = jobs;
  const CorpusReport r = EvaluateCorpus(a.pred, a.ref, o);
  if (!a.report_csv.empty()) WriteFileBytes(a.report_csv, r.ToCsv());
  if (a.table) out << r.ToTable();
  const SeldMetrics m = r.Totals();
  out << FormatMetricsLine(m) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "SELD %.4f\n", SeldScore(m));
  out << buf;
  return kExitOk;
}

// --- config plumbing --------------------------------------------------------

std::optional<std::string> FindConfigPath(const std::vector<std::string>& args) {
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

std::optional<std::string> LookupKey(const KeyValueConfig& cfg, const std::string& prefix,
                                     const std::string& name) {
  std::string under = name;
  std::replace(under.begin(), under.end(), '-', '_');
  for (const std::string& key : {prefix + name, prefix + under, name, under}) {
    if (auto v = cfg.Find(key)) return v;
  }
  return std::nullopt;
}

// Values from the config file become option defaults; flags on the command
// line still win.
void ApplyConfig(CLI::App* app, const KeyValueConfig& cfg, const std::string& prefix) {
  for (CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "version" || name == "config") continue;
    if (auto v = LookupKey(cfg, prefix, name)) {
      opt->required(false);
      opt->default_val(*v);
    }
  }
  for (CLI::App* sub : app->get_subcommands({})) {
    ApplyConfig(sub, cfg, prefix + sub->get_name() + ".");
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sound event localization and detection data toolkit", "seldkit"};
  app.set_version_flag("--version", std::string("seldkit ") + SELDKIT_VERSION + " (format " +
                                        std::to_string(SELDKIT_FORMAT_VERSION) + ")");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  int jobs = DefaultJobs();
  std::string log_level = "info";
  app.add_option("--config", config_path, "key=value config file (flags override it)");
  app.add_option("--jobs", jobs, "worker threads for per-file stages")->check(CLI::PositiveNumber);
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off");

  FeaturesArgs fa;
  CLI::App* features = app.add_subcommand("features", "STFT features for every WAV in a directory");
  features->add_option("--audio-dir", fa.audio_dir)->required();
  features->add_option("--out", fa.out)->required();
  features->add_option("--kinds", fa.kinds, "comma list of amp,logamp,ipd,cossinipd,pcen");
  features->add_option("--frame-length", fa.frame_length);
  features->add_option("--hop", fa.hop);
  features->add_option("--fft-size", fa.fft_size);

  AugmentArgs aa;
  CLI::App* augment = app.add_subcommand("augment", "EMDA, FOA rotation and SpecAugment");
  augment->add_option("--audio-dir", aa.audio_dir);
  augment->add_option("--meta-dir", aa.meta_dir);
  augment->add_option("--features-dir", aa.features_dir);
  augment->add_option("--out", aa.out)->required();
  augment->add_option("--seed", aa.seed);
  augment->add_flag("--emda", aa.emda);
  augment->add_flag("--specaugment", aa.specaugment);
  augment->add_option("--rotations", aa.rotations, "all16|identity|list:<i>,<j>");
  augment->add_option("--class-count", aa.class_count);
  augment->add_option("--bit-depth", aa.bit_depth, "16|24|32f");

  IrsArgs ia;
  CLI::App* irs_cmd = app.add_subcommand("irs", "impulse response simulation augmentation");
  irs_cmd->require_subcommand(1);
  CLI::App* extract = irs_cmd->add_subcommand("extract", "extract and beamform source segments");
  extract->add_option("--audio-dir", ia.audio_dir)->required();
  extract->add_option("--meta-dir", ia.meta_dir)->required();
  extract->add_option("--out", ia.out)->required();
  extract->add_option("--verdicts", ia.verdicts, "segment_id,score_0..score_{C-1} CSV");
  extract->add_option("--score-threshold", ia.score_threshold);
  extract->add_option("--min-frames", ia.min_frames);
  extract->add_option("--max-frames", ia.max_frames);
  extract->add_flag("--no-beamform", ia.no_beamform);
  extract->add_option("--class-count", ia.class_count);
  CLI::App* verdicts = irs_cmd->add_subcommand("verdicts", "list segment candidates for scoring");
  verdicts->add_option("--audio-dir", ia.audio_dir)->required();
  verdicts->add_option("--meta-dir", ia.meta_dir)->required();
  verdicts->add_option("--out", ia.out)->required();
  verdicts->add_option("--min-frames", ia.min_frames);
  verdicts->add_option("--max-frames", ia.max_frames);
  verdicts->add_option("--class-count", ia.class_count);
  verdicts->add_flag("--from-labels", ia.from_labels, "emit one-hot verdicts from the labels");
  CLI::App* simulate = irs_cmd->add_subcommand("simulate", "synthesize labelled FOA clips");
  simulate->add_option("--segments", ia.segments, "directory written by irs extract");
  simulate->add_option("--out", ia.out)->required();
  simulate->add_option("--seed", ia.seed);
  simulate->add_option("--count", ia.count);
  simulate->add_option("--mode", ia.mode, "eigenmike|direct-foa");
  simulate->add_option("--clip-seconds", ia.clip_seconds);
  simulate->add_option("--max-order", ia.max_order, "-1 chooses per source");
  simulate->add_option("--class-count", ia.class_count);
  simulate->add_option("--bit-depth", ia.bit_depth, "16|24|32f");

  CodecArgs ea;
  CLI::App* encode = app.add_subcommand("encode", "metadata CSV -> ACCDOA grid");
  encode->add_option("--meta", ea.input, "CSV file or directory")->required();
  encode->add_option("--out", ea.out)->required();
  encode->add_option("--frames", ea.frames, "label frames (default: last event + 1)");
  encode->add_option("--class-count", ea.class_count);

  CodecArgs da;
  CLI::App* decode = app.add_subcommand("decode", "ACCDOA/EINV2 output -> metadata CSV");
  decode->add_option("--grid", da.input, "grid file or directory")->required();
  decode->add_option("--out", da.out)->required();
  decode->add_option("--threshold", da.threshold)->check(CLI::PositiveNumber);

  EnsembleArgs na;
  CLI::App* ensemble = app.add_subcommand("ensemble", "average member outputs and decode");
  ensemble->add_option("--manifest", na.manifest)->required();
  ensemble->add_option("--output-dir", na.output_dir);

  EvaluateArgs va;
  CLI::App* evaluate = app.add_subcommand("evaluate", "ER/F/LE/LR over a corpus");
  evaluate->add_option("--pred", va.pred)->required();
  evaluate->add_option("--ref", va.ref)->required();
  evaluate->add_option("--threshold-deg", va.threshold_deg);
  evaluate->add_option("--segment-frames", va.segment_frames);
  evaluate->add_option("--class-count", va.class_count);
  evaluate->add_flag("--allow-missing", va.allow_missing);
  evaluate->add_option("--report-csv", va.report_csv);
  evaluate->add_flag("--table", va.table, "print the per-file table");

  CLI::App* selftest = app.add_subcommand("selftest", "run the embedded invariant checks");

  KeyValueConfig cfg;
  try {
    if (const auto path = FindConfigPath(args)) {
      cfg = KeyValueConfig::Load(*path);
      ApplyConfig(&app, cfg, "");
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  Log().set_level(spdlog::level::from_str(log_level));
  try {
    if (features->parsed()) return RunFeatures(fa, jobs, out);
    if (augment->parsed()) return RunAugment(aa, cfg, jobs, out);
    if (extract->parsed()) return RunIrsExtract(ia, jobs, out);
    if (verdicts->parsed()) return RunIrsVerdicts(ia, jobs, out);
    if (simulate->parsed()) return RunIrsSimulate(ia, jobs, out);
    if (encode->parsed()) return RunEncode(ea, out);
    if (decode->parsed()) return RunDecode(da, out);
    if (ensemble->parsed()) return RunEnsembleCmd(na, jobs, out);
    if (evaluate->parsed()) return RunEvaluate(va, jobs, out);
    if (selftest->parsed()) return RunSelfTest(out) == 0 ? kExitOk : kExitValidation;
  } catch (const Error& e) {
    Log().error("msg=\"{}\"", e.what());
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace seld
