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

#include "seld/metrics.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "seld/doa.h"
#include "seld/errors.h"
#include "seld/hungarian.h"
#include "seld/logging.h"
#include "seld/parallel.h"

namespace seld {
namespace {

struct SegmentEvent {
  int class_id;
  Eigen::Vector3d doa;
};

// (class, track) -> events with their active frames inside one segment.
using TrackFrames = std::map<std::pair<int, int>, std::vector<const Event*>>;

std::vector<TrackFrames> GroupBySegment(const EventList& list, int segment_frames,
                                        int segments) {
  std::vector<TrackFrames> out(segments);
  for (const Event& e : list.events()) {
    out[e.frame / segment_frames][{e.class_id, e.track_id}].push_back(&e);
  }
  return out;
}

// The lower-median active frame stands in for the whole segment.
std::vector<SegmentEvent> Representatives(const TrackFrames& tracks) {
  std::vector<SegmentEvent> out;
  out.reserve(tracks.size());
  for (const auto& [key, events] : tracks) {
    const Event* e = events[(events.size() - 1) / 2];  // events are frame-sorted
    out.push_back({key.first, AzElToVec(e->azimuth_deg, e->elevation_deg).vector()});
  }
  return out;
}

}  // namespace

void MetricAccumulator::Merge(const MetricAccumulator& o) {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  matched += o.matched;
  distance_sum_deg += o.distance_sum_deg;
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  reference_count += o.reference_count;
}

SeldMetrics MetricAccumulator::Compute() const {
  SeldMetrics m;
  m.er = static_cast<double>(substitutions + deletions + insertions) /
         static_cast<double>(std::max<long long>(reference_count, 1));
  const long long denom = 2 * tp + fp + fn;
  m.f = denom == 0 ? 1.0 : 2.0 * tp / static_cast<double>(denom);
  m.le_deg = matched == 0 ? 180.0 : distance_sum_deg / static_cast<double>(matched);
  m.lr = reference_count == 0 ? 1.0
                              : static_cast<double>(matched) / static_cast<double>(reference_count);
  return m;
}

void AccumulateClip(const EventList& pred, const EventList& ref, const MetricConfig& config,
                    MetricAccumulator* acc) {
  if (pred.class_count() != ref.class_count()) {
    throw ValidationError("class count mismatch: prediction " +
                          std::to_string(pred.class_count()) + ", reference " +
                          std::to_string(ref.class_count()));
  }
  if (config.segment_frames <= 0) throw ValidationError("segment length must be positive");
  if (!(config.threshold_deg > 0.0)) throw ValidationError("angle threshold must be positive");

  const int span = std::max(pred.FrameSpan(), ref.FrameSpan());
  const int segments = (span + config.segment_frames - 1) / config.segment_frames;
  const auto pred_seg = GroupBySegment(pred, config.segment_frames, segments);
  const auto ref_seg = GroupBySegment(ref, config.segment_frames, segments);

  for (int s = 0; s < segments; ++s) {
    const auto preds = Representatives(pred_seg[s]);
    const auto refs = Representatives(ref_seg[s]);
    long long seg_fp = 0, seg_fn = 0;
    for (int c = 0; c < ref.class_count(); ++c) {
      std::vector<Eigen::Vector3d> p, r;
      for (const auto& e : preds) {
        if (e.class_id == c) p.push_back(e.doa);
      }
      for (const auto& e : refs) {
        if (e.class_id == c) r.push_back(e.doa);
      }
      if (p.empty() && r.empty()) continue;
      Eigen::MatrixXd cost(p.size(), r.size());
      for (size_t i = 0; i < p.size(); ++i) {
        for (size_t j = 0; j < r.size(); ++j) cost(i, j) = AngularDistanceDeg(p[i], r[j]);
      }
      const std::vector<int> assign = SolveAssignment(cost);
      long long pairs = 0;
      for (size_t i = 0; i < p.size(); ++i) {
        if (assign[i] < 0) continue;
        const double d = cost(i, assign[i]);
        ++pairs;
        acc->distance_sum_deg += d;
        if (d < config.threshold_deg) {
          ++acc->tp;
        } else {
          ++seg_fp;
          ++seg_fn;
        }
      }
      acc->matched += pairs;
      seg_fp += static_cast<long long>(p.size()) - pairs;
      seg_fn += static_cast<long long>(r.size()) - pairs;
    }
    acc->fp += seg_fp;
    acc->fn += seg_fn;
    acc->substitutions += std::min(seg_fp, seg_fn);
    acc->deletions += std::max(0LL, seg_fn - seg_fp);
    acc->insertions += std::max(0LL, seg_fp - seg_fn);
    acc->reference_count += static_cast<long long>(refs.size());
  }
}

SeldMetrics Evaluate(const EventList& pred, const EventList& ref, const MetricConfig& config) {
  MetricAccumulator acc;
  AccumulateClip(pred, ref, config, &acc);
  return acc.Compute();
}

double SeldScore(double er, double f, double le_deg, double lr) {
  return (er + (1.0 - f) + le_deg / 180.0 + (1.0 - lr)) / 4.0;
}

std::string FormatMetricsLine(const SeldMetrics& m) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "ER %.2f, F %.1f, LE %.1f, LR %.1f", m.er, 100.0 * m.f,
                m.le_deg, 100.0 * m.lr);
  return buf;
}

std::string CorpusReport::ToCsv() const {
  std::ostringstream os;
  os << "file,er,f,le_deg,lr,seld_score,missing\n";
  auto row = [&os](const std::string& name, const SeldMetrics& m, bool missing) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), ",%.6f,%.6f,%.6f,%.6f,%.6f,%d\n", m.er, m.f, m.le_deg, m.lr,
                  SeldScore(m), missing ? 1 : 0);
    os << name << buf;
  };
  for (const FileReport& f : files) row(f.name, f.counters.Compute(), f.missing_prediction);
  row("TOTAL", Totals(), false);
  return os.str();
}

std::string CorpusReport::ToTable() const {
  size_t width = 5;
  for (const FileReport& f : files) width = std::max(width, f.name.size());
  std::ostringstream os;
  auto line = [&](const std::string& name, const SeldMetrics& m) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-*s  %6.2f  %6.1f  %6.1f  %6.1f  %6.4f\n",
                  static_cast<int>(width), name.c_str(), m.er, 100.0 * m.f, m.le_deg,
                  100.0 * m.lr, SeldScore(m));
    os << buf;
  };
  char head[160];
  std::snprintf(head, sizeof(head), "%-*s  %6s  %6s  %6s  %6s  %6s\n", static_cast<int>(width),
                "file", "ER", "F", "LE", "LR", "SELD");
  os << head;
  for (const FileReport& f : files) line(f.name, f.counters.Compute());
  line("TOTAL", Totals());
  return os.str();
}

CorpusReport EvaluateCorpus(const std::filesystem::path& pred_dir,
                            const std::filesystem::path& ref_dir, const CorpusOptions& options) {
  namespace fs = std::filesystem;
  StageTimer timer("evaluate");
  auto list_csv = [](const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::set<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".csv") {
        names.insert(entry.path().filename().string());
      }
    }
    return names;
  };
  const std::set<std::string> refs = list_csv(ref_dir);
  const std::set<std::string> preds = list_csv(pred_dir);
  if (refs.empty()) throw ValidationError("empty reference corpus: " + ref_dir.string());

  std::vector<std::string> missing_pred, missing_ref;
  for (const auto& n : refs) {
    if (!preds.count(n)) missing_pred.push_back(n);
  }
  for (const auto& n : preds) {
    if (!refs.count(n)) missing_ref.push_back(n);
  }
  if (!options.allow_missing && (!missing_pred.empty() || !missing_ref.empty())) {
    std::string msg = "unmatched files:";
    for (const auto& n : missing_pred) msg += " pred/" + n;
    for (const auto& n : missing_ref) msg += " ref/" + n;
    throw ValidationError(msg);
  }
  for (const auto& n : missing_ref) Log().warn("stage=evaluate skipped={} reason=no_reference", n);

  CorpusReport report;
  for (const auto& n : refs) {
    FileReport f;
    f.name = n;
    f.missing_prediction = !preds.count(n);
    report.files.push_back(f);
  }
  auto run = [&](size_t i) {
    FileReport& f = report.files[i];
    const EventList ref = ReadMetadata(ref_dir / f.name, options.class_count);
    const EventList pred = f.missing_prediction
                               ? EventList(options.class_count)
                               : ReadMetadata(pred_dir / f.name, options.class_count);
    AccumulateClip(pred, ref, options.metric, &f.counters);
  };
  ParallelFor(report.files.size(), options.jobs, run);
  // Fixed order so the floating-point sum does not depend on scheduling.
  for (const FileReport& f : report.files) report.total.Merge(f.counters);
  timer.AddCounter("files", static_cast<long long>(report.files.size()));
  return report;
}

}  // namespace seld
