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

#ifndef SELD_METRICS_H_
#define SELD_METRICS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "seld/event_list.h"

namespace seld {

struct MetricConfig {
  double threshold_deg = 20.0;  // TP needs distance strictly below this
  int segment_frames = 10;      // 1 s at 100 ms label frames
};

struct SeldMetrics {
  double er = 0.0;
  double f = 1.0;
  double le_deg = 0.0;
  double lr = 1.0;
};

// Additive counters; Merge is associative and commutative.
struct MetricAccumulator {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  // Class-dependent matching, independent of the angle threshold.
  long long matched = 0;
  double distance_sum_deg = 0.0;
  // Per-segment error tallies summed over segments.
  long long substitutions = 0;
  long long deletions = 0;
  long long insertions = 0;
  long long reference_count = 0;

  void Merge(const MetricAccumulator& other);
  // F is 1 when there is nothing to detect, LE is 180 with no matched pairs
  // and LR is 1 when there are no references.
  SeldMetrics Compute() const;
  bool operator==(const MetricAccumulator& other) const = default;
};

// Adds the counters of one clip. Throws ValidationError when the class counts
// differ or the config is invalid.
void AccumulateClip(const EventList& pred, const EventList& ref, const MetricConfig& config,
                    MetricAccumulator* acc);

SeldMetrics Evaluate(const EventList& pred, const EventList& ref, const MetricConfig& config = {});

// Mean of (er, 1 - f, le / 180, 1 - lr).
double SeldScore(double er, double f, double le_deg, double lr);
inline double SeldScore(const SeldMetrics& m) { return SeldScore(m.er, m.f, m.le_deg, m.lr); }

struct FileReport {
  std::string name;
  bool missing_prediction = false;
  MetricAccumulator counters;
};

struct CorpusReport {
  std::vector<FileReport> files;
  MetricAccumulator total;
  SeldMetrics Totals() const { return total.Compute(); }
  std::string ToCsv() const;
  std::string ToTable() const;
};

struct CorpusOptions {
  MetricConfig metric;
  int class_count = kDefaultClassCount;
  bool allow_missing = false;
  int jobs = 1;
};

// Micro-averages every `*.csv` of `ref_dir` against the same name in
// `pred_dir`. Missing counterparts abort with a ValidationError that lists
// them, unless allow_missing (a missing prediction then counts as empty and a
// prediction without a reference is skipped). An empty corpus is an error.
CorpusReport EvaluateCorpus(const std::filesystem::path& pred_dir,
                            const std::filesystem::path& ref_dir, const CorpusOptions& options);

// "ER 0.00, F 100.0, LE 0.0, LR 100.0"
std::string FormatMetricsLine(const SeldMetrics& m);

}  // namespace seld

#endif  // SELD_METRICS_H_
