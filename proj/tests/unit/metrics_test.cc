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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>

#include "seld/doa.h"
#include "seld/errors.h"
#include "seld/event_list.h"
#include "seld/hungarian.h"
#include "seld/metrics.h"
#include "seld/random.h"
#include "support/oracles.h"

namespace seld {
namespace {

namespace fs = std::filesystem;

EventList RandomList(Rng& rng, int frames, int classes, int max_tracks) {
  std::vector<Event> events;
  for (int t = 0; t < frames; ++t) {
    for (int c = 0; c < classes; ++c) {
      const int n = rng.UniformInt(0, max_tracks);
      for (int k = 0; k < n; ++k) {
        events.push_back({t, c, k, rng.UniformInt(-180, 179), rng.UniformInt(-90, 90)});
      }
    }
  }
  return EventList(classes, std::move(events));
}

double BruteAssignmentCost(const Eigen::MatrixXd& cost) {
  // Rows <= cols: try every injection of rows into columns.
  std::vector<int> cols(cost.cols());
  std::iota(cols.begin(), cols.end(), 0);
  double best = 1e300;
  do {
    double total = 0;
    for (int i = 0; i < cost.rows(); ++i) total += cost(i, cols[i]);
    best = std::min(best, total);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

TEST(Assignment, MatchesExhaustiveSearch) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = rng.UniformInt(1, 5), cols = rng.UniformInt(1, 5);
    Eigen::MatrixXd cost(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) cost(i, j) = rng.UniformInt(0, 9);
    }
    const std::vector<int> a = SolveAssignment(cost);
    ASSERT_EQ(a.size(), static_cast<size_t>(rows));
    double total = 0;
    int assigned = 0;
    std::vector<int> used;
    for (int i = 0; i < rows; ++i) {
      if (a[i] < 0) continue;
      ++assigned;
      used.push_back(a[i]);
      total += cost(i, a[i]);
    }
    std::sort(used.begin(), used.end());
    EXPECT_EQ(std::adjacent_find(used.begin(), used.end()), used.end());
    EXPECT_EQ(assigned, std::min(rows, cols));
    const double best = rows <= cols ? BruteAssignmentCost(cost)
                                     : BruteAssignmentCost(cost.transpose());
    EXPECT_NEAR(total, best, 1e-9);
  }
}

TEST(Assignment, EmptyMatrix) {
  EXPECT_TRUE(SolveAssignment(Eigen::MatrixXd(0, 3)).empty());
  EXPECT_EQ(SolveAssignment(Eigen::MatrixXd(2, 0)), (std::vector<int>{-1, -1}));
}

TEST(Metrics, PerfectPrediction) {
  Rng rng(42);
  const EventList ref = RandomList(rng, 40, 5, 2);
  const SeldMetrics m = Evaluate(ref, ref);
  EXPECT_EQ(m.er, 0.0);
  EXPECT_EQ(m.f, 1.0);
  EXPECT_EQ(m.le_deg, 0.0);
  EXPECT_EQ(m.lr, 1.0);
  EXPECT_EQ(SeldScore(m), 0.0);
}

TEST(Metrics, EmptyCases) {
  const EventList empty(12, {});
  const SeldMetrics none = Evaluate(empty, empty);
  EXPECT_EQ(none.er, 0.0);
  EXPECT_EQ(none.f, 1.0);
  EXPECT_EQ(none.le_deg, 180.0);
  EXPECT_EQ(none.lr, 1.0);

  const EventList ref(12, {{0, 1, 0, 10, 0}, {12, 2, 0, 50, 0}});
  const SeldMetrics missed = Evaluate(empty, ref);
  EXPECT_EQ(missed.er, 1.0);
  EXPECT_EQ(missed.f, 0.0);
  EXPECT_EQ(missed.le_deg, 180.0);
  EXPECT_EQ(missed.lr, 0.0);

  const SeldMetrics spurious = Evaluate(ref, empty);
  EXPECT_EQ(spurious.er, 2.0);
  EXPECT_EQ(spurious.f, 0.0);
  EXPECT_EQ(spurious.lr, 1.0);
}

TEST(Metrics, OffByThirtyDegrees) {
  const EventList ref(12, {{0, 0, 0, 0, 0}});
  const EventList pred(12, {{0, 0, 0, 30, 0}});
  const SeldMetrics at20 = Evaluate(pred, ref, {20.0, 10});
  EXPECT_EQ(at20.er, 1.0);
  EXPECT_EQ(at20.f, 0.0);
  EXPECT_NEAR(at20.le_deg, 30.0, 1e-9);
  EXPECT_EQ(at20.lr, 1.0);
  const SeldMetrics at40 = Evaluate(pred, ref, {40.0, 10});
  EXPECT_EQ(at40.er, 0.0);
  EXPECT_EQ(at40.f, 1.0);
}

TEST(Metrics, ThresholdIsStrict) {
  const EventList ref(12, {{0, 0, 0, 0, 0}});
  const EventList pred(12, {{0, 0, 0, 20, 0}});
  const double d = AngularDistanceDeg(AzElToVec(20, 0), AzElToVec(0, 0));
  EXPECT_EQ(Evaluate(pred, ref, {d, 10}).f, 0.0);
  EXPECT_EQ(Evaluate(pred, ref, {std::nextafter(d, 90.0), 10}).f, 1.0);
}

TEST(Metrics, MatchesExhaustiveOracle) {
  Rng rng(43);
  int checked = 0;
  while (checked < 60) {
    const EventList ref = RandomList(rng, 20, 3, 3);
    const EventList pred = RandomList(rng, 20, 3, 3);
    const MetricConfig cfg{20.0, 10};
    const testing::OracleCounts o = testing::BruteForceMetrics(pred, ref, cfg);
    if (o.ambiguous) continue;
    ++checked;
    MetricAccumulator acc;
    AccumulateClip(pred, ref, cfg, &acc);
    EXPECT_EQ(acc.tp, o.tp);
    EXPECT_EQ(acc.fp, o.fp);
    EXPECT_EQ(acc.fn, o.fn);
    EXPECT_EQ(acc.matched, o.matched);
    EXPECT_NEAR(acc.distance_sum_deg, o.distance_sum_deg, 1e-6);
    EXPECT_EQ(acc.substitutions, o.s);
    EXPECT_EQ(acc.deletions, o.d);
    EXPECT_EQ(acc.insertions, o.i);
    EXPECT_EQ(acc.reference_count, o.n);
  }
}

TEST(Metrics, TrackIdsDoNotMatter) {
  Rng rng(44);
  const EventList ref = RandomList(rng, 30, 4, 3);
  const EventList pred = RandomList(rng, 30, 4, 3);
  std::vector<Event> renumbered = pred.events();
  for (Event& e : renumbered) e.track_id = 5 - e.track_id;
  const SeldMetrics a = Evaluate(pred, ref);
  const SeldMetrics b = Evaluate(EventList(4, renumbered), ref);
  EXPECT_DOUBLE_EQ(a.er, b.er);
  EXPECT_DOUBLE_EQ(a.f, b.f);
  EXPECT_NEAR(a.le_deg, b.le_deg, 1e-9);
  EXPECT_DOUBLE_EQ(a.lr, b.lr);
}

TEST(Metrics, ScoreMonotoneInThreshold) {
  Rng rng(45);
  for (int i = 0; i < 50; ++i) {
    const EventList ref = RandomList(rng, 20, 3, 2);
    const EventList pred = RandomList(rng, 20, 3, 2);
    double prev_f = -1;
    for (double th : {5.0, 20.0, 45.0, 90.0, 180.5}) {
      const SeldMetrics m = Evaluate(pred, ref, {th, 10});
      EXPECT_GE(m.f, prev_f);
      prev_f = m.f;
    }
  }
}

TEST(Metrics, MergeIsCommutative) {
  Rng rng(46);
  MetricAccumulator a, b;
  AccumulateClip(RandomList(rng, 20, 3, 2), RandomList(rng, 20, 3, 2), {}, &a);
  AccumulateClip(RandomList(rng, 20, 3, 2), RandomList(rng, 20, 3, 2), {}, &b);
  MetricAccumulator ab = a, ba = b;
  ab.Merge(b);
  ba.Merge(a);
  EXPECT_EQ(ab.tp, ba.tp);
  EXPECT_EQ(ab.substitutions, ba.substitutions);
  EXPECT_EQ(ab.reference_count, ba.reference_count);
  EXPECT_NEAR(ab.distance_sum_deg, ba.distance_sum_deg, 1e-9);
}

TEST(Metrics, ValidationErrors) {
  const EventList a(12, {}), b(10, {});
  EXPECT_THROW(Evaluate(a, b), ValidationError);
  EXPECT_THROW(Evaluate(a, a, {0.0, 10}), ValidationError);
  EXPECT_THROW(Evaluate(a, a, {20.0, 0}), ValidationError);
}

TEST(Metrics, SeldScoreAndFormatting) {
  EXPECT_NEAR(SeldScore(0.73, 0.307, 24.5, 0.405), 0.5385, 5e-5);
  EXPECT_EQ(FormatMetricsLine({0.0, 1.0, 0.0, 1.0}), "ER 0.00, F 100.0, LE 0.0, LR 100.0");
}

class CorpusTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("seldkit_corpus_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_ / "pred");
    fs::create_directories(root_ / "ref");
  }
  void Put(const std::string& side, const std::string& name, const EventList& list) {
    WriteMetadata(list, root_ / side / name);
  }
  fs::path root_;
};

TEST_F(CorpusTest, DuplicatedCorpusGivesSameTotals) {
  Rng rng(47);
  const EventList ref = RandomList(rng, 30, 12, 2), pred = RandomList(rng, 30, 12, 2);
  Put("ref", "a.csv", ref);
  Put("pred", "a.csv", pred);
  const SeldMetrics once = EvaluateCorpus(root_ / "pred", root_ / "ref", {}).Totals();
  Put("ref", "b.csv", ref);
  Put("pred", "b.csv", pred);
  const CorpusReport twice = EvaluateCorpus(root_ / "pred", root_ / "ref", {});
  EXPECT_EQ(twice.files.size(), 2u);
  EXPECT_DOUBLE_EQ(twice.Totals().er, once.er);
  EXPECT_DOUBLE_EQ(twice.Totals().f, once.f);
  EXPECT_NEAR(twice.Totals().le_deg, once.le_deg, 1e-9);
  EXPECT_DOUBLE_EQ(twice.Totals().lr, once.lr);
  EXPECT_NE(twice.ToCsv().find("file,er,f,le_deg,lr,seld_score,missing"), std::string::npos);
}

TEST_F(CorpusTest, JobsDoNotChangeTotals) {
  Rng rng(48);
  for (int i = 0; i < 6; ++i) {
    Put("ref", "c" + std::to_string(i) + ".csv", RandomList(rng, 20, 12, 2));
    Put("pred", "c" + std::to_string(i) + ".csv", RandomList(rng, 20, 12, 2));
  }
  CorpusOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(EvaluateCorpus(root_ / "pred", root_ / "ref", one).total,
            EvaluateCorpus(root_ / "pred", root_ / "ref", four).total);
}

TEST_F(CorpusTest, MissingFiles) {
  const EventList ref(12, {{0, 1, 0, 0, 0}});
  Put("ref", "a.csv", ref);
  Put("ref", "b.csv", ref);
  Put("pred", "a.csv", ref);
  Put("pred", "extra.csv", ref);
  try {
    EvaluateCorpus(root_ / "pred", root_ / "ref", {});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("b.csv"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("extra.csv"), std::string::npos);
  }
  CorpusOptions opts;
  opts.allow_missing = true;
  const CorpusReport r = EvaluateCorpus(root_ / "pred", root_ / "ref", opts);
  ASSERT_EQ(r.files.size(), 2u);
  EXPECT_TRUE(r.files[1].missing_prediction);
  EXPECT_EQ(r.total.reference_count, 2);
  EXPECT_EQ(r.total.tp, 1);
}

TEST_F(CorpusTest, EmptyCorpusIsError) {
  EXPECT_THROW(EvaluateCorpus(root_ / "pred", root_ / "ref", {}), ValidationError);
}

}  // namespace
}  // namespace seld
