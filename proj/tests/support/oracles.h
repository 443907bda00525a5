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

#ifndef SELD_TESTS_SUPPORT_ORACLES_H_
#define SELD_TESTS_SUPPORT_ORACLES_H_

#include <span>
#include <vector>

#include "seld/event_list.h"
#include "seld/metrics.h"

namespace seld::testing {

// Direct O(N*M) linear convolution.
std::vector<double> BruteConvolve(std::span<const double> a, std::span<const double> b);

// Schroeder backward integration with a least-squares line over the
// [-5, -25] dB part of the decay curve, extrapolated to 60 dB.
double SchroederT60(std::span<const double> ir, int sample_rate);

struct OracleCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  long long matched = 0;
  double distance_sum_deg = 0.0;
  long long s = 0;
  long long d = 0;
  long long i = 0;
  long long n = 0;
  // Set when two optimal matchings give different TP counts or an optimal
  // pair sits within 1e-6 degrees of the threshold.
  bool ambiguous = false;
};

// Exhaustive-matching reference for the four metrics. Every partial
// injection of maximum cardinality is enumerated per (segment, class).
OracleCounts BruteForceMetrics(const EventList& pred, const EventList& ref,
                               const MetricConfig& config);

// Power series of j_n, long double.
double SphBesselJSeries(int n, double x);
// Closed forms for y_0, y_1 and upward recurrence.
double SphBesselYRecurrence(int n, double x);

}  // namespace seld::testing

#endif  // SELD_TESTS_SUPPORT_ORACLES_H_
