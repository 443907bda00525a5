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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

namespace seld::testing {

std::vector<double> BruteConvolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

double SchroederT60(std::span<const double> ir, int sample_rate) {
  std::vector<double> edc(ir.size());
  double acc = 0.0;
  for (size_t i = ir.size(); i-- > 0;) {
    acc += ir[i] * ir[i];
    edc[i] = acc;
  }
  const double total = edc[0];
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (size_t i = 0; i < edc.size(); ++i) {
    const double db = 10.0 * std::log10(edc[i] / total);
    if (db > -5.0) continue;
    if (db < -25.0) break;
    const double t = static_cast<double>(i) / sample_rate;
    sx += t;
    sy += db;
    sxx += t * t;
    sxy += t * db;
    ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return -60.0 / slope;
}

namespace {

double AngleDeg(int az1, int el1, int az2, int el2) {
  const double d2r = M_PI / 180.0;
  const double c = std::sin(el1 * d2r) * std::sin(el2 * d2r) +
                   std::cos(el1 * d2r) * std::cos(el2 * d2r) * std::cos((az1 - az2) * d2r);
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / M_PI;
}

struct Rep {
  int az;
  int el;
};

// segment -> class -> track -> representative
using Reps = std::map<int, std::map<int, std::map<int, Rep>>>;

Reps Representatives(const EventList& list, int segment_frames) {
  std::map<std::tuple<int, int, int>, std::vector<Event>> groups;
  for (const Event& e : list.events()) {
    groups[{e.frame / segment_frames, e.class_id, e.track_id}].push_back(e);
  }
  Reps reps;
  for (auto& [key, evs] : groups) {
    std::sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) { return a.frame < b.frame; });
    const Event& mid = evs[(evs.size() - 1) / 2];
    reps[std::get<0>(key)][std::get<1>(key)][std::get<2>(key)] = {mid.azimuth_deg, mid.elevation_deg};
  }
  return reps;
}

// Every matching of size min(P, R) as (total distance, TP, near threshold).
void Enumerate(const std::vector<Rep>& p, const std::vector<Rep>& r, double thr, double* best,
               std::vector<std::tuple<double, int, bool>>* results) {
  const size_t k = std::min(p.size(), r.size());
  std::vector<int> ridx(r.size());
  std::iota(ridx.begin(), ridx.end(), 0);
  // Every k-subset of preds against every ordering of the refs.
  std::vector<bool> mask(p.size(), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> chosen;
    for (size_t i = 0; i < p.size(); ++i) {
      if (mask[i]) chosen.push_back(static_cast<int>(i));
    }
    std::vector<int> perm = ridx;
    std::sort(perm.begin(), perm.end());
    do {
      double total = 0.0;
      int tp = 0;
      bool near = false;
      for (size_t j = 0; j < k; ++j) {
        const double d = AngleDeg(p[chosen[j]].az, p[chosen[j]].el, r[perm[j]].az, r[perm[j]].el);
        total += d;
        if (d < thr) ++tp;
        if (std::abs(d - thr) < 1e-6) near = true;
      }
      results->push_back({total, tp, near});
      *best = std::min(*best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

OracleCounts BruteForceMetrics(const EventList& pred, const EventList& ref,
                               const MetricConfig& config) {
  OracleCounts out;
  const Reps pr = Representatives(pred, config.segment_frames);
  const Reps rr = Representatives(ref, config.segment_frames);
  std::map<int, bool> segments;
  for (const auto& [s, _] : pr) segments[s] = true;
  for (const auto& [s, _] : rr) segments[s] = true;
  for (const auto& [seg, _] : segments) {
    long long seg_fp = 0;
    long long seg_fn = 0;
    std::map<int, bool> classes;
    if (pr.count(seg)) {
      for (const auto& [c, __] : pr.at(seg)) classes[c] = true;
    }
    if (rr.count(seg)) {
      for (const auto& [c, __] : rr.at(seg)) {
        classes[c] = true;
        out.n += static_cast<long long>(rr.at(seg).at(c).size());
      }
    }
    for (const auto& [c, __] : classes) {
      std::vector<Rep> p;
      std::vector<Rep> r;
      if (pr.count(seg) && pr.at(seg).count(c)) {
        for (const auto& [t, rep] : pr.at(seg).at(c)) p.push_back(rep);
      }
      if (rr.count(seg) && rr.at(seg).count(c)) {
        for (const auto& [t, rep] : rr.at(seg).at(c)) r.push_back(rep);
      }
      const long long k = static_cast<long long>(std::min(p.size(), r.size()));
      int tp = 0;
      double best = 0.0;
      if (k > 0) {
        best = 1e300;
        std::vector<std::tuple<double, int, bool>> results;
        Enumerate(p, r, config.threshold_deg, &best, &results);
        int seen = -1;
        for (const auto& [total, t, near] : results) {
          if (total > best + 1e-9) continue;
          if (near || (seen >= 0 && seen != t)) out.ambiguous = true;
          seen = t;
        }
        tp = seen;
      }
      const long long fp = static_cast<long long>(p.size()) - tp;
      const long long fn = static_cast<long long>(r.size()) - tp;
      out.tp += tp;
      out.fp += fp;
      out.fn += fn;
      out.matched += k;
      out.distance_sum_deg += best;
      seg_fp += fp;
      seg_fn += fn;
    }
    out.s += std::min(seg_fp, seg_fn);
    out.d += std::max(0LL, seg_fn - seg_fp);
    out.i += std::max(0LL, seg_fp - seg_fn);
  }
  return out;
}

double SphBesselJSeries(int n, double x) {
  // j_n(x) = sum_k (-1)^k x^(n+2k) / (2^k k! (2n+2k+1)!!)
  long double dfact = 1.0L;
  for (int i = 1; i <= 2 * n + 1; i += 2) dfact *= i;
  long double term = std::pow(static_cast<long double>(x), n) / dfact;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -static_cast<long double>(x) * x / (2.0L * k * (2.0L * n + 2.0L * k + 1.0L));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

double SphBesselYRecurrence(int n, double x) {
  double y0 = -std::cos(x) / x;
  if (n == 0) return y0;
  double y1 = -std::cos(x) / (x * x) - std::sin(x) / x;
  for (int k = 1; k < n; ++k) {
    const double y2 = (2.0 * k + 1.0) / x * y1 - y0;
    y0 = y1;
    y1 = y2;
  }
  return y1;
}

}  // namespace seld::testing
