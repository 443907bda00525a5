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

#include "seld/irs/eigen_filter.h"

#include <Eigen/Dense>

#include "seld/errors.h"

namespace seld::irs {

EigenFilterResult Stage2EigenFilter(const FoaClip& segment, const EigenFilterConfig& config) {
  const dsp::SpectralTensor spec = dsp::Stft(segment, config.stft);
  if (spec.frames() < 1) throw ValidationError("segment shorter than one STFT frame");

  std::vector<Eigen::Matrix4cd> cov;
  double max_trace = 0.0;
  for (int f = 0; f < spec.bins() && spec.BinFrequency(f) < config.max_freq_hz; ++f) {
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    for (int t = 0; t < spec.frames(); ++t) {
      Eigen::Vector4cd x;
      for (int c = 0; c < 4; ++c) x[c] = spec.at(c, t, f);
      r.noalias() += x * x.adjoint();
    }
    r /= static_cast<double>(spec.frames());
    max_trace = std::max(max_trace, r.trace().real());
    cov.push_back(r);
  }

  EigenFilterResult result;
  if (!(max_trace > 0.0)) {
    result.reason = "silent";
    return result;
  }
  int marked = 0;
  for (const Eigen::Matrix4cd& r : cov) {
    if (r.trace().real() <= 1e-12 * max_trace) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();  // ascending
    ++result.bins_used;
    if (ev[2] > config.eigen_ratio * ev[3]) ++marked;
  }
  if (result.bins_used == 0) {
    result.reason = "silent";
    return result;
  }
  result.marked_fraction = static_cast<double>(marked) / result.bins_used;
  result.keep = result.marked_fraction <= config.bin_fraction;
  result.reason = result.keep ? "rank1" : "multisource";
  return result;
}

}  // namespace seld::irs
