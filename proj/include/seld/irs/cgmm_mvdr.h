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

#ifndef SELD_IRS_CGMM_MVDR_H_
#define SELD_IRS_CGMM_MVDR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "seld/dsp/stft.h"
#include "seld/foa_clip.h"

namespace seld::irs {

struct CgmmConfig {
  int iterations = 20;
  // Weight, in frames, of the scale-invariant shrinkage penalty
  // M log tr(R^-1) + log|R| on each spatial covariance. It keeps a component
  // from collapsing onto fewer frames than this.
  double shrinkage_frames = 8.0;
  // A component whose total posterior mass falls below this fraction of the
  // frames has vanished.
  double vanish_fraction = 1e-6;
  // Random covariances and weights instead of the eigen/identity start.
  bool random_init = false;
  uint64_t seed = 0;
  // Known source direction; picks the target component by steering match.
  std::optional<Eigen::Vector3d> target_direction;
  dsp::StftConfig stft;
};

struct CgmmMvdrResult {
  Signal signal;  // beamformed source, same length as the segment
  std::vector<Eigen::Vector4cd> weights;   // per bin
  std::vector<Eigen::Vector4cd> steering;  // per bin, h[0] = 1
  // Penalized log-likelihood per bin, before the first and after every
  // iteration (iterations + 1 values).
  std::vector<std::vector<double>> objective;
  int degenerate_bins = 0;  // bins beamformed by W passthrough
  bool fallback = false;    // every bin degenerate: output is the W channel
};

// Two-component CGMM (target / noise) per frequency fitted by generalized EM
// in the order scale -> covariance -> weight, then MVDR
// w = Rn^-1 h / (h^H Rn^-1 h) with h the principal eigenvector of the
// mask-weighted target covariance. Throws ValidationError below 10 STFT
// frames.
CgmmMvdrResult CgmmMvdr(const FoaClip& segment, const CgmmConfig& config = {});

// Applies per-bin weights (w^H x) and resynthesizes.
Signal ApplyBeamformer(const std::vector<Eigen::Vector4cd>& weights, const FoaClip& clip,
                       const dsp::StftConfig& stft = {});

}  // namespace seld::irs

#endif  // SELD_IRS_CGMM_MVDR_H_
