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

#ifndef SELD_IRS_EIGEN_FILTER_H_
#define SELD_IRS_EIGEN_FILTER_H_

#include <string>

#include "seld/dsp/stft.h"
#include "seld/foa_clip.h"

namespace seld::irs {

struct EigenFilterConfig {
  double max_freq_hz = 2000.0;
  double eigen_ratio = 0.30;   // lambda2 > ratio * lambda1 marks a bin as multi-source
  double bin_fraction = 0.5;   // drop when the marked fraction exceeds this
  dsp::StftConfig stft;
};

struct EigenFilterResult {
  bool keep = false;
  std::string reason;           // "rank1", "multisource" or "silent"
  double marked_fraction = 0.0; // among bins with energy
  int bins_used = 0;
};

// Per bin below max_freq_hz: R_f = mean_t x x^H over the segment, eigenvalues
// lambda1 >= lambda2. Bins with (numerically) no energy are skipped; a
// segment with no usable bin is dropped as "silent". Throws ValidationError
// when the segment is shorter than one STFT frame.
EigenFilterResult Stage2EigenFilter(const FoaClip& segment, const EigenFilterConfig& config = {});

}  // namespace seld::irs

#endif  // SELD_IRS_EIGEN_FILTER_H_
