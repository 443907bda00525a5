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

#ifndef SELD_DSP_CONVOLVE_H_
#define SELD_DSP_CONVOLVE_H_

#include <span>
#include <vector>

#include "seld/foa_clip.h"

namespace seld::dsp {

// Full linear convolution (length N + L - 1) computed with uniformly
// partitioned overlap-save. Both inputs must be non-empty.
std::vector<double> FftConvolve(std::span<const double> signal, std::span<const double> kernel);
Signal FftConvolve(std::span<const float> signal, std::span<const float> kernel);

// Partition (block) size used for a kernel of `kernel_length` taps.
int ConvolutionBlockSize(size_t kernel_length);

}  // namespace seld::dsp

#endif  // SELD_DSP_CONVOLVE_H_
