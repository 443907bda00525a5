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

#ifndef SELD_DSP_FEATURE_IO_H_
#define SELD_DSP_FEATURE_IO_H_

#include <filesystem>
#include <string>

#include "seld/dsp/features.h"

namespace seld::dsp {

// Feature dump layout (all little-endian):
//   "SELDFEAT" | u32 version | u32 maps | u32 frames | u32 bins
//   | maps x (u16 length, tag name bytes) | maps*frames*bins f32
std::string EncodeFeatures(const FeatureTensor& features);
FeatureTensor DecodeFeatures(std::string_view bytes);

void WriteFeatures(const FeatureTensor& features, const std::filesystem::path& path);
FeatureTensor ReadFeatures(const std::filesystem::path& path);

}  // namespace seld::dsp

#endif  // SELD_DSP_FEATURE_IO_H_
