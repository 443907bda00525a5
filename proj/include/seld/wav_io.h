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

#ifndef SELD_WAV_IO_H_
#define SELD_WAV_IO_H_

#include <filesystem>

#include "seld/foa_clip.h"

namespace seld {

enum class WavEncoding { kPcm16, kPcm24, kFloat32 };

struct WavWriteReport {
  // Samples outside [-1, 1] that were clipped before quantization.
  size_t clipped_samples = 0;
};

// Reads PCM 16/24/32-bit or IEEE float32 WAV (plain or WAVE_FORMAT_EXTENSIBLE).
// Integer PCM is scaled by 1 / (2^(bits-1) - 1) and clamped to [-1, 1].
AudioBuffer ReadWavBuffer(const std::filesystem::path& path);

// As ReadWavBuffer but requires exactly four channels (FormatError otherwise).
FoaClip ReadWav(const std::filesystem::path& path);

WavWriteReport WriteWavBuffer(const AudioBuffer& audio, const std::filesystem::path& path,
                              WavEncoding encoding = WavEncoding::kFloat32);
WavWriteReport WriteWav(const FoaClip& clip, const std::filesystem::path& path,
                        WavEncoding encoding = WavEncoding::kFloat32);

// Parses a `16`, `24` or `32f` style depth string. Throws ValidationError.
WavEncoding ParseWavEncoding(const std::string& text);

}  // namespace seld

#endif  // SELD_WAV_IO_H_
