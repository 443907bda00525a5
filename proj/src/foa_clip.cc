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

#include "seld/foa_clip.h"

#include <string>

#include "seld/errors.h"

namespace seld {

FoaClip::FoaClip(int sample_rate, size_t num_samples) : sample_rate_(sample_rate) {
  if (sample_rate <= 0) throw ValidationError("sample rate must be positive");
  for (auto& ch : channels_) ch.assign(num_samples, 0.0f);
}

FoaClip::FoaClip(int sample_rate, std::array<Signal, kFoaChannels> channels)
    : sample_rate_(sample_rate), channels_(std::move(channels)) {
  if (sample_rate <= 0) throw ValidationError("sample rate must be positive");
  for (int c = 1; c < kFoaChannels; ++c) {
    if (channels_[c].size() != channels_[0].size()) {
      throw ValidationError("FOA channel " + std::to_string(c) + " has " +
                            std::to_string(channels_[c].size()) + " samples, expected " +
                            std::to_string(channels_[0].size()));
    }
  }
}

}  // namespace seld
