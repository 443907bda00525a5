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

#ifndef SELD_FOA_CLIP_H_
#define SELD_FOA_CLIP_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace seld {

using Signal = std::vector<float>;

// Ambisonic channel number (ACN) positions of the first-order channels.
enum AcnChannel : int { kAcnW = 0, kAcnY = 1, kAcnZ = 2, kAcnX = 3 };

constexpr int kFoaChannels = 4;
constexpr int kDatasetSampleRate = 24000;

// Four-channel first-order Ambisonic buffer, ACN order [W, Y, Z, X] with SN3D
// normalization. All channels always have the same length.
class FoaClip {
 public:
  FoaClip() = default;
  // Silent clip.
  FoaClip(int sample_rate, size_t num_samples);
  // Throws ValidationError if the channel lengths differ or sample_rate <= 0.
  FoaClip(int sample_rate, std::array<Signal, kFoaChannels> channels);

  int sample_rate() const { return sample_rate_; }
  size_t num_samples() const { return channels_[0].size(); }

  const Signal& channel(int acn) const { return channels_.at(acn); }
  // Sample-level write access; the length cannot change.
  std::span<float> mutable_channel(int acn) { return channels_.at(acn); }
  const std::array<Signal, kFoaChannels>& channels() const { return channels_; }

  bool operator==(const FoaClip& other) const = default;

 private:
  int sample_rate_ = kDatasetSampleRate;
  std::array<Signal, kFoaChannels> channels_;
};

// Multichannel buffer of arbitrary width, used for mono segments and
// non-FOA intermediates.
struct AudioBuffer {
  int sample_rate = kDatasetSampleRate;
  std::vector<Signal> channels;

  size_t num_samples() const { return channels.empty() ? 0 : channels[0].size(); }
};

}  // namespace seld

#endif  // SELD_FOA_CLIP_H_
