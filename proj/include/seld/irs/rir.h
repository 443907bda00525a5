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

#ifndef SELD_IRS_RIR_H_
#define SELD_IRS_RIR_H_

#include <span>
#include <vector>

#include "seld/doa.h"
#include "seld/foa_clip.h"
#include "seld/irs/array_model.h"
#include "seld/irs/room.h"

namespace seld::irs {

enum class RirMode {
  kEigenmike,  // capsule pressure on the rigid sphere, then HOA -> FOA encoding
  kDirectFoa,  // each image encoded analytically as an FOA plane wave
};

struct SimulationConfig {
  int sample_rate = kDatasetSampleRate;
  int max_order = -1;  // -1: AutoMaxOrder per source
  AbsorptionModel absorption = AbsorptionModel::kSabine;
  // Spherical-harmonic order of the simulated sphere response; higher than
  // the encoding order so the encoder sees realistic spatial aliasing.
  int sphere_order = 8;
  int fractional_delay_taps = 64;
  EncoderConfig encoder;
};

// Hann-windowed sinc fractional delay added into `out`: amplitude * h[n -
// delay], with taps/2 - 1 taps before floor(delay). Taps falling outside
// the buffer are dropped.
void AddFractionalImpulse(std::span<double> out, double delay, double amplitude, int taps);

// next power of two >= max image delay + 256 samples.
size_t RirLength(std::span<const ImageSource> images, double speed_of_sound, int sample_rate);

// Q-channel capsule impulse responses for source `source_index`.
AudioBuffer SimulateCapsuleRirs(const RoomSpec& room, int source_index, const ArrayModel& array,
                                const SimulationConfig& config = {});

// FOA impulse response with every image encoded as an SN3D plane wave.
FoaClip SimulateDirectFoaRir(const RoomSpec& room, int source_index,
                             const SimulationConfig& config = {});

struct FoaRirSet {
  int sample_rate = kDatasetSampleRate;
  std::vector<FoaClip> rirs;
  std::vector<Doa> doas;  // direct-path direction from the array
  std::vector<double> direct_delay_samples;
  RoomSpec room;

  size_t size() const { return rirs.size(); }
};

// One FOA RIR per room source. The eigenmike path simulates capsule RIRs
// and encodes them; direct-foa skips the sphere.
FoaRirSet SimulateFoaRirs(const RoomSpec& room, const ArrayModel& array, RirMode mode,
                          const SimulationConfig& config = {});

}  // namespace seld::irs

#endif  // SELD_IRS_RIR_H_
