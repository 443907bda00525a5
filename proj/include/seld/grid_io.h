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

#ifndef SELD_GRID_IO_H_
#define SELD_GRID_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "seld/accdoa.h"

namespace seld {

// ACCDOA grid file (little-endian):
//   "SELDACCD" | u32 version | u32 frames | u32 classes | f64 frame_period_s
//   | frames*classes*3 f32 (x, y, z per cell, class-major within a frame)
std::string SerializeGrid(const AccdoaGrid& grid);
AccdoaGrid DeserializeGrid(std::string_view bytes);
void WriteGrid(const AccdoaGrid& grid, const std::filesystem::path& path);
AccdoaGrid ReadGrid(const std::filesystem::path& path);

// Track-wise output file:
//   "SELDEIN2" | u32 version | u32 frames | u32 tracks | u32 classes
//   | f64 frame_period_s | per frame, per track: classes f32 sed, 3 f32 doa
std::string SerializeEinv2(const Einv2Output& out);
Einv2Output DeserializeEinv2(std::string_view bytes);
void WriteEinv2(const Einv2Output& out, const std::filesystem::path& path);
Einv2Output ReadEinv2(const std::filesystem::path& path);

// Reads either format by magic; track-wise files are converted with
// Einv2ToAccdoa.
AccdoaGrid ReadAnyAsGrid(const std::filesystem::path& path);

}  // namespace seld

#endif  // SELD_GRID_IO_H_
