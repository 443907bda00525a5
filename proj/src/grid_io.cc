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

#include "seld/grid_io.h"

#include "seld/binary_io.h"
#include "seld/errors.h"

namespace seld {
namespace {
constexpr std::string_view kGridMagic = "SELDACCD";
constexpr std::string_view kEinv2Magic = "SELDEIN2";
constexpr uint32_t kVersion = 1;
}  // namespace

std::string SerializeGrid(const AccdoaGrid& grid) {
  ByteWriter w;
  w.PutBytes(kGridMagic);
  w.PutU32(kVersion);
  w.PutU32(static_cast<uint32_t>(grid.frames()));
  w.PutU32(static_cast<uint32_t>(grid.classes()));
  w.PutF64(grid.frame_period_s());
  for (double v : grid.data()) w.PutF32(static_cast<float>(v));
  return w.bytes();
}

AccdoaGrid DeserializeGrid(std::string_view bytes) {
  ByteReader r(bytes);
  if (r.GetBytes(kGridMagic.size()) != kGridMagic) throw FormatError("not an ACCDOA grid file");
  if (r.GetU32() != kVersion) throw FormatError("unsupported grid file version");
  const int frames = static_cast<int>(r.GetU32());
  const int classes = static_cast<int>(r.GetU32());
  const double period = r.GetF64();
  AccdoaGrid grid(frames, classes, period);
  if (r.remaining() != grid.data().size() * 4) throw FormatError("grid payload size mismatch");
  for (double& v : grid.data()) v = r.GetF32();
  return grid;
}

void WriteGrid(const AccdoaGrid& grid, const std::filesystem::path& path) {
  WriteFileBytes(path, SerializeGrid(grid));
}

AccdoaGrid ReadGrid(const std::filesystem::path& path) { return DeserializeGrid(ReadFileBytes(path)); }

std::string SerializeEinv2(const Einv2Output& out) {
  ByteWriter w;
  w.PutBytes(kEinv2Magic);
  w.PutU32(kVersion);
  w.PutU32(static_cast<uint32_t>(out.frames()));
  w.PutU32(static_cast<uint32_t>(out.tracks()));
  w.PutU32(static_cast<uint32_t>(out.classes()));
  w.PutF64(out.frame_period_s());
  for (int t = 0; t < out.frames(); ++t) {
    for (int k = 0; k < out.tracks(); ++k) {
      for (int c = 0; c < out.classes(); ++c) w.PutF32(static_cast<float>(out.sed(t, k, c)));
      const Eigen::Vector3d d = out.doa(t, k);
      for (int i = 0; i < 3; ++i) w.PutF32(static_cast<float>(d[i]));
    }
  }
  return w.bytes();
}

Einv2Output DeserializeEinv2(std::string_view bytes) {
  ByteReader r(bytes);
  if (r.GetBytes(kEinv2Magic.size()) != kEinv2Magic) throw FormatError("not a track-wise output file");
  if (r.GetU32() != kVersion) throw FormatError("unsupported track-wise file version");
  const int frames = static_cast<int>(r.GetU32());
  const int tracks = static_cast<int>(r.GetU32());
  const int classes = static_cast<int>(r.GetU32());
  const double period = r.GetF64();
  Einv2Output out(frames, tracks, classes, period);
  for (int t = 0; t < frames; ++t) {
    for (int k = 0; k < tracks; ++k) {
      for (int c = 0; c < classes; ++c) out.sed(t, k, c) = r.GetF32();
      Eigen::Vector3d d;
      for (int i = 0; i < 3; ++i) d[i] = r.GetF32();
      out.set_doa(t, k, d);
    }
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes in track-wise output file");
  out.Validate();
  return out;
}

void WriteEinv2(const Einv2Output& out, const std::filesystem::path& path) {
  WriteFileBytes(path, SerializeEinv2(out));
}

Einv2Output ReadEinv2(const std::filesystem::path& path) { return DeserializeEinv2(ReadFileBytes(path)); }

AccdoaGrid ReadAnyAsGrid(const std::filesystem::path& path) {
  const std::string bytes = ReadFileBytes(path);
  if (bytes.compare(0, kEinv2Magic.size(), kEinv2Magic) == 0) {
    return Einv2ToAccdoa(DeserializeEinv2(bytes));
  }
  return DeserializeGrid(bytes);
}

}  // namespace seld
