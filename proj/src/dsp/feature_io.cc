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

#include "seld/dsp/feature_io.h"

#include "seld/binary_io.h"
#include "seld/errors.h"

namespace seld::dsp {
namespace {
constexpr std::string_view kMagic = "SELDFEAT";
constexpr uint32_t kVersion = 1;
}  // namespace

std::string EncodeFeatures(const FeatureTensor& features) {
  ByteWriter w;
  w.PutBytes(kMagic);
  w.PutU32(kVersion);
  w.PutU32(static_cast<uint32_t>(features.maps()));
  w.PutU32(static_cast<uint32_t>(features.frames()));
  w.PutU32(static_cast<uint32_t>(features.bins()));
  for (const auto& tag : features.layout()) {
    const std::string name = tag.Name();
    w.PutU16(static_cast<uint16_t>(name.size()));
    w.PutBytes(name);
  }
  for (float v : features.data()) w.PutF32(v);
  return w.bytes();
}

FeatureTensor DecodeFeatures(std::string_view bytes) {
  ByteReader r(bytes);
  if (r.GetBytes(kMagic.size()) != kMagic) throw FormatError("not a feature dump");
  const uint32_t version = r.GetU32();
  if (version != kVersion) throw FormatError("unsupported feature dump version " + std::to_string(version));
  const uint32_t maps = r.GetU32();
  const uint32_t frames = r.GetU32();
  const uint32_t bins = r.GetU32();
  std::vector<FeatureMapTag> layout;
  for (uint32_t m = 0; m < maps; ++m) {
    const uint16_t len = r.GetU16();
    layout.push_back(FeatureMapTag::FromName(std::string(r.GetBytes(len))));
  }
  FeatureTensor out(std::move(layout), static_cast<int>(frames), static_cast<int>(bins));
  if (r.remaining() != out.data().size() * 4) throw FormatError("feature dump payload size mismatch");
  for (float& v : out.data()) v = r.GetF32();
  return out;
}

void WriteFeatures(const FeatureTensor& features, const std::filesystem::path& path) {
  WriteFileBytes(path, EncodeFeatures(features));
}

FeatureTensor ReadFeatures(const std::filesystem::path& path) {
  return DecodeFeatures(ReadFileBytes(path));
}

}  // namespace seld::dsp
