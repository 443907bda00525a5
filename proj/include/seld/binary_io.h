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

#ifndef SELD_BINARY_IO_H_
#define SELD_BINARY_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace seld {

// Little-endian byte buffer writer independent of host byte order.
class ByteWriter {
 public:
  void PutU16(uint16_t v);
  void PutU32(uint32_t v);
  void PutU64(uint64_t v);
  void PutI16(int16_t v) { PutU16(static_cast<uint16_t>(v)); }
  void PutI24(int32_t v);
  void PutI32(int32_t v) { PutU32(static_cast<uint32_t>(v)); }
  void PutF32(float v);
  void PutF64(double v);
  void PutBytes(std::string_view bytes);

  const std::string& bytes() const { return bytes_; }
  std::string& mutable_bytes() { return bytes_; }

 private:
  std::string bytes_;
};

// Bounds-checked little-endian reader. Throws FormatError on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  uint16_t GetU16();
  uint32_t GetU32();
  uint64_t GetU64();
  int16_t GetI16() { return static_cast<int16_t>(GetU16()); }
  int32_t GetI24();
  int32_t GetI32() { return static_cast<int32_t>(GetU32()); }
  float GetF32();
  double GetF64();
  std::string_view GetBytes(size_t n);
  void Skip(size_t n) { GetBytes(n); }

  size_t position() const { return pos_; }
  size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  size_t pos_ = 0;
};

std::string ReadFileBytes(const std::filesystem::path& path);
// Writes via a temporary sibling file and rename, so readers never observe a
// partially written output.
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace seld

#endif  // SELD_BINARY_IO_H_
