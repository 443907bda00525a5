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

#include "seld/binary_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "seld/errors.h"

namespace seld {

void ByteWriter::PutU16(uint16_t v) {
  bytes_.push_back(static_cast<char>(v & 0xff));
  bytes_.push_back(static_cast<char>((v >> 8) & 0xff));
}

void ByteWriter::PutU32(uint32_t v) {
  for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void ByteWriter::PutU64(uint64_t v) {
  for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void ByteWriter::PutI24(int32_t v) {
  const uint32_t u = static_cast<uint32_t>(v);
  for (int i = 0; i < 3; ++i) bytes_.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

void ByteWriter::PutF32(float v) { PutU32(std::bit_cast<uint32_t>(v)); }

void ByteWriter::PutF64(double v) { PutU64(std::bit_cast<uint64_t>(v)); }

void ByteWriter::PutBytes(std::string_view bytes) { bytes_.append(bytes); }

std::string_view ByteReader::GetBytes(size_t n) {
  if (n > remaining()) {
    throw FormatError("unexpected end of data at byte " + std::to_string(pos_));
  }
  std::string_view out = bytes_.substr(pos_, n);
  pos_ += n;
  return out;
}

uint16_t ByteReader::GetU16() {
  auto b = GetBytes(2);
  return static_cast<uint16_t>(static_cast<uint8_t>(b[0]) |
                               (static_cast<uint8_t>(b[1]) << 8));
}

uint32_t ByteReader::GetU32() {
  auto b = GetBytes(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<uint8_t>(b[i])) << (8 * i);
  return v;
}

uint64_t ByteReader::GetU64() {
  auto b = GetBytes(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<uint8_t>(b[i])) << (8 * i);
  return v;
}

int32_t ByteReader::GetI24() {
  auto b = GetBytes(3);
  uint32_t v = static_cast<uint8_t>(b[0]) | (static_cast<uint8_t>(b[1]) << 8) |
               (static_cast<uint8_t>(b[2]) << 16);
  if (v & 0x800000u) v |= 0xff000000u;
  return static_cast<int32_t>(v);
}

float ByteReader::GetF32() { return std::bit_cast<float>(GetU32()); }

double ByteReader::GetF64() { return std::bit_cast<double>(GetU64()); }

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace seld
