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

#include "seld/wav_io.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "seld/binary_io.h"
#include "seld/errors.h"

namespace seld {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

struct FormatChunk {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits = 0;
};

FormatChunk ParseFormat(std::string_view body) {
  ByteReader r(body);
  FormatChunk f;
  f.format = r.GetU16();
  f.channels = r.GetU16();
  f.sample_rate = r.GetU32();
  r.Skip(4);  // byte rate
  r.Skip(2);  // block align
  f.bits = r.GetU16();
  if (f.format == kFormatExtensible) {
    if (r.remaining() < 2 + 22) throw FormatError("truncated WAVE_FORMAT_EXTENSIBLE chunk");
    r.Skip(2);  // cbSize
    r.Skip(2);  // valid bits
    r.Skip(4);  // channel mask
    f.format = r.GetU16();  // first two bytes of the subformat GUID
  }
  return f;
}

float ClampUnit(double v, size_t* clipped) {
  if (v > 1.0) {
    ++*clipped;
    return 1.0f;
  }
  if (v < -1.0) {
    ++*clipped;
    return -1.0f;
  }
  if (std::isnan(v)) {
    ++*clipped;
    return 0.0f;
  }
  return static_cast<float>(v);
}

}  // namespace

AudioBuffer ReadWavBuffer(const std::filesystem::path& path) {
  const std::string bytes = ReadFileBytes(path);
  ByteReader r(bytes);
  if (r.GetBytes(4) != "RIFF") throw FormatError(path.string() + ": not a RIFF file");
  r.Skip(4);
  if (r.GetBytes(4) != "WAVE") throw FormatError(path.string() + ": not a WAVE file");

  FormatChunk fmt;
  bool have_fmt = false;
  std::string_view data;
  bool have_data = false;
  while (r.remaining() >= 8) {
    const std::string_view id = r.GetBytes(4);
    uint32_t size = r.GetU32();
    // Streaming writers sometimes leave the data size unset.
    if (id == "data" && (size == 0xFFFFFFFFu || size > r.remaining())) {
      size = static_cast<uint32_t>(r.remaining());
    }
    const std::string_view body = r.GetBytes(size);
    if (size % 2 == 1 && r.remaining() > 0) r.Skip(1);
    if (id == "fmt ") {
      fmt = ParseFormat(body);
      have_fmt = true;
    } else if (id == "data") {
      data = body;
      have_data = true;
    }
  }
  if (!have_fmt || !have_data) throw FormatError(path.string() + ": missing fmt or data chunk");
  if (fmt.channels == 0) throw FormatError(path.string() + ": zero channels");

  const bool is_float = fmt.format == kFormatFloat && fmt.bits == 32;
  const bool is_pcm = fmt.format == kFormatPcm && (fmt.bits == 16 || fmt.bits == 24 || fmt.bits == 32);
  if (!is_float && !is_pcm) {
    throw FormatError(path.string() + ": unsupported encoding (format " +
                      std::to_string(fmt.format) + ", " + std::to_string(fmt.bits) + " bits)");
  }

  const size_t bytes_per_sample = fmt.bits / 8;
  const size_t frame_bytes = bytes_per_sample * fmt.channels;
  const size_t frames = data.size() / frame_bytes;

  AudioBuffer out;
  out.sample_rate = static_cast<int>(fmt.sample_rate);
  out.channels.assign(fmt.channels, Signal(frames));
  ByteReader d(data);
  const double scale = is_float ? 1.0 : 1.0 / (std::ldexp(1.0, fmt.bits - 1) - 1.0);
  for (size_t n = 0; n < frames; ++n) {
    for (size_t c = 0; c < fmt.channels; ++c) {
      double v = 0;
      if (is_float) {
        v = d.GetF32();
      } else if (fmt.bits == 16) {
        v = d.GetI16() * scale;
      } else if (fmt.bits == 24) {
        v = d.GetI24() * scale;
      } else {
        v = d.GetI32() * scale;
      }
      if (!is_float) v = std::clamp(v, -1.0, 1.0);
      out.channels[c][n] = static_cast<float>(v);
    }
  }
  return out;
}

FoaClip ReadWav(const std::filesystem::path& path) {
  AudioBuffer buf = ReadWavBuffer(path);
  if (buf.channels.size() != kFoaChannels) {
    throw FormatError(path.string() + ": expected 4 channels, found " +
                      std::to_string(buf.channels.size()));
  }
  return FoaClip(buf.sample_rate, {std::move(buf.channels[0]), std::move(buf.channels[1]),
                                   std::move(buf.channels[2]), std::move(buf.channels[3])});
}

WavWriteReport WriteWavBuffer(const AudioBuffer& audio, const std::filesystem::path& path,
                              WavEncoding encoding) {
  const uint16_t channels = static_cast<uint16_t>(audio.channels.size());
  if (channels == 0) throw ValidationError("cannot write a WAV with zero channels");
  const size_t frames = audio.num_samples();
  for (const Signal& ch : audio.channels) {
    if (ch.size() != frames) throw ValidationError("channel lengths differ");
  }
  const uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : encoding == WavEncoding::kPcm24 ? 24 : 32;
  const uint16_t format = encoding == WavEncoding::kFloat32 ? kFormatFloat : kFormatPcm;
  const uint32_t data_bytes = static_cast<uint32_t>(frames * channels * (bits / 8));

  ByteWriter w;
  w.mutable_bytes().reserve(44 + data_bytes);
  w.PutBytes("RIFF");
  w.PutU32(36 + data_bytes);
  w.PutBytes("WAVE");
  w.PutBytes("fmt ");
  w.PutU32(16);
  w.PutU16(format);
  w.PutU16(channels);
  w.PutU32(static_cast<uint32_t>(audio.sample_rate));
  w.PutU32(static_cast<uint32_t>(audio.sample_rate) * channels * (bits / 8));
  w.PutU16(static_cast<uint16_t>(channels * (bits / 8)));
  w.PutU16(bits);
  w.PutBytes("data");
  w.PutU32(data_bytes);

  WavWriteReport report;
  const double full_scale = std::ldexp(1.0, bits - 1) - 1.0;
  for (size_t n = 0; n < frames; ++n) {
    for (uint16_t c = 0; c < channels; ++c) {
      const float v = ClampUnit(audio.channels[c][n], &report.clipped_samples);
      switch (encoding) {
        case WavEncoding::kPcm16:
          w.PutI16(static_cast<int16_t>(std::lround(v * full_scale)));
          break;
        case WavEncoding::kPcm24:
          w.PutI24(static_cast<int32_t>(std::lround(v * full_scale)));
          break;
        case WavEncoding::kFloat32:
          w.PutF32(v);
          break;
      }
    }
  }
  WriteFileBytes(path, w.bytes());
  return report;
}

WavWriteReport WriteWav(const FoaClip& clip, const std::filesystem::path& path,
                        WavEncoding encoding) {
  AudioBuffer buf;
  buf.sample_rate = clip.sample_rate();
  buf.channels.assign(clip.channels().begin(), clip.channels().end());
  return WriteWavBuffer(buf, path, encoding);
}

WavEncoding ParseWavEncoding(const std::string& text) {
  if (text == "16") return WavEncoding::kPcm16;
  if (text == "24") return WavEncoding::kPcm24;
  if (text == "32f" || text == "float" || text == "32") return WavEncoding::kFloat32;
  throw ValidationError("unsupported bit depth '" + text + "' (use 16, 24 or 32f)");
}

}  // namespace seld
