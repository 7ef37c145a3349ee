// Copyright 2026 The SST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sst/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "sst/error.hpp"
#include "sst/textio.hpp"

namespace sst {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  bool has(size_t n) const { return pos_ + n <= bytes_.size(); }
  size_t pos() const { return pos_; }
  void seek(size_t pos) { pos_ = pos; }

  std::uint32_t u32() {
    require(4);
    std::uint32_t v = static_cast<std::uint32_t>(bytes_[pos_]) |
                      static_cast<std::uint32_t>(bytes_[pos_ + 1]) << 8 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 2]) << 16 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 3]) << 24;
    pos_ += 4;
    return v;
  }

  std::uint16_t u16() {
    require(2);
    std::uint16_t v = static_cast<std::uint16_t>(
        bytes_[pos_] | static_cast<std::uint16_t>(bytes_[pos_ + 1]) << 8);
    pos_ += 2;
    return v;
  }

  std::string tag() {
    require(4);
    std::string s(reinterpret_cast<const char*>(&bytes_[pos_]), 4);
    pos_ += 4;
    return s;
  }

  const std::uint8_t* raw(size_t n) {
    require(n);
    const std::uint8_t* p = &bytes_[pos_];
    pos_ += n;
    return p;
  }

 private:
  void require(size_t n) const {
    if (!has(n)) fail(ErrorCode::kFormat, "WAV: truncated file");
  }

  const std::vector<std::uint8_t>& bytes_;
  size_t pos_ = 0;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
  out.push_back((v >> 16) & 0xFF);
  out.push_back((v >> 24) & 0xFF);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioClip decode_wav(const std::vector<std::uint8_t>& bytes,
                     const std::string& source_id) {
  ByteReader r(bytes);
  if (!r.has(12) || r.tag() != "RIFF")
    fail(ErrorCode::kFormat, "WAV: missing RIFF header");
  r.u32();  // riff size; trust chunk walk instead
  if (r.tag() != "WAVE") fail(ErrorCode::kFormat, "WAV: missing WAVE tag");

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::uint32_t data_size = 0;

  while (r.has(8)) {
    std::string id = r.tag();
    std::uint32_t size = r.u32();
    size_t body = r.pos();
    if (id == "fmt ") {
      if (size < 16) fail(ErrorCode::kFormat, "WAV: fmt chunk too small");
      format = r.u16();
      channels = r.u16();
      sample_rate = r.u32();
      r.u32();  // byte rate
      r.u16();  // block align
      bits = r.u16();
      if (format == kFormatExtensible) {
        if (size < 40) fail(ErrorCode::kFormat, "WAV: extensible fmt too small");
        r.u16();  // cbSize
        r.u16();  // valid bits
        r.u32();  // channel mask
        format = r.u16();  // first two GUID bytes carry the real format
      }
      have_fmt = true;
    } else if (id == "data") {
      data = r.raw(size);
      data_size = size;
    }
    // chunks are word-aligned
    r.seek(body + size + (size & 1));
  }

  if (!have_fmt) fail(ErrorCode::kFormat, "WAV: no fmt chunk");
  if (data == nullptr) fail(ErrorCode::kFormat, "WAV: no data chunk");
  if (sample_rate == 0) fail(ErrorCode::kFormat, "WAV: zero sample rate");
  if (channels < 1 || channels > 2)
    fail(ErrorCode::kUnsupported,
         "WAV: unsupported channel count " + std::to_string(channels));

  bool is_f32 = (format == kFormatIeeeFloat && bits == 32);
  bool is_i16 = (format == kFormatPcm && bits == 16);
  if (!is_f32 && !is_i16)
    fail(ErrorCode::kUnsupported, "WAV: unsupported encoding (format " +
                                      std::to_string(format) + ", " +
                                      std::to_string(bits) + " bits)");

  const int bytes_per_sample = bits / 8;
  const size_t frame_bytes = static_cast<size_t>(bytes_per_sample) * channels;
  const size_t n_frames = data_size / frame_bytes;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(sample_rate);
  clip.source_id = source_id;
  clip.samples.resize(n_frames);

  for (size_t t = 0; t < n_frames; ++t) {
    double acc = 0.0;
    for (int c = 0; c < channels; ++c) {
      const std::uint8_t* p = data + t * frame_bytes + c * bytes_per_sample;
      if (is_i16) {
        std::int16_t s = static_cast<std::int16_t>(p[0] | (p[1] << 8));
        acc += s / 32768.0;
      } else {
        float f;
        std::memcpy(&f, p, 4);
        acc += std::clamp(static_cast<double>(f), -1.0, 1.0);
      }
    }
    clip.samples[t] = acc / channels;
  }
  return clip;
}

AudioClip decode_wav_file(const std::string& path) {
  return decode_wav(read_binary_file(path), path);
}

std::vector<std::uint8_t> encode_wav16(const AudioClip& clip) {
  if (clip.sample_rate <= 0)
    fail(ErrorCode::kInput, "encode_wav16: sample rate must be positive");
  const std::uint32_t n = static_cast<std::uint32_t>(clip.samples.size());
  const std::uint32_t data_size = n * 2;

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_size);
  for (double v : clip.samples) {
    double c = std::clamp(v, -1.0, 1.0);
    auto s = static_cast<std::int16_t>(std::lrint(c * 32767.0));
    put_u16(out, static_cast<std::uint16_t>(s));
  }
  return out;
}

void write_wav_file(const std::string& path, const AudioClip& clip) {
  std::vector<std::uint8_t> bytes = encode_wav16(clip);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open file for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::kIo, "write failed: " + path);
}

}  // namespace sst
