// Copyright 2026 The SST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sst {

// Decoded mono PCM audio. Samples are in [-1, 1]; the unit of ingestion for
// both pipelines.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;
  std::string source_id;

  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Decodes a PCM WAV file (16-bit integer or 32-bit IEEE float, 1-2 channels).
// Stereo is downmixed by channel averaging; 16-bit samples are scaled by
// 1/32768. Throws Error(kFormat) on malformed containers and
// Error(kUnsupported) on encodings outside the above.
AudioClip decode_wav(const std::vector<std::uint8_t>& bytes,
                     const std::string& source_id = "");
AudioClip decode_wav_file(const std::string& path);

// Writes mono 16-bit PCM. Samples are clamped to [-1, 1] before quantizing.
std::vector<std::uint8_t> encode_wav16(const AudioClip& clip);
void write_wav_file(const std::string& path, const AudioClip& clip);

}  // namespace sst
