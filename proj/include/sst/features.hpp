// Copyright 2026 The SST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "sst/audio.hpp"

namespace sst {

// Frame-level analysis configuration.
//
// Two named profiles are provided:
//   task1_profile(): 20 cepstra including c0, +deltas +accelerations = 60 dims.
//   task3_profile(): 12 cepstra (c1..c12) plus log-energy, +d +dd = 39 dims.
struct FrameConfig {
  double window_ms = 30.0;
  double hop_fraction = 0.5;   // hop = floor(hop_fraction * window) samples
  int n_mels = 40;
  int n_ceps = 20;             // cepstral coefficients kept
  bool include_c0 = true;      // when false, coefficients start at c1
  bool append_energy = false;  // append log frame energy as an extra dim
  int delta_width = 2;         // regression half-width for deltas

  int static_dim() const { return n_ceps + (append_energy ? 1 : 0); }
  int window_samples(int sample_rate) const;
  int hop_samples(int sample_rate) const;
  void validate() const;
};

FrameConfig task1_profile();
FrameConfig task3_profile();
// Maps "task1"/"task3" to the profiles above; throws Error(kConfig) otherwise.
FrameConfig profile_by_name(const std::string& name);

// T x D sequence of frame-level feature vectors, time-ordered.
struct FeatureMatrix {
  int dim = 0;
  std::vector<std::vector<double>> rows;
  std::vector<double> frame_times;  // seconds; may be empty for loaded matrices

  int frames() const { return static_cast<int>(rows.size()); }
};

// Slices the signal into Hamming-windowed frames of floor(window_ms*sr/1000)
// samples with hop floor(hop_fraction*window). Frames beyond the last full
// window are dropped. Throws Error(kTooShort) if the clip is shorter than one
// window.
struct FrameSet {
  std::vector<std::vector<double>> frames;  // windowed samples
  std::vector<double> energies;             // pre-window frame energy, floored
  std::vector<double> times;                // frame start, seconds
  int sample_rate = 0;
};
FrameSet frame_signal(const AudioClip& clip, const FrameConfig& cfg);

// Per frame: power spectrum -> triangular mel filterbank (HTK scale) ->
// floored log energies -> orthonormal DCT-II -> first coefficients per cfg.
FeatureMatrix mfcc(const FrameSet& frames, const FrameConfig& cfg);

// Convenience: frame_signal + mfcc + append_deltas.
FeatureMatrix extract_features(const AudioClip& clip, const FrameConfig& cfg);

// Appends delta and acceleration blocks (symmetric regression window with
// edge replication); output dim is 3x the input dim.
FeatureMatrix append_deltas(const FeatureMatrix& m, int width);

// Element-wise mean over rows. Throws Error(kEmptyInput) on an empty matrix.
std::vector<double> mean_pool(const FeatureMatrix& m);

// Text cache format: header line "<dim> <T>", then one whitespace-separated
// row per frame, full precision.
std::string feature_matrix_to_text(const FeatureMatrix& m);
FeatureMatrix feature_matrix_from_text(const std::string& text);
void save_feature_matrix(const std::string& path, const FeatureMatrix& m);
FeatureMatrix load_feature_matrix(const std::string& path);

// Exposed for direct filterbank evaluation in tests.
// Returns n_mels triangular filters over nfft/2+1 power-spectrum bins.
std::vector<std::vector<double>> mel_filterbank(int sample_rate, int nfft,
                                                int n_mels);
// Center frequency (Hz) of each mel filter.
std::vector<double> mel_filter_centers(int sample_rate, int n_mels);
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Smallest power of two >= n.
int next_pow2(int n);

// Log-energy floor applied to filterbank outputs and frame energies.
inline constexpr double kLogFloor = 1e-10;

}  // namespace sst
