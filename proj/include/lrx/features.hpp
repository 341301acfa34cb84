#pragma once

#include <string>

#include "lrx/matrix.hpp"
#include "lrx/wav.hpp"

namespace lrx {

// T x 40 sequence of log mel-filterbank energies at a 10 ms frame shift.
struct FeatureSequence {
  Matrix frames;
  double frame_shift = 0.010;

  std::size_t num_frames() const { return frames.rows(); }
};

inline constexpr int kFeatureDim = 40;
inline constexpr int kFrameLength = 400;  // 25 ms at 16 kHz
inline constexpr int kFrameHop = 160;     // 10 ms shift (15 ms overlap)
inline constexpr int kFftSize = 512;
inline constexpr double kMelLowHz = 20.0;
inline constexpr double kMelHighHz = 7600.0;
inline constexpr double kLogFloor = 1e-10;
inline constexpr int kNormWindowFrames = 301;  // 3 s centered window

// 25 ms Hann-windowed frames, 512-point power spectrum, 40 triangular mel
// filters over 20-7600 Hz, natural log with floor 1e-10. No padding:
// T = floor((len - 400) / 160) + 1.
FeatureSequence melbank(const Waveform& w);

// Subtracts, per coefficient, the mean of a centered 301-frame window that
// shrinks at the sequence edges. Sequences shorter than the window get the
// global mean removed.
FeatureSequence mean_normalize(const FeatureSequence& f);

// Feature dump: "LRXF", u32 frame count, u32 40, then row-major
// little-endian float64 frames.
void write_features(const std::string& path, const FeatureSequence& f);
FeatureSequence read_features(const std::string& path);

}  // namespace lrx
