#pragma once

#include <string>
#include <vector>

namespace lrx {

// Mono 16 kHz audio with samples in [-1, 1].
struct Waveform {
  int sample_rate = 16000;
  std::vector<double> samples;
};

// Reads a RIFF/WAVE file. Only PCM16 mono at 16 kHz is accepted; anything
// else raises IngestError naming the offending property.
Waveform load_wav(const std::string& path);

// Writes PCM16 mono. Samples are clamped to [-1, 1] and quantized with
// round(x * 32768) clamped to int16, so a write/read round trip stays within
// 1/32768 of the original.
void write_wav(const std::string& path, const Waveform& w);

}  // namespace lrx
