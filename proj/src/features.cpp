#include "lrx/features.hpp"

#include <cmath>
#include <complex>
#include <cstring>
#include <fstream>

#include "lrx/error.hpp"
#include "lrx/fft.hpp"
#include "lrx/io_util.hpp"

namespace lrx {

namespace {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

// Triangular filter weights over the kFftSize/2+1 power-spectrum bins.
Matrix build_filterbank(int sample_rate) {
  const int bins = kFftSize / 2 + 1;
  Matrix fb(kFeatureDim, bins);
  const double mel_lo = hz_to_mel(kMelLowHz);
  const double mel_hi = hz_to_mel(kMelHighHz);
  std::vector<double> edges(kFeatureDim + 2);
  for (int i = 0; i < kFeatureDim + 2; ++i) {
    const double mel = mel_lo + (mel_hi - mel_lo) * double(i) /
                                    double(kFeatureDim + 1);
    edges[i] = mel_to_hz(mel);
  }
  for (int j = 0; j < kFeatureDim; ++j) {
    const double f0 = edges[j], f1 = edges[j + 1], f2 = edges[j + 2];
    for (int k = 0; k < bins; ++k) {
      const double f = double(k) * double(sample_rate) / double(kFftSize);
      double w = 0.0;
      if (f > f0 && f < f1) {
        w = (f - f0) / (f1 - f0);
      } else if (f >= f1 && f < f2) {
        w = (f2 - f) / (f2 - f1);
      }
      fb(j, k) = w;
    }
  }
  return fb;
}

}  // namespace

FeatureSequence melbank(const Waveform& w) {
  if (w.sample_rate != 16000) {
    throw IngestError("waveform sample rate is " +
                      std::to_string(w.sample_rate) + ", expected 16000");
  }
  if (w.samples.size() < std::size_t(kFrameLength)) {
    throw ShapeError("waveform has " + std::to_string(w.samples.size()) +
                     " samples, need at least " + std::to_string(kFrameLength) +
                     " for one frame");
  }
  const std::size_t T =
      (w.samples.size() - kFrameLength) / kFrameHop + 1;

  static const Matrix filterbank = build_filterbank(16000);
  std::vector<double> window(kFrameLength);
  for (int i = 0; i < kFrameLength; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * double(i) /
                                     double(kFrameLength - 1));
  }

  Fft plan(kFftSize);
  std::vector<std::complex<double>> buf(kFftSize);
  std::vector<double> power(kFftSize / 2 + 1);

  FeatureSequence out;
  out.frames = Matrix(T, kFeatureDim);
  for (std::size_t t = 0; t < T; ++t) {
    const double* frame = w.samples.data() + t * kFrameHop;
    for (int i = 0; i < kFrameLength; ++i) buf[i] = frame[i] * window[i];
    for (int i = kFrameLength; i < kFftSize; ++i) buf[i] = 0.0;
    plan.forward(buf.data());
    for (int k = 0; k <= kFftSize / 2; ++k) power[k] = std::norm(buf[k]);
    for (int j = 0; j < kFeatureDim; ++j) {
      double e = 0.0;
      const double* fbrow = filterbank.row(j);
      for (int k = 0; k <= kFftSize / 2; ++k) e += fbrow[k] * power[k];
      out.frames(t, j) = std::log(std::max(e, kLogFloor));
    }
  }
  return out;
}

FeatureSequence mean_normalize(const FeatureSequence& f) {
  const std::size_t T = f.num_frames();
  if (T < 1) throw ShapeError("mean_normalize needs at least one frame");
  const std::size_t D = f.frames.cols();
  const int half = (kNormWindowFrames - 1) / 2;

  // per-coefficient prefix sums
  Matrix prefix(T + 1, D);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t j = 0; j < D; ++j)
      prefix(t + 1, j) = prefix(t, j) + f.frames(t, j);

  FeatureSequence out;
  out.frame_shift = f.frame_shift;
  out.frames = Matrix(T, D);
  for (std::size_t t = 0; t < T; ++t) {
    const std::size_t lo = t >= std::size_t(half) ? t - half : 0;
    const std::size_t hi = std::min(T - 1, t + half);
    const double count = double(hi - lo + 1);
    for (std::size_t j = 0; j < D; ++j) {
      const double mean = (prefix(hi + 1, j) - prefix(lo, j)) / count;
      out.frames(t, j) = f.frames(t, j) - mean;
    }
  }
  return out;
}

void write_features(const std::string& path, const FeatureSequence& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write feature file: " + path);
  out.write("LRXF", 4);
  io::put_u32(out, uint32_t(f.num_frames()));
  io::put_u32(out, uint32_t(f.frames.cols()));
  for (double v : f.frames.data()) io::put_f64(out, v);
  if (!out) throw IoError("short write to feature file: " + path);
}

FeatureSequence read_features(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open feature file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "LRXF", 4) != 0)
    throw IoError("bad feature file magic in " + path);
  const uint32_t T = io::get_u32(in, path);
  const uint32_t D = io::get_u32(in, path);
  if (D != kFeatureDim)
    throw ShapeError("feature file has " + std::to_string(D) +
                     " coefficients, expected 40: " + path);
  FeatureSequence f;
  f.frames = Matrix(T, D);
  for (double& v : f.frames.data()) v = io::get_f64(in, path);
  return f;
}

}  // namespace lrx
