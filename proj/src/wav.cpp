#include "lrx/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "lrx/error.hpp"

namespace lrx {

namespace {

uint32_t get_u32(const unsigned char* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

uint16_t get_u16(const unsigned char* p) {
  return uint16_t(p[0]) | uint16_t(p[1]) << 8;
}

void put_u32(std::ofstream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u16(std::ofstream& out, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 2);
}

}  // namespace

Waveform load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open wav file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw IngestError("not a RIFF/WAVE file: " + path);
  }

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const unsigned char* data = nullptr;
  uint32_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    uint32_t chunk_len = get_u32(hdr + 4);
    const unsigned char* body = hdr + 8;
    if (pos + 8 + chunk_len > bytes.size()) {
      throw IngestError("truncated wav chunk in " + path);
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw IngestError("malformed fmt chunk in " + path);
      format = get_u16(body);
      channels = get_u16(body + 2);
      rate = get_u32(body + 4);
      bits = get_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr)
    throw IngestError("wav file missing fmt or data chunk: " + path);
  if (format != 1)
    throw IngestError("wav format is not PCM (format tag " +
                      std::to_string(format) + "): " + path);
  if (channels != 1)
    throw IngestError("wav is not mono (" + std::to_string(channels) +
                      " channels): " + path);
  if (rate != 16000)
    throw IngestError("wav sample rate is " + std::to_string(rate) +
                      ", expected 16000: " + path);
  if (bits != 16)
    throw IngestError("wav sample width is " + std::to_string(bits) +
                      " bits, expected 16: " + path);

  Waveform w;
  w.sample_rate = 16000;
  const std::size_t n = data_len / 2;
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int16_t s = int16_t(uint16_t(data[2 * i]) | uint16_t(data[2 * i + 1]) << 8);
    w.samples[i] = double(s) / 32768.0;
  }
  return w;
}

void write_wav(const std::string& path, const Waveform& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write wav file: " + path);
  const uint32_t n = uint32_t(w.samples.size());
  const uint32_t data_bytes = n * 2;
  out.write("RIFF", 4);
  put_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, uint32_t(w.sample_rate));
  put_u32(out, uint32_t(w.sample_rate) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out.write("data", 4);
  put_u32(out, data_bytes);
  for (double x : w.samples) {
    double v = std::clamp(x, -1.0, 1.0) * 32768.0;
    long q = std::lround(v);
    q = std::clamp(q, -32768L, 32767L);
    put_u16(out, uint16_t(int16_t(q)));
  }
  if (!out) throw IoError("short write to wav file: " + path);
}

}  // namespace lrx
