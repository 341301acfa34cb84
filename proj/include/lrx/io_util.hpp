#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "lrx/error.hpp"

namespace lrx::io {

// Little-endian scalar I/O used by the weight and feature file formats.

inline void put_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

inline void put_i32(std::ostream& out, int32_t v) {
  put_u32(out, static_cast<uint32_t>(v));
}

inline void put_u64(std::ostream& out, uint64_t v) {
  put_u32(out, uint32_t(v & 0xffffffffULL));
  put_u32(out, uint32_t(v >> 32));
}

inline void put_f64(std::ostream& out, double v) {
  put_u64(out, std::bit_cast<uint64_t>(v));
}

inline uint32_t get_u32(std::istream& in, const std::string& path) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw IoError("truncated file: " + path);
  return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
         uint32_t(b[3]) << 24;
}

inline int32_t get_i32(std::istream& in, const std::string& path) {
  return static_cast<int32_t>(get_u32(in, path));
}

inline uint64_t get_u64(std::istream& in, const std::string& path) {
  uint64_t lo = get_u32(in, path);
  uint64_t hi = get_u32(in, path);
  return lo | hi << 32;
}

inline double get_f64(std::istream& in, const std::string& path) {
  return std::bit_cast<double>(get_u64(in, path));
}

}  // namespace lrx::io
