#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace lrx {

inline uint64_t fnv1a64(std::string_view s,
                        uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Counter-based 64-bit generator (splitmix64). All randomness in the toolkit
// flows through named substreams of a single seed, so results are
// reproducible bit for bit regardless of platform or evaluation order.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  static Rng substream(uint64_t seed, std::string_view name,
                       uint64_t index = 0) {
    uint64_t h = fnv1a64(name);
    Rng r(seed ^ (h + 0x9e3779b97f4a7c15ULL * (index + 1)));
    r.next_u64();
    r.next_u64();
    return r;
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive on both ends; ranges here are tiny next to 2^64 so plain
  // modulo bias is far below anything observable
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + int64_t(next_u64() % uint64_t(hi - lo + 1));
  }

  double normal() {
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = size_t(uniform_int(0, int64_t(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace lrx
