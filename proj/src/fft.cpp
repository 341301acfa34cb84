#include "lrx/fft.hpp"

#include <cmath>

#include "lrx/error.hpp"

namespace lrx {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ConfigError("fft size must be a power of two, got " +
                      std::to_string(n));
  }
  rev_.resize(n);
  std::size_t log2n = 0;
  while ((std::size_t(1) << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b)
      if (i & (std::size_t(1) << b)) r |= std::size_t(1) << (log2n - 1 - b);
    rev_[i] = r;
  }
  twiddle_.resize(n / 2);
  const double step = -2.0 * M_PI / double(n);
  for (std::size_t k = 0; k < n / 2; ++k)
    twiddle_[k] = std::polar(1.0, step * double(k));
}

void Fft::run(std::complex<double>* x, bool invert) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (i < rev_[i]) std::swap(x[i], x[rev_[i]]);
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        std::complex<double> w = twiddle_[k * stride];
        if (invert) w = std::conj(w);
        const std::complex<double> even = x[start + k];
        const std::complex<double> odd = x[start + k + half] * w;
        x[start + k] = even + odd;
        x[start + k + half] = even - odd;
      }
    }
  }
  if (invert) {
    const double inv = 1.0 / double(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] *= inv;
  }
}

void Fft::forward(std::complex<double>* x) const { run(x, false); }
void Fft::inverse(std::complex<double>* x) const { run(x, true); }

std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(out_len);
  Fft plan(n);
  std::vector<std::complex<double>> fa(n), fb(n);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
  plan.forward(fa.data());
  plan.forward(fb.data());
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  plan.inverse(fa.data());
  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
  return out;
}

}  // namespace lrx
