#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lrx {

// Iterative radix-2 FFT with precomputed twiddles; n must be a power of two.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* x) const;
  void inverse(std::complex<double>* x) const;

 private:
  void run(std::complex<double>* x, bool invert) const;

  std::size_t n_;
  std::vector<std::size_t> rev_;
  std::vector<std::complex<double>> twiddle_;  // exp(-2*pi*i*k/n), k < n/2
};

std::size_t next_pow2(std::size_t n);

// Full linear convolution, length a.size() + b.size() - 1.
std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace lrx
