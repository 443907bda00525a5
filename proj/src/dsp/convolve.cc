/* Copyright 2026 The seldkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "seld/dsp/convolve.h"

#include <algorithm>
#include <complex>

#include <unsupported/Eigen/FFT>

#include "seld/dsp/stft.h"
#include "seld/errors.h"

namespace seld::dsp {
namespace {

constexpr int kMinBlock = 64;
constexpr int kMaxBlock = 8192;

template <typename T>
std::vector<double> ConvolveImpl(std::span<const T> x, std::span<const T> h) {
  if (x.empty() || h.empty()) throw ValidationError("convolution inputs must be non-empty");
  const size_t n = x.size();
  const size_t l = h.size();
  const size_t out_len = n + l - 1;
  const int block = ConvolutionBlockSize(l);
  const int fft_size = 2 * block;
  const int bins = block + 1;
  const size_t partitions = (l + block - 1) / block;

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);

  std::vector<std::vector<std::complex<double>>> kernel_spectra(partitions);
  std::vector<double> buf(fft_size, 0.0);
  for (size_t p = 0; p < partitions; ++p) {
    std::fill(buf.begin(), buf.end(), 0.0);
    const size_t begin = p * block;
    const size_t end = std::min(l, begin + block);
    for (size_t i = begin; i < end; ++i) buf[i - begin] = static_cast<double>(h[i]);
    fft.fwd(kernel_spectra[p], buf);
    kernel_spectra[p].resize(bins);
  }

  // Frequency-domain delay line, newest spectrum at index `head`.
  std::vector<std::vector<std::complex<double>>> fdl(
      partitions, std::vector<std::complex<double>>(bins, {0.0, 0.0}));
  size_t head = 0;

  std::vector<double> out(out_len, 0.0);
  std::vector<double> input(fft_size, 0.0);
  std::vector<std::complex<double>> spectrum;
  std::vector<std::complex<double>> acc(bins);
  std::vector<double> time;
  const size_t blocks = (out_len + block - 1) / block;
  for (size_t j = 0; j < blocks; ++j) {
    std::copy(input.begin() + block, input.end(), input.begin());
    for (int i = 0; i < block; ++i) {
      const size_t idx = j * block + i;
      input[block + i] = idx < n ? static_cast<double>(x[idx]) : 0.0;
    }
    head = (head + partitions - 1) % partitions;
    fft.fwd(spectrum, input);
    std::copy(spectrum.begin(), spectrum.begin() + bins, fdl[head].begin());

    std::fill(acc.begin(), acc.end(), std::complex<double>(0.0, 0.0));
    for (size_t p = 0; p < partitions; ++p) {
      const auto& xs = fdl[(head + p) % partitions];
      const auto& hs = kernel_spectra[p];
      for (int k = 0; k < bins; ++k) acc[k] += xs[k] * hs[k];
    }
    fft.inv(time, acc, fft_size);
    for (int i = 0; i < block; ++i) {
      const size_t idx = j * block + i;
      if (idx < out_len) out[idx] = time[block + i];
    }
  }
  return out;
}

}  // namespace

int ConvolutionBlockSize(size_t kernel_length) {
  const int target = static_cast<int>(std::min<size_t>(kernel_length, kMaxBlock));
  return std::clamp(NextPowerOfTwo(target), kMinBlock, kMaxBlock);
}

std::vector<double> FftConvolve(std::span<const double> signal, std::span<const double> kernel) {
  return ConvolveImpl<double>(signal, kernel);
}

Signal FftConvolve(std::span<const float> signal, std::span<const float> kernel) {
  const std::vector<double> y = ConvolveImpl<float>(signal, kernel);
  return Signal(y.begin(), y.end());
}

}  // namespace seld::dsp
