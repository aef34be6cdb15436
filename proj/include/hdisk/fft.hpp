#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hdisk::fft {

enum class Direction { Forward, Backward };

/// Unnormalized DFT of `in`.  Forward uses e^{-2πi jk/n}, Backward e^{+2πi jk/n}.
/// Plans are created per call; planning is serialized internally so the
/// function may be called from several threads at once.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, Direction dir);

/// Circular convolution (a * b)_j = Σ_k a_{j-k} b_k of two equal-length real sequences.
std::vector<double> circular_convolve(std::span<const double> a, std::span<const double> b);

}  // namespace hdisk::fft
