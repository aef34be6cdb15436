#pragma once

#include "hdisk/circle_maps.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hdisk {

/// P_r(t) = (1 − r²)/(1 − 2r cos t + r²).  Throws std::domain_error unless 0 ≤ r < 1.
double poisson_kernel(double r, double t);

/// d/dt P_r(t) = −2r(1 − r²) sin t / (1 − 2r cos t + r²)².
double poisson_kernel_deriv(double r, double t);

/// |(1/n) Σ_k P_r(s_k) P_σ(t − s_k) − P_{rσ}(t)| with s_k = 2πk/n.
double semigroup_residual(double r, double sigma, double t, std::size_t n_samples);

/// Trapezoid sample count for integrands concentrated at scale 1 − r:
/// max(1024, next power of two ≥ 8/(1 − r)).
std::size_t default_sample_count(double r);

/// Truncated two-sided Fourier series Σ_{|n|≤N} c_n r^{|n|} e^{inθ} of a
/// harmonic function on the disk.
class FourierCoeffs {
 public:
  FourierCoeffs(int order, std::vector<std::complex<double>> coeffs, std::string source_hash);

  /// Series with the given coefficients; absent indices are zero.
  static FourierCoeffs from_terms(std::span<const std::pair<int, std::complex<double>>> terms,
                                  std::string source_hash = "explicit");

  int order() const { return order_; }
  /// c_n for |n| ≤ order, zero beyond.
  std::complex<double> operator[](int n) const;
  const std::string& source_hash() const { return source_hash_; }
  /// Copy truncated to a lower order.
  FourierCoeffs truncated(int order) const;

 private:
  int order_;
  std::vector<std::complex<double>> coeffs_;  // index n + order_
  std::string source_hash_;
};

/// Coefficients of ω e^{iξ(t)}.  Homeomorphisms are sampled at M uniform
/// points (M = 4N when zero; M ≥ 4N required) and transformed with an FFT.
/// Step maps use exact segment integrals, since point samples of a
/// discontinuous function converge only at first order.
FourierCoeffs fourier_from_boundary(const BoundaryMap& map, int order, std::size_t samples = 0);

/// f(re^{iθ}) from the series.
std::complex<double> eval_harmonic(const FourierCoeffs& coeffs, double r, double theta);

/// f_θ(re^{iθ}) = Σ in c_n r^{|n|} e^{inθ}.
std::complex<double> eval_theta_derivative(const FourierCoeffs& coeffs, double r, double theta);

/// Wirtinger derivatives ∂f and ∂̄f at a point z with |z| < 1.
struct Wirtinger {
  std::complex<double> dz;
  std::complex<double> dzbar;
  double jacobian() const { return std::norm(dz) - std::norm(dzbar); }
};
Wirtinger eval_wirtinger(const FourierCoeffs& coeffs, std::complex<double> z);

/// f(z) at a complex point, |z| < 1.
std::complex<double> eval_harmonic(const FourierCoeffs& coeffs, std::complex<double> z);

/// Trapezoid quadrature of the Poisson integral (ω/2π)∫ e^{iξ(t)} P_r(θ − t) dt
/// with M boundary samples.
std::complex<double> eval_harmonic_direct(const BoundaryMap& map, double r, double theta, std::size_t samples);

/// Same with P'_r in place of P_r.
std::complex<double> eval_theta_derivative_direct(const BoundaryMap& map, double r, double theta,
                                                  std::size_t samples);

}  // namespace hdisk
