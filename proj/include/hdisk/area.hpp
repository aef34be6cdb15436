#pragma once

/// \file
///
/// Area of f(D_r) for a harmonic self-map f of the disk.
///
/// Areas are absolute Lebesgue measure, so the identity gives π r².  Five
/// numerical routes are provided:
///
///   GreenSpectral    π Σ n |c_n|² r^{2|n|} from the Fourier coefficients.
///   GreenQuadrature  (1/2)∮ Im(f̄ f_θ) dθ with f, f_θ from direct Poisson sums.
///   KernelDirect     (1/4π)∬ K_r(s − t) sin(ξ(s) − ξ(t)) ds dt, O(M²).
///   KernelFFT        the same double sum as two circular correlations, O(M log M).
///   JacobianGrid     ∬_{D_r} (|∂f|² − |∂̄f|²) on a Gauss-Legendre × uniform polar grid.
///
/// plus closed forms for a few families (ExactFamily).

#include "hdisk/circle_maps.hpp"
#include "hdisk/poisson.hpp"

#include <complex>
#include <cstddef>
#include <string_view>

namespace hdisk {

enum class AreaMethod { GreenSpectral, GreenQuadrature, KernelDirect, KernelFFT, JacobianGrid, ExactFamily };

std::string_view to_string(AreaMethod method);
/// Accepts the CLI spellings: green-spectral, green-quadrature, kernel-direct,
/// kernel-fft, jacobian, exact.
AreaMethod area_method_from_string(std::string_view name);

struct AreaEstimate {
  double value = 0.0;
  AreaMethod method = AreaMethod::GreenSpectral;
  std::size_t resolution = 0;
  /// |value(resolution) − value(resolution / 2)|.
  double error_indicator = 0.0;
};

/// Radius of a concentric disk, strictly inside (0, 1).
class Radius {
 public:
  explicit Radius(double r);
  double value() const { return r_; }

 private:
  double r_;
};

/// Sample count for the kernel double integral: default_sample_count(r²).
std::size_t kernel_sample_count(Radius r);

AreaEstimate area_green_spectral(const FourierCoeffs& coeffs, Radius r);
/// Convenience: coefficients of order N = M/4 with M = default_sample_count(r)
/// unless `order` is given.
AreaEstimate area_green_spectral(const BoundaryMap& map, Radius r, int order = 0);

AreaEstimate area_green_quadrature(const BoundaryMap& map, Radius r, std::size_t samples);

/// K_r(α) = 2r²(1 − r⁴) sin α / (1 − 2r² cos α + r⁴)², 0 ≤ r < 1.
double kernel_K(double r, double alpha);

/// kernel_K at the grid angle 2πk/n, using grid_sin/grid_cos so that
/// K at 2π − α is exactly −K at α.
double kernel_K_grid(double r, std::size_t k, std::size_t n);

AreaEstimate area_kernel_direct(const BoundaryMap& map, Radius r, std::size_t samples);
AreaEstimate area_kernel_fft(const BoundaryMap& map, Radius r, std::size_t samples);

/// Requires a Homeomorphism (injectivity makes ∬ det Df the image area);
/// throws std::domain_error otherwise.
AreaEstimate area_jacobian_grid(const BoundaryMap& map, Radius r, std::size_t n_rho, std::size_t n_theta);
AreaEstimate area_jacobian_grid(const FourierCoeffs& coeffs, Radius r, std::size_t n_rho, std::size_t n_theta);

struct ExactFamily {
  enum class Kind { Identity, Rotation, Shear, MobiusDisk };
  Kind kind = Kind::Identity;
  /// Rotation: angle in the real part.  Shear: c in z + c z̄².  MobiusDisk: a.
  std::complex<double> param = 0.0;
};

/// Closed-form area.  Throws std::domain_error for |c| ≥ 1/2 or |a| ≥ 1.
AreaEstimate exact_family_area(const ExactFamily& family, Radius r);

/// Fourier coefficients of the family's harmonic map, truncated at `order`.
FourierCoeffs family_coefficients(const ExactFamily& family, int order);

/// Dispatch by method.  `resolution` is M for the quadrature and kernel
/// routes, the Fourier order for GreenSpectral, and n_theta for
/// JacobianGrid; zero selects the default for r.
AreaEstimate compute_area(const BoundaryMap& map, Radius r, AreaMethod method, std::size_t resolution = 0);

}  // namespace hdisk
