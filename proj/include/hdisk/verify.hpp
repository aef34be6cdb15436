#pragma once

/// \file
///
/// Theorem-level checks: area contraction and its equality case, the
/// boundary Jacobian integral, the harmonic Schwarz bound, and the
/// holomorphic convexity inequality |f(D_r)| ≤ r²|f(D)| with its failure for
/// harmonic maps.

#include "hdisk/area.hpp"
#include "hdisk/circle_maps.hpp"
#include "hdisk/poisson.hpp"
#include "hdisk/verdict.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hdisk {

/// |f(D_r)| ≤ π r² + tol.  Throws HypothesisError for step maps.
VerdictRecord check_area_contraction(const BoundaryMap& map, Radius r, AreaMethod method, double tol,
                                     std::size_t resolution = 0);

/// π r² − |f(D_r)|, using the FFT kernel route at kernel_sample_count(r).
double equality_slack(const BoundaryMap& map, Radius r);

/// Equality-case verdict.  Maps with ξ(t) − t constant (rotations) must have
/// slack below `isometry_tol`; every other map must have slack above
/// 10 × the area error indicator.
VerdictRecord check_equality_case(const BoundaryMap& map, Radius r, double isometry_tol = 1e-8);

struct PolarGrid {
  std::size_t n_r = 64;
  std::size_t n_theta = 64;
  /// Radii are r_i = (i + 1)/(n_r + 1), i = 0..n_r-1.
  double radius(std::size_t i) const { return static_cast<double>(i + 1) / static_cast<double>(n_r + 1); }
};

/// max over the grid of |F(z)| − (4/π) arctan|z| with F(z) = f(φ(z)),
/// φ(z) = (z + a)/(1 + ā z) and a = center_shift.  Precomposition with a disk
/// automorphism keeps F harmonic.  Throws PreconditionError if |F(0)| ≥ 1e-10.
VerdictRecord schwarz_bound_check(const FourierCoeffs& coeffs, std::complex<double> center_shift,
                                  const PolarGrid& grid, double tol = 1e-8);
VerdictRecord schwarz_bound_check(const BoundaryMap& map, std::complex<double> center_shift,
                                  const PolarGrid& grid, double tol = 1e-8);

/// Fourier data used by the Schwarz check: FFT coefficients for
/// homeomorphisms, exact order-4096 coefficients for step maps.
FourierCoeffs schwarz_coefficients(const BoundaryMap& map);

/// Newton solve for a point a with f(a) = 0, starting at the origin.
/// Throws std::runtime_error if it does not converge inside the disk.
std::complex<double> locate_zero(const FourierCoeffs& coeffs);

/// I(ρ) = ∫₀^{2π} |det Df(ρ e^{iθ})| dθ by the trapezoid rule.
double boundary_jacobian_ring(const FourierCoeffs& coeffs, double rho, std::size_t n_theta);

/// Extrapolates I(1 − ε) over `eps_list` to ε = 0 (polynomial extrapolation)
/// and checks I(1) ≥ 2π − tol.  error_indicator is the change when the
/// largest ε is dropped.  The record is inconclusive when that change
/// exceeds `inconclusive_above` and 10× it reaches below 2π − tol.
VerdictRecord boundary_jacobian_integral(const FourierCoeffs& coeffs, std::span<const double> eps_list,
                                         double tol = 1e-3, double inconclusive_above = 1e-2);
VerdictRecord boundary_jacobian_integral(const BoundaryMap& map, std::span<const double> eps_list,
                                         double tol = 1e-3, double inconclusive_above = 1e-2);

/// π Σ n|c_n|² r^{2n} ≤ r² π Σ n|c_n|² + tol for holomorphic series c_1..c_N.
VerdictRecord holomorphic_convexity_check(std::span<const std::complex<double>> series, Radius r,
                                          double tol = 1e-12);

/// The same inequality for a two-sided harmonic series, |f(D)| taken as
/// π Σ n(|c_n|² − |c_{−n}|²).  Fails for the shear z + c z̄².
VerdictRecord harmonic_convexity_check(const FourierCoeffs& coeffs, Radius r, double tol = 1e-12);

/// Records that the convexity inequality is violated: passed iff
/// |f(D_r)| − r²|f(D)| ≥ margin.
VerdictRecord convexity_counterexample(const FourierCoeffs& coeffs, Radius r, double margin = 1e-12);

/// Winding-number test: every target w in a polar sample grid inside the
/// image is wound around at most once by f on |z| = 1 − 1e-3.
bool holomorphic_series_injective(std::span<const std::complex<double>> series);

}  // namespace hdisk
