#pragma once

/// \file
///
/// Numerical checks of the identities and pointwise inequalities behind the
/// area-contraction argument.  The central objects are
///
///   K_r(α)       the antisymmetric area kernel (kernel_K),
///   H(α, β)      sin α + (β − α) cos α − sin β, the tangent-line gap of sine,
///   γ(α, t)      ξ(α + t) − ξ(t), the difference slice of a boundary lift,
///   Γ            any nondecreasing self-map of [0, 2π] (MonotoneGamma).
///
/// Double integrals over [0, 2π]² use M × M uniform grids and integer index
/// arithmetic for α + t, so lift periodicity is applied exactly.  Single
/// integrals against Γ use the Γ sample grid.  With an even grid the discrete
/// sums obey the same chain of inequalities as the integrals.

#include "hdisk/area.hpp"
#include "hdisk/circle_maps.hpp"
#include "hdisk/verdict.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hdisk {

/// α ↦ ξ(α + t) − ξ(t) on the uniform grid of `intervals` steps.
MonotoneGamma gamma_slice(const BoundaryMap& map, double t, std::size_t intervals = 512);

double tangent_gap(double alpha, double beta);

/// (1/M) Σ_k P_r(θ_k) P'_r(θ_k − α): the defining convolution of K_r.
double kernel_defining_quadrature(double r, double alpha, std::size_t samples);

struct SignStructureReport {
  /// min H on [0, π]² (should be ≥ 0).
  double min_h_square = 0.0;
  /// min H on [0, π]² with |α − β| above one grid cell (should be > 0).
  double min_h_off_diagonal = 0.0;
  /// min (cos α − cos β) for α ∈ [0, π], α ≤ β ≤ 2π − α.
  double min_dh_dbeta = 0.0;
  /// min K_r(α) H(α, β) outside the open triangles T₁, T₂, over all radii.
  double min_outside_triangles = 0.0;
  /// Number of negative K_r H samples inside T₁ ∪ T₂.
  std::size_t negative_in_triangles = 0;
  /// max |K_r(α)H(α,β) − K_r(2π−α)H(2π−α, 2π−β)|.
  double central_symmetry_residual = 0.0;
};

SignStructureReport sign_structure(std::size_t grid_n, std::span<const double> radii);

/// Verdicts for (a)-(d) plus the triangle-negativity and central-symmetry
/// observations.  Throws std::invalid_argument if grid_n < 64.
std::vector<VerdictRecord> check_H_sign_structure(std::size_t grid_n, std::span<const double> radii);

/// max |K_r(α)H(α,β) + K_r(2π−α)H(2π−α,β) − 2K_r(α)H(α,π)| on the grid,
/// and the minimum of the right-hand side.
struct SymsumReport {
  double residual = 0.0;
  double min_rhs = 0.0;
};
SymsumReport symsum_report(Radius r, std::size_t grid_n);
VerdictRecord check_symsum(Radius r, std::size_t grid_n);

/// |(1/M²) Σ_{a,j} K_r(α_a)(γ(α_a, t_j) − α_a) cos α_a|.
double cos_identity_residual(const BoundaryMap& map, Radius r, std::size_t samples);

/// |(1/M) Σ_j ζ(α + t_j) − ζ(t_j)| with ζ(t) = ξ(t) − t.
double shift_mean_residual(const BoundaryMap& map, double alpha, std::size_t samples);

/// ∬ K_r(s − t){sin(s − t) − sin(ξ(s) − ξ(t))} ds dt on the (s, t) grid.
double ar7_integral(const BoundaryMap& map, Radius r, std::size_t samples);
/// The same integral after the substitution α = s − t, on the (α, t) grid.
double ar17_integral(const BoundaryMap& map, Radius r, std::size_t samples);
/// ∬ K_r(α){sin α + (γ − α) cos α − sin γ} dα dt.
double ar8_integral(const BoundaryMap& map, Radius r, std::size_t samples);

/// ar8 ≥ −tol.
VerdictRecord check_ar8(const BoundaryMap& map, Radius r, std::size_t samples, double tol = 1e-10);
/// |ar8/(4π) − (π r² − kernel area)| ≤ tol, both at the same M.
VerdictRecord check_ar8_bookkeeping(const BoundaryMap& map, Radius r, std::size_t samples, double tol = 1e-6);

struct Step3Result {
  double value = 0.0;
  double alpha0 = 0.0;
  bool reflected = false;
};

/// ∫₀^{2π} K_r(α) H(α, Γ(α)) dα, reflecting Γ first if Γ(π) > π.  α₀ is the
/// largest grid α ∈ [π, 2π] with α + Γ(α) ≤ 2π (π if there is none).
Step3Result step3_integral(const MonotoneGamma& g, Radius r);

/// The four members of the chain
///   ∫₀^{2π} K H(α,Γ(α)) ≥ ∫_{2π−α₀}^{α₀} K H(α,Γ(α)) ≥ ∫_{2π−α₀}^{α₀} K H(α,Γ(π))
///                       = 2∫_π^{α₀} K H(α,π) ≥ 0.
struct PunchlineChain {
  double full = 0.0;
  double window = 0.0;
  double frozen = 0.0;
  double folded = 0.0;
  double alpha0 = 0.0;
  /// min over the four consecutive relations of (left − right), with the
  /// equality entering as −|frozen − folded|.
  double margin() const;
};

/// Requires Γ(π) ≤ π; throws std::invalid_argument otherwise.
PunchlineChain punchline_chain(const MonotoneGamma& g, Radius r);
VerdictRecord check_punchline_chain(const MonotoneGamma& g, Radius r, double tol = 1e-10);

/// min of K_r(α)H(α, π) over grid α with 0 < |α − π| < π.
double equality_positivity_margin(Radius r, std::size_t grid_n);

/// Random nondecreasing Γ with flats, jumps and arbitrary end values.
MonotoneGamma make_random_gamma(std::mt19937_64& rng, std::size_t intervals);

struct ProofSuiteOptions {
  std::vector<double> radii{0.3, 0.6, 0.9};
  std::size_t samples = 512;
  std::size_t grid_n = 256;
  std::size_t random_gammas_step3 = 500;
  std::size_t random_gammas_chain = 200;
  std::size_t gamma_intervals = 512;
  std::vector<std::uint64_t> map_seeds{5, 9};
  std::uint64_t seed = 20091102;
};

/// Runs every check in this module; records are in a fixed order.
std::vector<VerdictRecord> run_proof_suite(const ProofSuiteOptions& options);

}  // namespace hdisk
