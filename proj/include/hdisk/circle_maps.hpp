#pragma once

/// \file
///
/// Boundary correspondences of harmonic self-maps of the unit disk.
///
/// A boundary map is a nondecreasing degree-one circle map, stored as the
/// lift ξ: ℝ → ℝ with ξ(t + 2π) = ξ(t) + 2π, together with a unimodular
/// constant ω.  The harmonic extension is the Poisson integral of
/// ω e^{iξ(t)}.

#include "hdisk/constants.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hdisk {

enum class MapKind {
  /// Strictly increasing, continuous lift; piecewise-linear between knots.
  Homeomorphism,
  /// Piecewise-constant, right-continuous lift with jumps at the knots.
  NondecreasingStep,
};

std::string_view to_string(MapKind kind);
MapKind map_kind_from_string(std::string_view name);

struct Knot {
  double t;
  double xi;
};

/// Immutable boundary correspondence.
///
/// Knot abscissae are strictly increasing in [0, 2π).  The lift closes with
/// the implicit knot (t_0 + 2π, ξ_0 + 2π), so monotonicity includes the
/// wrap-around segment.  Construction throws std::invalid_argument when any
/// invariant fails; evaluation never throws.
class BoundaryMap {
 public:
  BoundaryMap(std::vector<Knot> knots, std::complex<double> omega, MapKind kind);

  /// Continuous lift value at any real t.
  double eval_xi(double t) const;

  /// ξ(2πk/m) for k = 0..m-1.
  std::vector<double> sample_lift(std::size_t m) const;

  std::span<const Knot> knots() const { return knots_; }
  std::complex<double> omega() const { return omega_; }
  MapKind kind() const { return kind_; }

 private:
  double eval_period(double tau) const;

  std::vector<Knot> knots_;
  std::vector<double> slopes_;
  std::complex<double> omega_;
  MapKind kind_;
};

BoundaryMap make_identity();

/// ξ(t) = t, ω = e^{iφ₀}.
BoundaryMap make_rotation(double phi0);

/// Boundary of z ↦ (z − a)/(1 − ā z), sampled on `n_knots` uniform knots.
/// Throws std::domain_error if |a| ≥ 1.
BoundaryMap make_mobius_boundary(std::complex<double> a, std::size_t n_knots = 4096);

/// Seeded random homeomorphism: n_knots uniform abscissae, positive increments
/// exp(roughness · g) with g standard normal, rescaled to total 2π.  ω is
/// uniform on the circle.  Identical seeds give bit-identical knots.
BoundaryMap make_random_homeomorphism(std::uint64_t seed, std::size_t n_knots, double roughness);

/// Like make_random_homeomorphism, but with `folds`-fold symmetry
/// ξ(t + 2π/folds) = ξ(t) + 2π/folds.  For folds ≥ 2 the harmonic extension
/// satisfies f(0) = 0.  n_knots must be a multiple of folds.
BoundaryMap make_symmetric_random_homeomorphism(std::uint64_t seed, std::size_t n_knots,
                                                double roughness, std::size_t folds);

/// Step boundary data: ξ ≡ values[j] on [jump_points[j], jump_points[j+1]),
/// wrapping with values.back() − 2π before the first jump.
BoundaryMap make_step_map(std::span<const double> jump_points, std::span<const double> values);

/// Periodic smoothing of the lift by a C^∞ bump of total width `width`.
/// The result is a Homeomorphism on `n_out` uniform knots and keeps ω.
BoundaryMap mollify(const BoundaryMap& map, double width, std::size_t n_out = 4096);

/// Builds the boundary map of g(z) = f(z̄) from orientation-reversing data,
/// i.e. knots whose lift values are nonincreasing in t.
BoundaryMap conjugate_orientation(std::span<const Knot> reversing_knots, std::complex<double> omega,
                                  MapKind kind = MapKind::Homeomorphism);

/// sup over an n-point grid of |ξ(t) − t − c|, minimized over the constant c.
double xi_deviation_from_identity(const BoundaryMap& map, std::size_t grid = 4096);

/// Samples of a nondecreasing Γ: [0, 2π] → [0, 2π] on the uniform grid
/// α_k = 2πk/n, k = 0..n, with n even so that π is a grid point.
class MonotoneGamma {
 public:
  /// Throws std::invalid_argument if fewer than 3 samples, n odd, or a sample
  /// decreases by more than 1e-12.  Values are clamped into [0, 2π].
  explicit MonotoneGamma(std::vector<double> samples);

  std::size_t intervals() const { return samples_.size() - 1; }
  double alpha(std::size_t k) const;
  double operator[](std::size_t k) const { return samples_[k]; }
  /// Piecewise-linear interpolation for α in [0, 2π].
  double operator()(double alpha) const;
  std::span<const double> samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

/// α ↦ 2π − Γ(2π − α).  An involution.
MonotoneGamma reflect_gamma(const MonotoneGamma& g);

}  // namespace hdisk
