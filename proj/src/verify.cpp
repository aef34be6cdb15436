#include "hdisk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hdisk {

VerdictRecord le_verdict(std::string check_name, double lhs, double rhs, double tolerance) {
  VerdictRecord v;
  v.check_name = std::move(check_name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = rhs - lhs;
  v.tolerance = tolerance;
  v.passed = std::isfinite(v.slack) && v.slack >= -tolerance;
  return v;
}

VerdictRecord ge_verdict(std::string check_name, double lhs, double rhs, double tolerance) {
  VerdictRecord v;
  v.check_name = std::move(check_name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = lhs - rhs;
  v.tolerance = tolerance;
  v.passed = std::isfinite(v.slack) && v.slack >= -tolerance;
  return v;
}

VerdictRecord check_area_contraction(const BoundaryMap& map, Radius r, AreaMethod method, double tol,
                                     std::size_t resolution) {
  if (map.kind() != MapKind::Homeomorphism) {
    throw HypothesisError("check_area_contraction: the boundary map must be a homeomorphism");
  }
  const auto est = compute_area(map, r, method, resolution);
  auto v = le_verdict("area_contraction", est.value, kPi * r.value() * r.value(), tol);
  v.r = r.value();
  v.method = std::string(to_string(method));
  v.resolution = est.resolution;
  v.error_indicator = est.error_indicator;
  return v;
}

double equality_slack(const BoundaryMap& map, Radius r) {
  const auto est = area_kernel_fft(map, r, kernel_sample_count(r));
  return kPi * r.value() * r.value() - est.value;
}

VerdictRecord check_equality_case(const BoundaryMap& map, Radius r, double isometry_tol) {
  if (map.kind() != MapKind::Homeomorphism) {
    throw HypothesisError("check_equality_case: the boundary map must be a homeomorphism");
  }
  const auto est = area_kernel_fft(map, r, kernel_sample_count(r));
  const double slack = kPi * r.value() * r.value() - est.value;
  const bool isometry = xi_deviation_from_identity(map) < 1e-12;
  VerdictRecord v = isometry ? le_verdict("equality_case_isometry", std::abs(slack), isometry_tol, 0.0)
                             : ge_verdict("equality_case_strict", slack, 10.0 * est.error_indicator, 0.0);
  v.r = r.value();
  v.method = std::string(to_string(est.method));
  v.resolution = est.resolution;
  v.error_indicator = est.error_indicator;
  return v;
}

FourierCoeffs schwarz_coefficients(const BoundaryMap& map) {
  if (map.kind() == MapKind::NondecreasingStep) return fourier_from_boundary(map, 4096);
  const std::size_t m = 4096;
  return fourier_from_boundary(map, static_cast<int>(m / 4), m);
}

VerdictRecord schwarz_bound_check(const FourierCoeffs& coeffs, std::complex<double> center_shift,
                                  const PolarGrid& grid, double tol) {
  if (!(std::abs(center_shift) < 1.0)) throw std::domain_error("schwarz_bound_check: |center_shift| must be < 1");
  const auto a = center_shift;
  const auto f0 = eval_harmonic(coeffs, a);
  if (!(std::abs(f0) < 1e-10)) {
    throw PreconditionError("schwarz_bound_check: |f(0)| = " + std::to_string(std::abs(f0)) + " is not below 1e-10");
  }
  double worst = -INFINITY;
  for (std::size_t i = 0; i < grid.n_r; ++i) {
    const double rho = grid.radius(i);
    const double bound = 4.0 / kPi * std::atan(rho);
    for (std::size_t j = 0; j < grid.n_theta; ++j) {
      const auto z = std::polar(rho, kTwoPi * static_cast<double>(j) / static_cast<double>(grid.n_theta));
      const auto w = (z + a) / (1.0 + std::conj(a) * z);
      worst = std::max(worst, std::abs(eval_harmonic(coeffs, w)) - bound);
    }
  }
  auto v = le_verdict("schwarz_bound", worst, 0.0, tol);
  v.r = grid.radius(grid.n_r - 1);
  v.resolution = static_cast<std::size_t>(coeffs.order());
  return v;
}

VerdictRecord schwarz_bound_check(const BoundaryMap& map, std::complex<double> center_shift,
                                  const PolarGrid& grid, double tol) {
  return schwarz_bound_check(schwarz_coefficients(map), center_shift, grid, tol);
}

std::complex<double> locate_zero(const FourierCoeffs& coeffs) {
  std::complex<double> z = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    const auto f = eval_harmonic(coeffs, z);
    if (std::abs(f) < 1e-14) return z;
    const auto d = eval_wirtinger(coeffs, z);
    const double det = d.jacobian();
    if (det == 0.0) break;
    // Solve A δ + B δ̄ = −f with A = ∂f, B = ∂̄f.
    const auto w = -f;
    auto step = (std::conj(d.dz) * w - d.dzbar * std::conj(w)) / det;
    while (std::abs(z + step) >= 1.0) step *= 0.5;
    z += step;
  }
  if (std::abs(eval_harmonic(coeffs, z)) < 1e-12) return z;
  throw std::runtime_error("locate_zero: Newton iteration did not converge");
}

double boundary_jacobian_ring(const FourierCoeffs& coeffs, double rho, std::size_t n_theta) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n_theta; ++j) {
    const auto z = std::polar(rho, kTwoPi * static_cast<double>(j) / static_cast<double>(n_theta));
    acc += std::abs(eval_wirtinger(coeffs, z).jacobian());
  }
  return acc * kTwoPi / static_cast<double>(n_theta);
}

namespace {

// Neville's algorithm for the interpolating polynomial at x = 0.
double extrapolate_to_zero(std::span<const double> x, std::span<const double> y) {
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
    }
  }
  return p[0];
}

}  // namespace

VerdictRecord boundary_jacobian_integral(const FourierCoeffs& coeffs, std::span<const double> eps_list, double tol,
                                         double inconclusive_above) {
  if (eps_list.size() < 2) throw std::invalid_argument("boundary_jacobian_integral: need at least two eps levels");
  std::vector<double> eps(eps_list.begin(), eps_list.end());
  std::sort(eps.begin(), eps.end());
  if (!(eps.front() > 0.0) || !(eps.back() < 1.0)) {
    throw std::invalid_argument("boundary_jacobian_integral: eps must lie in (0, 1)");
  }
  const auto n_theta = static_cast<std::size_t>(std::max(64, 4 * coeffs.order()));
  std::vector<double> values;
  for (double e : eps) values.push_back(boundary_jacobian_ring(coeffs, 1.0 - e, n_theta));
  const double full = extrapolate_to_zero(eps, values);
  const double reduced =
      extrapolate_to_zero(std::span(eps).first(eps.size() - 1), std::span(values).first(values.size() - 1));
  auto v = ge_verdict("boundary_jacobian_integral", full, kTwoPi, tol);
  v.r = 1.0;
  v.resolution = n_theta;
  v.error_indicator = std::abs(full - reduced);
  const bool unresolved = v.error_indicator > inconclusive_above && v.slack - 10.0 * v.error_indicator < -tol;
  if (!std::isfinite(v.error_indicator) || unresolved) {
    v.passed = false;
    v.inconclusive = true;
  }
  return v;
}

VerdictRecord boundary_jacobian_integral(const BoundaryMap& map, std::span<const double> eps_list, double tol,
                                         double inconclusive_above) {
  if (map.kind() != MapKind::Homeomorphism) {
    throw HypothesisError("boundary_jacobian_integral: the boundary map must be a homeomorphism");
  }
  double eps_min = 1.0;
  for (double e : eps_list) eps_min = std::min(eps_min, e);
  if (!(eps_min > 0.0)) throw std::invalid_argument("boundary_jacobian_integral: eps must be positive");
  const std::size_t m = 4 * default_sample_count(1.0 - eps_min);
  const auto coeffs = fourier_from_boundary(map, static_cast<int>(m / 4), m);
  return boundary_jacobian_integral(coeffs, eps_list, tol, inconclusive_above);
}

VerdictRecord holomorphic_convexity_check(std::span<const std::complex<double>> series, Radius r, double tol) {
  const double r2 = r.value() * r.value();
  double inner = 0.0;
  double whole = 0.0;
  double pw = 1.0;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double n = static_cast<double>(k + 1);
    pw *= r2;
    inner += n * std::norm(series[k]) * pw;
    whole += n * std::norm(series[k]);
  }
  auto v = le_verdict("holomorphic_convexity", kPi * inner, r2 * kPi * whole, tol);
  v.r = r.value();
  v.resolution = series.size();
  return v;
}

namespace {

double disk_image_area(const FourierCoeffs& c) {
  double acc = 0.0;
  for (int n = 1; n <= c.order(); ++n) acc += static_cast<double>(n) * (std::norm(c[n]) - std::norm(c[-n]));
  return kPi * acc;
}

}  // namespace

VerdictRecord harmonic_convexity_check(const FourierCoeffs& coeffs, Radius r, double tol) {
  const double r2 = r.value() * r.value();
  const double inner = area_green_spectral(coeffs, r).value;
  auto v = le_verdict("harmonic_convexity", inner, r2 * disk_image_area(coeffs), tol);
  v.r = r.value();
  v.resolution = static_cast<std::size_t>(coeffs.order());
  return v;
}

VerdictRecord convexity_counterexample(const FourierCoeffs& coeffs, Radius r, double margin) {
  const double r2 = r.value() * r.value();
  const double inner = area_green_spectral(coeffs, r).value;
  // Strict violation of |f(D_r)| ≤ r²|f(D)|: a negative tolerance encodes the margin.
  auto v = ge_verdict("convexity_counterexample", inner, r2 * disk_image_area(coeffs), -margin);
  v.r = r.value();
  v.resolution = static_cast<std::size_t>(coeffs.order());
  return v;
}

bool holomorphic_series_injective(std::span<const std::complex<double>> series) {
  auto f = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = series.size(); k-- > 0;) acc = (acc + series[k]) * z;
    return acc;
  };
  constexpr std::size_t kBoundary = 4096;
  const double rho = 1.0 - 1e-3;
  std::vector<std::complex<double>> curve(kBoundary);
  for (std::size_t j = 0; j < kBoundary; ++j) {
    curve[j] = f(std::polar(rho, kTwoPi * static_cast<double>(j) / static_cast<double>(kBoundary)));
  }
  for (int i = 0; i <= 9; ++i) {
    const double rz = 0.1 * i;
    const int n_ang = i == 0 ? 1 : 16;
    for (int j = 0; j < n_ang; ++j) {
      const auto target = f(std::polar(rz, kTwoPi * j / n_ang));
      double turn = 0.0;
      for (std::size_t k = 0; k < kBoundary; ++k) {
        const auto a = curve[k] - target;
        const auto b = curve[(k + 1) % kBoundary] - target;
        turn += std::arg(b / a);
      }
      const long winding = std::lround(turn / kTwoPi);
      if (winding != 1) return false;
    }
  }
  return true;
}

}  // namespace hdisk
