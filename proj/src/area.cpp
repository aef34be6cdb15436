#include "hdisk/area.hpp"

#include "hdisk/fft.hpp"
#include "hdisk/grid_trig.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdisk {

std::string_view to_string(AreaMethod method) {
  switch (method) {
    case AreaMethod::GreenSpectral: return "green-spectral";
    case AreaMethod::GreenQuadrature: return "green-quadrature";
    case AreaMethod::KernelDirect: return "kernel-direct";
    case AreaMethod::KernelFFT: return "kernel-fft";
    case AreaMethod::JacobianGrid: return "jacobian";
    case AreaMethod::ExactFamily: return "exact";
  }
  return "?";
}

AreaMethod area_method_from_string(std::string_view name) {
  for (auto m : {AreaMethod::GreenSpectral, AreaMethod::GreenQuadrature, AreaMethod::KernelDirect,
                 AreaMethod::KernelFFT, AreaMethod::JacobianGrid, AreaMethod::ExactFamily}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown area method: " + std::string(name));
}

Radius::Radius(double r) : r_(r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("Radius: r must lie in (0, 1)");
}

std::size_t kernel_sample_count(Radius r) { return default_sample_count(r.value() * r.value()); }

namespace {

double green_sum(const FourierCoeffs& c, double r, int order) {
  const double r2 = r * r;
  double acc = 0.0;
  double pw = 1.0;
  for (int n = 1; n <= order; ++n) {
    pw *= r2;
    acc += static_cast<double>(n) * (std::norm(c[n]) - std::norm(c[-n])) * pw;
  }
  return kPi * acc;
}

void check_even_samples(std::size_t m, const char* who) {
  if (m < 8 || m % 2 != 0) throw std::invalid_argument(std::string(who) + ": sample count must be even and >= 8");
}

double green_quadrature_value(const BoundaryMap& map, double r, std::size_t m) {
  const auto lift = map.sample_lift(m);
  std::vector<std::complex<double>> g(m);
  for (std::size_t k = 0; k < m; ++k) g[k] = map.omega() * std::polar(1.0, lift[k]);
  std::vector<double> p(m), dp(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    p[k] = poisson_kernel(r, t);
    dp[k] = poisson_kernel_deriv(r, t);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::complex<double> f = 0.0;
    std::complex<double> ft = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t d = (i + m - k) % m;
      f += g[k] * p[d];
      ft += g[k] * dp[d];
    }
    acc += std::imag(std::conj(f) * ft);
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  // f and f_θ each carry 1/m; the θ-trapezoid carries 2π/m.
  return 0.5 * acc * inv_m * inv_m * (kTwoPi * inv_m);
}

std::vector<double> kernel_table(double r, std::size_t m) {
  std::vector<double> k(m);
  for (std::size_t j = 0; j < m; ++j) k[j] = kernel_K_grid(r, j, m);
  return k;
}

double kernel_direct_value(const BoundaryMap& map, double r, std::size_t m) {
  const auto xi = map.sample_lift(m);
  const auto ktab = kernel_table(r, m);
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double row = 0.0;
    for (std::size_t k = 0; k < m; ++k) row += ktab[(j + m - k) % m] * std::sin(xi[j] - xi[k]);
    total += row;
  }
  const double md = static_cast<double>(m);
  return total * kPi / (md * md);
}

double kernel_fft_value(const BoundaryMap& map, double r, std::size_t m) {
  const auto xi = map.sample_lift(m);
  const auto ktab = kernel_table(r, m);
  std::vector<double> u(m), v(m);
  for (std::size_t k = 0; k < m; ++k) {
    u[k] = std::sin(xi[k]);
    v[k] = std::cos(xi[k]);
  }
  // Σ_j Σ_k K_{j−k} (u_j v_k − v_j u_k) = Σ_j u_j (K∗v)_j − v_j (K∗u)_j.
  const auto kv = fft::circular_convolve(ktab, v);
  const auto ku = fft::circular_convolve(ktab, u);
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) total += u[j] * kv[j] - v[j] * ku[j];
  const double md = static_cast<double>(m);
  return total * kPi / (md * md);
}

struct GslTableDeleter {
  void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};

double jacobian_value(const FourierCoeffs& c, double r, std::size_t n_rho, std::size_t n_theta) {
  std::unique_ptr<gsl_integration_glfixed_table, GslTableDeleter> table(
      gsl_integration_glfixed_table_alloc(n_rho));
  if (!table) throw std::runtime_error("gsl: cannot allocate Gauss-Legendre table");
  double total = 0.0;
  for (std::size_t i = 0; i < n_rho; ++i) {
    double rho = 0.0;
    double w = 0.0;
    gsl_integration_glfixed_point(0.0, r, i, &rho, &w, table.get());
    double ring = 0.0;
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n_theta);
      ring += eval_wirtinger(c, std::polar(rho, theta)).jacobian();
    }
    total += w * rho * ring * kTwoPi / static_cast<double>(n_theta);
  }
  return total;
}

}  // namespace

AreaEstimate area_green_spectral(const FourierCoeffs& coeffs, Radius r) {
  const int n = coeffs.order();
  const double value = green_sum(coeffs, r.value(), n);
  const double half = green_sum(coeffs, r.value(), n / 2);
  return {value, AreaMethod::GreenSpectral, static_cast<std::size_t>(n), std::abs(value - half)};
}

AreaEstimate area_green_spectral(const BoundaryMap& map, Radius r, int order) {
  if (order <= 0) order = static_cast<int>(default_sample_count(r.value()) / 4);
  return area_green_spectral(fourier_from_boundary(map, order), r);
}

AreaEstimate area_green_quadrature(const BoundaryMap& map, Radius r, std::size_t samples) {
  check_even_samples(samples, "area_green_quadrature");
  const double value = green_quadrature_value(map, r.value(), samples);
  const double half = green_quadrature_value(map, r.value(), samples / 2);
  return {value, AreaMethod::GreenQuadrature, samples, std::abs(value - half)};
}

double kernel_K(double r, double alpha) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("kernel_K: r must lie in [0, 1)");
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double d = 1.0 - 2.0 * r2 * std::cos(alpha) + r4;
  return 2.0 * r2 * (1.0 - r4) * std::sin(alpha) / (d * d);
}

double kernel_K_grid(double r, std::size_t k, std::size_t n) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("kernel_K_grid: r must lie in [0, 1)");
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double d = 1.0 - 2.0 * r2 * grid_cos(k, n) + r4;
  return 2.0 * r2 * (1.0 - r4) * grid_sin(k, n) / (d * d);
}

AreaEstimate area_kernel_direct(const BoundaryMap& map, Radius r, std::size_t samples) {
  check_even_samples(samples, "area_kernel_direct");
  const double value = kernel_direct_value(map, r.value(), samples);
  const double half = kernel_direct_value(map, r.value(), samples / 2);
  return {value, AreaMethod::KernelDirect, samples, std::abs(value - half)};
}

AreaEstimate area_kernel_fft(const BoundaryMap& map, Radius r, std::size_t samples) {
  check_even_samples(samples, "area_kernel_fft");
  const double value = kernel_fft_value(map, r.value(), samples);
  const double half = kernel_fft_value(map, r.value(), samples / 2);
  return {value, AreaMethod::KernelFFT, samples, std::abs(value - half)};
}

AreaEstimate area_jacobian_grid(const FourierCoeffs& coeffs, Radius r, std::size_t n_rho, std::size_t n_theta) {
  if (n_rho < 2 || n_theta < 4) throw std::invalid_argument("area_jacobian_grid: grid too small");
  const double value = jacobian_value(coeffs, r.value(), n_rho, n_theta);
  const double half = jacobian_value(coeffs, r.value(), n_rho / 2, n_theta / 2);
  return {value, AreaMethod::JacobianGrid, n_theta, std::abs(value - half)};
}

AreaEstimate area_jacobian_grid(const BoundaryMap& map, Radius r, std::size_t n_rho, std::size_t n_theta) {
  if (map.kind() != MapKind::Homeomorphism) {
    throw std::domain_error("area_jacobian_grid: boundary map must be a homeomorphism");
  }
  const auto order = static_cast<int>(default_sample_count(r.value()) / 4);
  return area_jacobian_grid(fourier_from_boundary(map, order), r, n_rho, n_theta);
}

AreaEstimate exact_family_area(const ExactFamily& family, Radius r) {
  const double rv = r.value();
  double value = 0.0;
  switch (family.kind) {
    case ExactFamily::Kind::Identity:
    case ExactFamily::Kind::Rotation:
      value = kPi * rv * rv;
      break;
    case ExactFamily::Kind::Shear: {
      const double c2 = std::norm(family.param);
      if (!(c2 < 0.25)) throw std::domain_error("exact_family_area: shear needs |c| < 1/2");
      value = kPi * (rv * rv - 2.0 * c2 * rv * rv * rv * rv);
      break;
    }
    case ExactFamily::Kind::MobiusDisk: {
      const double a2 = std::norm(family.param);
      if (!(a2 < 1.0)) throw std::domain_error("exact_family_area: Mobius needs |a| < 1");
      const double radius = rv * (1.0 - a2) / (1.0 - a2 * rv * rv);
      value = kPi * radius * radius;
      break;
    }
  }
  return {value, AreaMethod::ExactFamily, 0, 0.0};
}

FourierCoeffs family_coefficients(const ExactFamily& family, int order) {
  if (order < 2) throw std::invalid_argument("family_coefficients: order must be >= 2");
  std::vector<std::pair<int, std::complex<double>>> terms;
  switch (family.kind) {
    case ExactFamily::Kind::Identity:
      terms.emplace_back(1, 1.0);
      break;
    case ExactFamily::Kind::Rotation:
      terms.emplace_back(1, std::polar(1.0, family.param.real()));
      break;
    case ExactFamily::Kind::Shear:
      if (!(std::abs(family.param) < 0.5)) throw std::domain_error("family_coefficients: shear needs |c| < 1/2");
      terms.emplace_back(1, 1.0);
      terms.emplace_back(-2, family.param);
      break;
    case ExactFamily::Kind::MobiusDisk: {
      const auto a = family.param;
      if (!(std::abs(a) < 1.0)) throw std::domain_error("family_coefficients: Mobius needs |a| < 1");
      terms.emplace_back(0, -a);
      std::complex<double> pw = 1.0;
      for (int n = 1; n <= order; ++n) {
        terms.emplace_back(n, (1.0 - std::norm(a)) * pw);
        pw *= std::conj(a);
      }
      break;
    }
  }
  terms.emplace_back(order, 0.0);
  terms.emplace_back(-order, 0.0);
  return FourierCoeffs::from_terms(terms, "family");
}

AreaEstimate compute_area(const BoundaryMap& map, Radius r, AreaMethod method, std::size_t resolution) {
  switch (method) {
    case AreaMethod::GreenSpectral:
      return area_green_spectral(map, r, static_cast<int>(resolution));
    case AreaMethod::GreenQuadrature:
      return area_green_quadrature(map, r, resolution ? resolution : default_sample_count(r.value()));
    case AreaMethod::KernelDirect:
      return area_kernel_direct(map, r, resolution ? resolution : kernel_sample_count(r));
    case AreaMethod::KernelFFT:
      return area_kernel_fft(map, r, resolution ? resolution : kernel_sample_count(r));
    case AreaMethod::JacobianGrid: {
      const std::size_t n_theta = resolution ? resolution : default_sample_count(r.value());
      return area_jacobian_grid(map, r, 64, n_theta);
    }
    case AreaMethod::ExactFamily:
      throw std::invalid_argument("compute_area: exact areas need a family, not a boundary map");
  }
  throw std::invalid_argument("compute_area: unknown method");
}

}  // namespace hdisk
