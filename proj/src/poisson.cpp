#include "hdisk/poisson.hpp"

#include "hdisk/fft.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace hdisk {

namespace {

void check_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error(std::string(who) + ": r must lie in [0, 1)");
}

class Fnv1a {
 public:
  void add(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
  }
  void add(double v) { add(&v, sizeof v); }
  std::string hex() const {
    std::ostringstream os;
    os << std::hex << h_;
    return os.str();
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string hash_source(const BoundaryMap& map, std::size_t samples) {
  Fnv1a h;
  for (const auto& k : map.knots()) {
    h.add(k.t);
    h.add(k.xi);
  }
  h.add(map.omega().real());
  h.add(map.omega().imag());
  const int kind = static_cast<int>(map.kind());
  h.add(&kind, sizeof kind);
  h.add(&samples, sizeof samples);
  return h.hex() + "/" + std::to_string(samples);
}

}  // namespace

double poisson_kernel(double r, double t) {
  check_radius(r, "poisson_kernel");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(t) + r * r);
}

double poisson_kernel_deriv(double r, double t) {
  check_radius(r, "poisson_kernel_deriv");
  const double d = 1.0 - 2.0 * r * std::cos(t) + r * r;
  return -2.0 * r * (1.0 - r * r) * std::sin(t) / (d * d);
}

double semigroup_residual(double r, double sigma, double t, std::size_t n_samples) {
  check_radius(r, "semigroup_residual");
  check_radius(sigma, "semigroup_residual");
  if (n_samples == 0) throw std::invalid_argument("semigroup_residual: n_samples must be positive");
  double acc = 0.0;
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double s = kTwoPi * static_cast<double>(k) / static_cast<double>(n_samples);
    acc += poisson_kernel(r, s) * poisson_kernel(sigma, t - s);
  }
  return std::abs(acc / static_cast<double>(n_samples) - poisson_kernel(r * sigma, t));
}

std::size_t default_sample_count(double r) {
  check_radius(r, "default_sample_count");
  const double need = std::ceil(8.0 / (1.0 - r));
  const auto pow2 = std::bit_ceil(static_cast<std::size_t>(need));
  return std::max<std::size_t>(1024, pow2);
}

FourierCoeffs::FourierCoeffs(int order, std::vector<std::complex<double>> coeffs, std::string source_hash)
    : order_(order), coeffs_(std::move(coeffs)), source_hash_(std::move(source_hash)) {
  if (order_ < 0 || coeffs_.size() != static_cast<std::size_t>(2 * order_ + 1)) {
    throw std::invalid_argument("FourierCoeffs: coefficient count must be 2N+1");
  }
}

FourierCoeffs FourierCoeffs::from_terms(std::span<const std::pair<int, std::complex<double>>> terms,
                                        std::string source_hash) {
  int order = 0;
  for (const auto& [n, c] : terms) order = std::max(order, std::abs(n));
  std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * order + 1));
  for (const auto& [n, v] : terms) c[static_cast<std::size_t>(n + order)] += v;
  return FourierCoeffs(order, std::move(c), std::move(source_hash));
}

std::complex<double> FourierCoeffs::operator[](int n) const {
  if (n < -order_ || n > order_) return {};
  return coeffs_[static_cast<std::size_t>(n + order_)];
}

FourierCoeffs FourierCoeffs::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("FourierCoeffs::truncated: negative order");
  std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * order + 1));
  for (int n = -order; n <= order; ++n) c[static_cast<std::size_t>(n + order)] = (*this)[n];
  return FourierCoeffs(order, std::move(c), source_hash_ + "/N" + std::to_string(order));
}

FourierCoeffs fourier_from_boundary(const BoundaryMap& map, int order, std::size_t samples) {
  if (order < 1) throw std::invalid_argument("fourier_from_boundary: order must be >= 1");
  const auto n_order = static_cast<std::size_t>(order);
  if (samples == 0) samples = 4 * n_order;
  if (samples < 4 * n_order) throw std::invalid_argument("fourier_from_boundary: need samples >= 4N");

  std::vector<std::complex<double>> c(2 * n_order + 1);
  const auto omega = map.omega();

  if (map.kind() == MapKind::NondecreasingStep) {
    // c_n = (1/2π) Σ_j ω e^{iv_j} ∫_{p_j}^{p_{j+1}} e^{−int} dt, exactly.
    const auto knots = map.knots();
    for (std::size_t j = 0; j < knots.size(); ++j) {
      const double a = knots[j].t;
      const double b = j + 1 < knots.size() ? knots[j + 1].t : knots.front().t + kTwoPi;
      const auto value = omega * std::polar(1.0, knots[j].xi);
      for (int n = -order; n <= order; ++n) {
        std::complex<double> seg;
        if (n == 0) {
          seg = b - a;
        } else {
          const double dn = static_cast<double>(n);
          seg = (std::polar(1.0, -dn * b) - std::polar(1.0, -dn * a)) / std::complex<double>(0.0, -dn);
        }
        c[static_cast<std::size_t>(n + order)] += value * seg / kTwoPi;
      }
    }
    return FourierCoeffs(order, std::move(c), hash_source(map, 0));
  }

  const auto lift = map.sample_lift(samples);
  std::vector<std::complex<double>> g(samples);
  for (std::size_t k = 0; k < samples; ++k) g[k] = omega * std::polar(1.0, lift[k]);
  const auto spectrum = fft::dft(g, fft::Direction::Forward);
  const double inv_m = 1.0 / static_cast<double>(samples);
  for (int n = -order; n <= order; ++n) {
    const auto idx = static_cast<std::size_t>((n + static_cast<long>(samples)) % static_cast<long>(samples));
    c[static_cast<std::size_t>(n + order)] = spectrum[idx] * inv_m;
  }
  return FourierCoeffs(order, std::move(c), hash_source(map, samples));
}

namespace {

// h(z) = Σ_{n≥0} c_n z^n and k(w) = Σ_{n≥1} c_{−n} w^n, so f = h(z) + k(z̄).
std::complex<double> holo_part(const FourierCoeffs& c, std::complex<double> z) {
  std::complex<double> acc = c[c.order()];
  for (int n = c.order() - 1; n >= 0; --n) acc = acc * z + c[n];
  return acc;
}

std::complex<double> anti_part(const FourierCoeffs& c, std::complex<double> w) {
  std::complex<double> acc = 0.0;
  for (int n = c.order(); n >= 1; --n) acc = acc * w + c[-n];
  return acc * w;
}

std::complex<double> holo_deriv(const FourierCoeffs& c, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (int n = c.order(); n >= 1; --n) acc = acc * z + static_cast<double>(n) * c[n];
  return acc;
}

std::complex<double> anti_deriv(const FourierCoeffs& c, std::complex<double> w) {
  std::complex<double> acc = 0.0;
  for (int n = c.order(); n >= 1; --n) acc = acc * w + static_cast<double>(n) * c[-n];
  return acc;
}

}  // namespace

std::complex<double> eval_harmonic(const FourierCoeffs& coeffs, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("eval_harmonic: |z| must be < 1");
  return holo_part(coeffs, z) + anti_part(coeffs, std::conj(z));
}

std::complex<double> eval_harmonic(const FourierCoeffs& coeffs, double r, double theta) {
  check_radius(r, "eval_harmonic");
  return eval_harmonic(coeffs, std::polar(r, theta));
}

std::complex<double> eval_theta_derivative(const FourierCoeffs& coeffs, double r, double theta) {
  check_radius(r, "eval_theta_derivative");
  const auto z = std::polar(r, theta);
  const auto i = std::complex<double>(0.0, 1.0);
  return i * z * holo_deriv(coeffs, z) - i * std::conj(z) * anti_deriv(coeffs, std::conj(z));
}

Wirtinger eval_wirtinger(const FourierCoeffs& coeffs, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("eval_wirtinger: |z| must be < 1");
  return {holo_deriv(coeffs, z), anti_deriv(coeffs, std::conj(z))};
}

std::complex<double> eval_harmonic_direct(const BoundaryMap& map, double r, double theta, std::size_t samples) {
  check_radius(r, "eval_harmonic_direct");
  const auto lift = map.sample_lift(samples);
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    acc += std::polar(1.0, lift[k]) * poisson_kernel(r, theta - t);
  }
  return map.omega() * acc / static_cast<double>(samples);
}

std::complex<double> eval_theta_derivative_direct(const BoundaryMap& map, double r, double theta,
                                                  std::size_t samples) {
  check_radius(r, "eval_theta_derivative_direct");
  const auto lift = map.sample_lift(samples);
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    acc += std::polar(1.0, lift[k]) * poisson_kernel_deriv(r, theta - t);
  }
  return map.omega() * acc / static_cast<double>(samples);
}

}  // namespace hdisk
