#include "hdisk/circle_maps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hdisk {

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Homeomorphism: return "Homeomorphism";
    case MapKind::NondecreasingStep: return "NondecreasingStep";
  }
  return "?";
}

MapKind map_kind_from_string(std::string_view name) {
  if (name == "Homeomorphism") return MapKind::Homeomorphism;
  if (name == "NondecreasingStep") return MapKind::NondecreasingStep;
  throw std::invalid_argument("unknown map kind: " + std::string(name));
}

BoundaryMap::BoundaryMap(std::vector<Knot> knots, std::complex<double> omega, MapKind kind)
    : knots_(std::move(knots)), omega_(omega), kind_(kind) {
  if (knots_.empty()) throw std::invalid_argument("BoundaryMap: no knots");
  if (!std::isfinite(omega_.real()) || !std::isfinite(omega_.imag()) ||
      std::abs(std::abs(omega_) - 1.0) > 1e-12) {
    throw std::invalid_argument("BoundaryMap: omega is not unimodular");
  }
  const bool strict = kind_ == MapKind::Homeomorphism;
  for (std::size_t j = 0; j < knots_.size(); ++j) {
    const auto& k = knots_[j];
    if (!std::isfinite(k.t) || !std::isfinite(k.xi)) {
      throw std::invalid_argument("BoundaryMap: non-finite knot");
    }
    if (k.t < 0.0 || k.t >= kTwoPi) throw std::invalid_argument("BoundaryMap: knot t outside [0, 2pi)");
    if (j > 0) {
      const auto& p = knots_[j - 1];
      if (!(k.t > p.t)) throw std::invalid_argument("BoundaryMap: knot t not strictly increasing");
      if (strict ? !(k.xi > p.xi) : !(k.xi >= p.xi)) {
        throw std::invalid_argument("BoundaryMap: lift is not monotone");
      }
    }
  }
  const double closing = knots_.front().xi + kTwoPi;
  if (strict ? !(knots_.back().xi < closing) : !(knots_.back().xi <= closing)) {
    throw std::invalid_argument("BoundaryMap: lift rises by more than 2pi over one period");
  }

  slopes_.resize(knots_.size());
  for (std::size_t j = 0; j + 1 < knots_.size(); ++j) {
    slopes_[j] = (knots_[j + 1].xi - knots_[j].xi) / (knots_[j + 1].t - knots_[j].t);
  }
  slopes_.back() = (closing - knots_.back().xi) / (knots_.front().t + kTwoPi - knots_.back().t);
}

double BoundaryMap::eval_period(double tau) const {
  const auto& first = knots_.front();
  const auto& last = knots_.back();
  if (tau < first.t) {
    // Wrap segment, approached from the left of the first knot.
    if (kind_ == MapKind::NondecreasingStep) return last.xi - kTwoPi;
    return first.xi - slopes_.back() * (first.t - tau);
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), tau,
                             [](double v, const Knot& k) { return v < k.t; });
  const auto j = static_cast<std::size_t>(std::distance(knots_.begin(), it)) - 1;
  if (kind_ == MapKind::NondecreasingStep) return knots_[j].xi;
  return knots_[j].xi + slopes_[j] * (tau - knots_[j].t);
}

double BoundaryMap::eval_xi(double t) const {
  if (t >= 0.0 && t < kTwoPi) return eval_period(t);
  double turns = std::floor(t / kTwoPi);
  double tau = t - kTwoPi * turns;
  if (tau >= kTwoPi) {
    tau -= kTwoPi;
    turns += 1.0;
  } else if (tau < 0.0) {
    tau += kTwoPi;
    turns -= 1.0;
  }
  if (tau >= kTwoPi) tau = 0.0;
  return eval_period(tau) + kTwoPi * turns;
}

std::vector<double> BoundaryMap::sample_lift(std::size_t m) const {
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    out[k] = eval_period(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
  }
  return out;
}

BoundaryMap make_identity() { return make_rotation(0.0); }

BoundaryMap make_rotation(double phi0) {
  return BoundaryMap({{0.0, 0.0}}, std::polar(1.0, phi0), MapKind::Homeomorphism);
}

namespace {

double wrap_to_pi(double x) {
  x = std::remainder(x, kTwoPi);
  return x;
}

std::vector<Knot> uniform_knots_from_increments(std::span<const double> increments) {
  double total = 0.0;
  for (double d : increments) total += d;
  const double scale = kTwoPi / total;
  const std::size_t n = increments.size();
  std::vector<Knot> knots(n);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    knots[j] = {kTwoPi * static_cast<double>(j) / static_cast<double>(n), acc * scale};
    acc += increments[j];
  }
  return knots;
}

}  // namespace

BoundaryMap make_mobius_boundary(std::complex<double> a, std::size_t n_knots) {
  if (!(std::abs(a) < 1.0)) throw std::domain_error("make_mobius_boundary: |a| must be < 1");
  if (n_knots < 4) throw std::invalid_argument("make_mobius_boundary: need at least 4 knots");
  std::vector<Knot> knots(n_knots);
  double prev_arg = 0.0;
  double lift = 0.0;
  for (std::size_t j = 0; j < n_knots; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n_knots);
    const auto z = std::polar(1.0, t);
    const double arg = std::arg((z - a) / (1.0 - std::conj(a) * z));
    if (j == 0) {
      lift = arg < 0.0 ? arg + kTwoPi : arg;
    } else {
      lift += wrap_to_pi(arg - prev_arg);
    }
    prev_arg = arg;
    knots[j] = {t, lift};
  }
  return BoundaryMap(std::move(knots), 1.0, MapKind::Homeomorphism);
}

BoundaryMap make_random_homeomorphism(std::uint64_t seed, std::size_t n_knots, double roughness) {
  if (n_knots < 4) throw std::invalid_argument("make_random_homeomorphism: n_knots must be >= 4");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> inc(n_knots);
  for (auto& d : inc) d = std::exp(roughness * gauss(rng));
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  const double phi = phase(rng);
  return BoundaryMap(uniform_knots_from_increments(inc), std::polar(1.0, phi), MapKind::Homeomorphism);
}

BoundaryMap make_symmetric_random_homeomorphism(std::uint64_t seed, std::size_t n_knots,
                                                double roughness, std::size_t folds) {
  if (folds == 0 || n_knots % folds != 0 || n_knots / folds < 2) {
    throw std::invalid_argument("make_symmetric_random_homeomorphism: n_knots must be a multiple of folds");
  }
  const std::size_t block = n_knots / folds;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> inc(block);
  for (auto& d : inc) d = std::exp(roughness * gauss(rng));
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  const double phi = phase(rng);

  double total = 0.0;
  for (double d : inc) total += d;
  const double period = kTwoPi / static_cast<double>(folds);
  const double scale = period / total;
  std::vector<Knot> knots(n_knots);
  double acc = 0.0;
  for (std::size_t j = 0; j < block; ++j) {
    knots[j] = {kTwoPi * static_cast<double>(j) / static_cast<double>(n_knots), acc * scale};
    acc += inc[j];
  }
  for (std::size_t b = 1; b < folds; ++b) {
    for (std::size_t j = 0; j < block; ++j) {
      const std::size_t idx = b * block + j;
      knots[idx] = {kTwoPi * static_cast<double>(idx) / static_cast<double>(n_knots),
                    knots[j].xi + static_cast<double>(b) * period};
    }
  }
  return BoundaryMap(std::move(knots), std::polar(1.0, phi), MapKind::Homeomorphism);
}

BoundaryMap make_step_map(std::span<const double> jump_points, std::span<const double> values) {
  if (jump_points.empty() || jump_points.size() != values.size()) {
    throw std::domain_error("make_step_map: jump_points and values must be nonempty and of equal length");
  }
  std::vector<Knot> knots(jump_points.size());
  for (std::size_t j = 0; j < jump_points.size(); ++j) {
    if (j > 0 && !(values[j] >= values[j - 1])) throw std::domain_error("make_step_map: values must be nondecreasing");
    knots[j] = {jump_points[j], values[j]};
  }
  if (!(values.back() <= values.front() + kTwoPi)) {
    throw std::domain_error("make_step_map: values rise by more than 2pi");
  }
  try {
    return BoundaryMap(std::move(knots), 1.0, MapKind::NondecreasingStep);
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(e.what());
  }
}

BoundaryMap mollify(const BoundaryMap& map, double width, std::size_t n_out) {
  if (!(width > 0.0) || width > kTwoPi) throw std::invalid_argument("mollify: width must be in (0, 2pi]");
  if (n_out < 4) throw std::invalid_argument("mollify: n_out must be >= 4");
  constexpr int kHalfNodes = 32;
  std::vector<double> offsets;
  std::vector<double> weights;
  double wsum = 0.0;
  for (int q = -kHalfNodes + 1; q < kHalfNodes; ++q) {
    const double x = static_cast<double>(q) / kHalfNodes;
    const double w = std::exp(-1.0 / (1.0 - x * x));
    offsets.push_back(0.5 * width * x);
    weights.push_back(w);
    wsum += w;
  }
  for (auto& w : weights) w /= wsum;

  std::vector<Knot> knots(n_out);
  for (std::size_t k = 0; k < n_out; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n_out);
    double acc = 0.0;
    for (std::size_t q = 0; q < offsets.size(); ++q) acc += weights[q] * map.eval_xi(t - offsets[q]);
    knots[k] = {t, acc};
  }
  return BoundaryMap(std::move(knots), map.omega(), MapKind::Homeomorphism);
}

BoundaryMap conjugate_orientation(std::span<const Knot> reversing_knots, std::complex<double> omega,
                                  MapKind kind) {
  // η(τ) = ξ(−τ); for t_j > 0 this is ξ(t_j − 2π) = ξ_j + 2π at τ = 2π − t_j.
  std::vector<Knot> knots;
  knots.reserve(reversing_knots.size());
  for (const auto& k : reversing_knots) {
    if (k.t == 0.0) {
      knots.push_back({0.0, k.xi});
    } else {
      knots.push_back({kTwoPi - k.t, k.xi + kTwoPi});
    }
  }
  std::sort(knots.begin(), knots.end(), [](const Knot& a, const Knot& b) { return a.t < b.t; });
  return BoundaryMap(std::move(knots), omega, kind);
}

double xi_deviation_from_identity(const BoundaryMap& map, std::size_t grid) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(grid);
    const double d = map.eval_xi(t) - t;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return 0.5 * (hi - lo);
}

MonotoneGamma::MonotoneGamma(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 3) throw std::invalid_argument("MonotoneGamma: need at least 3 samples");
  if ((samples_.size() - 1) % 2 != 0) throw std::invalid_argument("MonotoneGamma: interval count must be even");
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (!std::isfinite(samples_[k])) throw std::invalid_argument("MonotoneGamma: non-finite sample");
    if (k > 0 && samples_[k] < samples_[k - 1] - 1e-12) {
      throw std::invalid_argument("MonotoneGamma: samples decrease");
    }
  }
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    samples_[k] = std::clamp(samples_[k], 0.0, kTwoPi);
    if (k > 0 && samples_[k] < samples_[k - 1]) samples_[k] = samples_[k - 1];
  }
}

double MonotoneGamma::alpha(std::size_t k) const {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(intervals());
}

double MonotoneGamma::operator()(double alpha) const {
  const double n = static_cast<double>(intervals());
  const double pos = std::clamp(alpha / kTwoPi, 0.0, 1.0) * n;
  const auto k = std::min(static_cast<std::size_t>(pos), intervals() - 1);
  const double frac = pos - static_cast<double>(k);
  return samples_[k] + frac * (samples_[k + 1] - samples_[k]);
}

MonotoneGamma reflect_gamma(const MonotoneGamma& g) {
  const std::size_t n = g.intervals();
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = kTwoPi - g[n - k];
  return MonotoneGamma(std::move(out));
}

}  // namespace hdisk
