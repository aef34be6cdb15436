#include "hdisk/proof_checks.hpp"

#include "hdisk/grid_trig.hpp"
#include "hdisk/poisson.hpp"
#include "hdisk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hdisk {

namespace {

double grid_angle(std::size_t k, std::size_t n) {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(n);
}

// H(α_k, β) with α_k = 2πk/n.
double gap_on_grid(std::size_t k, std::size_t n, double beta) {
  return grid_sin(k, n) + (beta - grid_angle(k, n)) * grid_cos(k, n) - std::sin(beta);
}

// H(α_k, β_j) on a common grid.
double gap_grid_grid(std::size_t k, std::size_t j, std::size_t n) {
  return grid_sin(k, n) + (grid_angle(j, n) - grid_angle(k, n)) * grid_cos(k, n) - grid_sin(j, n);
}

// Lift samples on the uniform grid with index wrap: ξ_{k+M} = ξ_k + 2π.
class LiftGrid {
 public:
  LiftGrid(const BoundaryMap& map, std::size_t m) : m_(m), xi_(map.sample_lift(m)) {}
  double operator()(std::size_t k) const {
    const std::size_t turns = k / m_;
    return xi_[k % m_] + kTwoPi * static_cast<double>(turns);
  }

 private:
  std::size_t m_;
  std::vector<double> xi_;
};

void require_even(std::size_t n, const char* who) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument(std::string(who) + ": grid size must be even");
}

}  // namespace

MonotoneGamma gamma_slice(const BoundaryMap& map, double t, std::size_t intervals) {
  require_even(intervals, "gamma_slice");
  const double base = map.eval_xi(t);
  std::vector<double> s(intervals + 1);
  s[0] = 0.0;
  for (std::size_t k = 1; k < intervals; ++k) s[k] = map.eval_xi(t + grid_angle(k, intervals)) - base;
  s[intervals] = kTwoPi;
  return MonotoneGamma(std::move(s));
}

double tangent_gap(double alpha, double beta) {
  return std::sin(alpha) + (beta - alpha) * std::cos(alpha) - std::sin(beta);
}

double kernel_defining_quadrature(double r, double alpha, std::size_t samples) {
  double acc = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = grid_angle(k, samples);
    acc += poisson_kernel(r, theta) * poisson_kernel_deriv(r, theta - alpha);
  }
  return acc / static_cast<double>(samples);
}

SignStructureReport sign_structure(std::size_t grid_n, std::span<const double> radii) {
  require_even(grid_n, "sign_structure");
  const std::size_t n = grid_n;
  const std::size_t half = n / 2;
  SignStructureReport rep;
  rep.min_h_square = INFINITY;
  rep.min_h_off_diagonal = INFINITY;
  rep.min_dh_dbeta = INFINITY;
  rep.min_outside_triangles = INFINITY;

  for (std::size_t i = 0; i <= half; ++i) {
    for (std::size_t j = 0; j <= half; ++j) {
      const double h = gap_grid_grid(i, j, n);
      rep.min_h_square = std::min(rep.min_h_square, h);
      if (i > j + 1 || j > i + 1) rep.min_h_off_diagonal = std::min(rep.min_h_off_diagonal, h);
    }
    for (std::size_t j = i; j <= n - i; ++j) {
      rep.min_dh_dbeta = std::min(rep.min_dh_dbeta, grid_cos(i, n) - grid_cos(j, n));
    }
  }

  for (double r : radii) {
    for (std::size_t i = 0; i <= n; ++i) {
      const double k_i = kernel_K_grid(r, i, n);
      const double k_mirror = kernel_K_grid(r, n - i, n);
      for (std::size_t j = 0; j <= n; ++j) {
        const double prod = k_i * gap_grid_grid(i, j, n);
        const bool in_t1 = i > 0 && i < half && j > n - i;
        const bool in_t2 = i > half && i < n && j < n - i;
        if (in_t1 || in_t2) {
          if (prod < 0.0) ++rep.negative_in_triangles;
        } else {
          rep.min_outside_triangles = std::min(rep.min_outside_triangles, prod);
        }
        const double mirrored = k_mirror * gap_grid_grid(n - i, n - j, n);
        rep.central_symmetry_residual = std::max(rep.central_symmetry_residual, std::abs(prod - mirrored));
      }
    }
  }
  return rep;
}

std::vector<VerdictRecord> check_H_sign_structure(std::size_t grid_n, std::span<const double> radii) {
  if (grid_n < 64) throw std::invalid_argument("check_H_sign_structure: grid_n must be >= 64");
  const auto rep = sign_structure(grid_n, radii);
  std::vector<VerdictRecord> out;
  out.push_back(ge_verdict("H_nonnegative_square", rep.min_h_square, 0.0, 1e-14));
  out.push_back(ge_verdict("H_positive_off_diagonal", rep.min_h_off_diagonal, 1e-14, 0.0));
  out.push_back(ge_verdict("dH_dbeta_nonnegative", rep.min_dh_dbeta, 0.0, 1e-14));
  out.push_back(ge_verdict("KH_nonnegative_outside_triangles", rep.min_outside_triangles, 0.0, 1e-12));
  out.push_back(ge_verdict("KH_negative_inside_triangles", static_cast<double>(rep.negative_in_triangles), 1.0, 0.0));
  out.push_back(le_verdict("KH_central_symmetry", rep.central_symmetry_residual, 0.0, 1e-12));
  for (auto& v : out) v.resolution = grid_n;
  return out;
}

SymsumReport symsum_report(Radius r, std::size_t grid_n) {
  require_even(grid_n, "symsum_report");
  const std::size_t n = grid_n;
  SymsumReport rep;
  rep.min_rhs = INFINITY;
  for (std::size_t i = 0; i <= n; ++i) {
    const double k_i = kernel_K_grid(r.value(), i, n);
    const double k_m = kernel_K_grid(r.value(), n - i, n);
    const double rhs = 2.0 * k_i * gap_on_grid(i, n, kPi);
    rep.min_rhs = std::min(rep.min_rhs, rhs);
    for (std::size_t j = 0; j <= n; ++j) {
      const double lhs = k_i * gap_grid_grid(i, j, n) + k_m * gap_grid_grid(n - i, j, n);
      rep.residual = std::max(rep.residual, std::abs(lhs - rhs));
    }
  }
  return rep;
}

VerdictRecord check_symsum(Radius r, std::size_t grid_n) {
  const auto rep = symsum_report(r, grid_n);
  auto v = le_verdict("symsum_identity", rep.residual, 0.0, 1e-12);
  if (rep.min_rhs < -1e-12) v.passed = false;
  v.r = r.value();
  v.resolution = grid_n;
  v.error_indicator = rep.min_rhs;
  return v;
}

double cos_identity_residual(const BoundaryMap& map, Radius r, std::size_t samples) {
  const std::size_t m = samples;
  const LiftGrid xi(map, m);
  double total = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    const double alpha = grid_angle(a, m);
    double inner = 0.0;
    for (std::size_t j = 0; j < m; ++j) inner += (xi(a + j) - xi(j)) - alpha;
    total += kernel_K_grid(r.value(), a, m) * grid_cos(a, m) * inner;
  }
  const double md = static_cast<double>(m);
  return std::abs(total) / (md * md);
}

double shift_mean_residual(const BoundaryMap& map, double alpha, std::size_t samples) {
  double acc = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double t = grid_angle(j, samples);
    const double zeta_shift = map.eval_xi(alpha + t) - (alpha + t);
    const double zeta = map.eval_xi(t) - t;
    acc += zeta_shift - zeta;
  }
  return std::abs(acc) / static_cast<double>(samples);
}

double ar7_integral(const BoundaryMap& map, Radius r, std::size_t samples) {
  const std::size_t m = samples;
  const auto xi = map.sample_lift(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double s = grid_angle(i, m);
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = s - grid_angle(j, m);
      row += kernel_K(r.value(), d) * (std::sin(d) - std::sin(xi[i] - xi[j]));
    }
    total += row;
  }
  const double h = kTwoPi / static_cast<double>(m);
  return total * h * h;
}

double ar17_integral(const BoundaryMap& map, Radius r, std::size_t samples) {
  const std::size_t m = samples;
  const LiftGrid xi(map, m);
  double total = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    const double k = kernel_K_grid(r.value(), a, m);
    const double sa = grid_sin(a, m);
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) row += sa - std::sin(xi(a + j) - xi(j));
    total += k * row;
  }
  const double h = kTwoPi / static_cast<double>(m);
  return total * h * h;
}

double ar8_integral(const BoundaryMap& map, Radius r, std::size_t samples) {
  const std::size_t m = samples;
  const LiftGrid xi(map, m);
  double total = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    const double alpha = grid_angle(a, m);
    const double k = kernel_K_grid(r.value(), a, m);
    const double sa = grid_sin(a, m);
    const double ca = grid_cos(a, m);
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double gamma = xi(a + j) - xi(j);
      row += sa + (gamma - alpha) * ca - std::sin(gamma);
    }
    total += k * row;
  }
  const double h = kTwoPi / static_cast<double>(m);
  return total * h * h;
}

VerdictRecord check_ar8(const BoundaryMap& map, Radius r, std::size_t samples, double tol) {
  auto v = ge_verdict("ar8_nonnegative", ar8_integral(map, r, samples), 0.0, tol);
  v.r = r.value();
  v.resolution = samples;
  return v;
}

VerdictRecord check_ar8_bookkeeping(const BoundaryMap& map, Radius r, std::size_t samples, double tol) {
  const double value = ar8_integral(map, r, samples);
  const double gap = kPi * r.value() * r.value() - area_kernel_fft(map, r, samples).value;
  auto v = le_verdict("ar8_bookkeeping", std::abs(value / (4.0 * kPi) - gap), 0.0, tol);
  v.r = r.value();
  v.resolution = samples;
  return v;
}

namespace {

std::size_t alpha0_index(const MonotoneGamma& g) {
  const std::size_t n = g.intervals();
  std::size_t best = n / 2;
  for (std::size_t k = n / 2; k <= n; ++k) {
    if (g.alpha(k) + g[k] <= kTwoPi) best = k;
  }
  return best;
}

}  // namespace

Step3Result step3_integral(const MonotoneGamma& g_in, Radius r) {
  const std::size_t n = g_in.intervals();
  Step3Result res;
  const MonotoneGamma g = g_in[n / 2] > kPi ? reflect_gamma(g_in) : g_in;
  res.reflected = g_in[n / 2] > kPi;
  double acc = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    acc += w * kernel_K_grid(r.value(), k, n) * gap_on_grid(k, n, g[k]);
  }
  res.value = acc * kTwoPi / static_cast<double>(n);
  res.alpha0 = g.alpha(alpha0_index(g));
  return res;
}

double PunchlineChain::margin() const {
  return std::min({full - window, window - frozen, -std::abs(frozen - folded), folded});
}

PunchlineChain punchline_chain(const MonotoneGamma& g, Radius r) {
  const std::size_t n = g.intervals();
  if (g[n / 2] > kPi) throw std::invalid_argument("punchline_chain: requires Gamma(pi) <= pi");
  const double h = kTwoPi / static_cast<double>(n);
  const std::size_t k0 = alpha0_index(g);
  const double g_pi = g[n / 2];
  PunchlineChain c;
  c.alpha0 = g.alpha(k0);
  for (std::size_t k = 0; k <= n; ++k) {
    const double kk = kernel_K_grid(r.value(), k, n);
    const double term = kk * gap_on_grid(k, n, g[k]);
    c.full += term;
    if (k >= n - k0 && k <= k0) {
      c.window += term;
      c.frozen += kk * gap_on_grid(k, n, g_pi);
    }
    if (k >= n / 2 && k <= k0) c.folded += 2.0 * kk * gap_on_grid(k, n, kPi);
  }
  c.full *= h;
  c.window *= h;
  c.frozen *= h;
  c.folded *= h;
  return c;
}

VerdictRecord check_punchline_chain(const MonotoneGamma& g, Radius r, double tol) {
  const auto c = punchline_chain(g, r);
  auto v = ge_verdict("punchline_chain", c.margin(), 0.0, tol);
  v.r = r.value();
  v.resolution = g.intervals();
  return v;
}

double equality_positivity_margin(Radius r, std::size_t grid_n) {
  require_even(grid_n, "equality_positivity_margin");
  double worst = INFINITY;
  for (std::size_t k = 1; k < grid_n; ++k) {
    if (2 * k == grid_n) continue;
    worst = std::min(worst, kernel_K_grid(r.value(), k, grid_n) * gap_on_grid(k, grid_n, kPi));
  }
  return worst;
}

MonotoneGamma make_random_gamma(std::mt19937_64& rng, std::size_t intervals) {
  require_even(intervals, "make_random_gamma");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double sigma = 2.0 * unit(rng);
  const double p_flat = 0.5 * unit(rng);
  const double p_jump = 0.02 * unit(rng);
  std::vector<double> inc(intervals);
  double total = 0.0;
  for (auto& d : inc) {
    d = std::exp(sigma * gauss(rng));
    if (unit(rng) < p_flat) d = 0.0;
    if (unit(rng) < p_jump) d *= 50.0;
    total += d;
  }
  double lo = 0.0;
  double hi = kTwoPi;
  if (unit(rng) < 0.5) {
    lo = kTwoPi * unit(rng) * unit(rng);
    hi = lo + (kTwoPi - lo) * (0.2 + 0.8 * unit(rng));
  }
  std::vector<double> s(intervals + 1);
  double acc = 0.0;
  s[0] = lo;
  for (std::size_t k = 0; k < intervals; ++k) {
    acc += inc[k];
    s[k + 1] = total > 0.0 ? lo + (hi - lo) * (acc / total) : lo;
  }
  s[intervals] = total > 0.0 ? hi : lo;
  return MonotoneGamma(std::move(s));
}

std::vector<VerdictRecord> run_proof_suite(const ProofSuiteOptions& opt) {
  std::vector<VerdictRecord> out;
  auto tag = [&out](VerdictRecord v, const std::string& map_id, double r) {
    v.map_id = map_id;
    v.r = r;
    out.push_back(std::move(v));
  };

  // Closed-form kernel against its defining convolution, 4 radii × 8 angles.
  {
    double worst = 0.0;
    for (double r : {0.3, 0.5, 0.7, 0.9}) {
      for (int k = 0; k < 8; ++k) {
        const double alpha = (k + 0.5) * kTwoPi / 8.0;
        worst = std::max(worst, std::abs(kernel_K(r, alpha) - kernel_defining_quadrature(r, alpha, 2048)));
      }
    }
    auto v = le_verdict("kernel_closed_form", worst, 0.0, 1e-9);
    v.resolution = 2048;
    tag(v, "-", 0.0);
  }
  // Semigroup property of the Poisson kernel.
  {
    double worst = 0.0;
    const double rs[] = {0.3, 0.6, 0.9};
    for (double r : rs) {
      for (double s : rs) {
        for (int k = 0; k < 64; ++k) worst = std::max(worst, semigroup_residual(r, s, kTwoPi * k / 64.0, 2048));
      }
    }
    auto v = le_verdict("poisson_semigroup", worst, 0.0, 1e-8);
    v.resolution = 2048;
    tag(v, "-", 0.0);
  }

  for (auto& v : check_H_sign_structure(opt.grid_n, opt.radii)) tag(v, "-", 0.0);

  // ∂H/∂β = cos α − cos β by central differences.
  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    double worst = 0.0;
    const double hstep = 1e-6;
    for (int i = 0; i < 200; ++i) {
      const double a = ang(rng);
      const double b = ang(rng);
      const double fd = (tangent_gap(a, b + hstep) - tangent_gap(a, b - hstep)) / (2.0 * hstep);
      worst = std::max(worst, std::abs(fd - (std::cos(a) - std::cos(b))));
    }
    tag(le_verdict("dH_dbeta_finite_difference", worst, 0.0, 1e-8), "-", 0.0);
  }

  std::vector<std::pair<std::string, BoundaryMap>> maps;
  for (auto s : opt.map_seeds) {
    maps.emplace_back("random-s" + std::to_string(s) + "-moll64",
                      mollify(make_random_homeomorphism(s, 16, 0.5), kTwoPi / 64.0));
  }
  maps.emplace_back("mobius-0.5", make_mobius_boundary(0.5));

  for (double rv : opt.radii) {
    const Radius r(rv);
    tag(check_symsum(r, opt.grid_n), "-", rv);
    {
      const double m = equality_positivity_margin(r, opt.grid_n);
      auto v = ge_verdict("equality_positivity", m, 1e-12, 0.0);
      v.resolution = opt.grid_n;
      tag(v, "-", rv);
    }
    for (const auto& [id, map] : maps) {
      auto v1 = le_verdict("cos_identity", cos_identity_residual(map, r, opt.samples), 0.0, 1e-8);
      v1.resolution = opt.samples;
      tag(v1, id, rv);
      double worst_shift = 0.0;
      for (int k = 0; k < 16; ++k) {
        worst_shift = std::max(worst_shift, shift_mean_residual(map, kTwoPi * (k + 0.37) / 16.0, 1024));
      }
      auto vs = le_verdict("shift_mean_identity", worst_shift, 0.0, 1e-10);
      vs.resolution = 1024;
      tag(vs, id, rv);
      const double a7 = ar7_integral(map, r, opt.samples);
      const double a17 = ar17_integral(map, r, opt.samples);
      auto v2 = le_verdict("ar17_equals_ar7", std::abs(a7 - a17), 0.0, 1e-10);
      v2.resolution = opt.samples;
      tag(v2, id, rv);
      tag(check_ar8(map, r, opt.samples), id, rv);
      tag(check_ar8_bookkeeping(map, r, opt.samples), id, rv);
    }

    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(rv * 1000.0));
    double worst_step3 = INFINITY;
    double worst_reflect = 0.0;
    for (std::size_t i = 0; i < opt.random_gammas_step3; ++i) {
      const auto g = make_random_gamma(rng, opt.gamma_intervals);
      const auto s = step3_integral(g, r);
      worst_step3 = std::min(worst_step3, s.value);
      worst_reflect = std::max(worst_reflect, std::abs(s.value - step3_integral(reflect_gamma(g), r).value));
    }
    auto v3 = ge_verdict("step3_nonnegative", worst_step3, 0.0, 1e-8);
    v3.resolution = opt.gamma_intervals;
    tag(v3, "random-gamma", rv);
    auto v4 = le_verdict("step3_reflection_invariance", worst_reflect, 0.0, 1e-10);
    v4.resolution = opt.gamma_intervals;
    tag(v4, "random-gamma", rv);

    double worst_chain = INFINITY;
    for (std::size_t i = 0; i < opt.random_gammas_chain; ++i) {
      auto g = make_random_gamma(rng, opt.gamma_intervals);
      if (g[g.intervals() / 2] > kPi) g = reflect_gamma(g);
      worst_chain = std::min(worst_chain, punchline_chain(g, r).margin());
    }
    auto v5 = ge_verdict("punchline_chain", worst_chain, 0.0, 1e-10);
    v5.resolution = opt.gamma_intervals;
    tag(v5, "random-gamma", rv);

    // Identity slice: the equality-case integrand vanishes identically.
    {
      const auto g = gamma_slice(make_identity(), 0.0, opt.gamma_intervals);
      double worst = 0.0;
      for (std::size_t k = 0; k <= g.intervals(); ++k) {
        worst = std::max(worst, std::abs(kernel_K_grid(rv, k, g.intervals()) * tangent_gap(g.alpha(k), g[k])));
      }
      auto v = le_verdict("equality_integrand_identity", worst, 0.0, 0.0);
      v.resolution = opt.gamma_intervals;
      tag(v, "identity", rv);
    }
  }
  return out;
}

}  // namespace hdisk
