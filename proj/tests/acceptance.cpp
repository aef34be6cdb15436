// One line per acceptance criterion; exit status 0 iff every line passes.

#include "hdisk/area.hpp"
#include "hdisk/io.hpp"
#include "hdisk/proof_checks.hpp"
#include "hdisk/sweep.hpp"
#include "hdisk/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace hdisk;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Worst record, all-pass flag and count for a verdict batch.
struct BatchStats {
  bool all_pass = true;
  std::size_t count = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
};

BatchStats stats(const std::vector<VerdictRecord>& records) {
  BatchStats s;
  for (const auto& v : records) {
    ++s.count;
    if (v.inconclusive) ++s.inconclusive;
    if (!v.passed) {
      ++s.failed;
      s.all_pass = false;
      std::fprintf(stderr, "  not passed: %s %s r=%g lhs=%g rhs=%g\n", v.check_name.c_str(), v.map_id.c_str(), v.r,
                   v.lhs, v.rhs);
    }
  }
  return s;
}

Outcome exact_family_areas() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& m : {make_identity(), make_rotation(1.0)}) {
    for (double r : {0.25, 0.5, 0.9}) {
      for (auto method : {AreaMethod::GreenSpectral, AreaMethod::GreenQuadrature, AreaMethod::KernelDirect,
                          AreaMethod::KernelFFT, AreaMethod::JacobianGrid}) {
        const std::size_t res = method == AreaMethod::GreenSpectral ? 256 : 1024;
        worst = std::max(worst, std::abs(compute_area(m, Radius(r), method, res).value - pi * r * r));
      }
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8 && secs < 5.0, "max |err| " + fmt(worst) + " (tol 1e-8), " + fmt(secs) + " s (limit 5 s)"};
}

Outcome shear_reproduction() {
  const double c = 0.3;
  const auto coeffs = family_coefficients({ExactFamily::Kind::Shear, c}, 2);
  double worst = 0;
  for (double r : {0.4, 0.8}) {
    const double expect = pi * (r * r - 2 * c * c * std::pow(r, 4));
    worst = std::max(worst, std::abs(area_jacobian_grid(coeffs, Radius(r), 64, 1024).value - expect));
    worst = std::max(worst, std::abs(area_green_spectral(coeffs, Radius(r)).value - expect));
  }
  const double half = area_green_spectral(coeffs, Radius(0.5)).value;
  const double full = pi * (1 - 2 * c * c);
  const bool concave = half > 0.25 * full;
  return {worst <= 1e-7 && concave,
          "max |err| " + fmt(worst) + " (tol 1e-7); |f(D_0.5)| - 0.25|f(D)| = " + fmt(half - 0.25 * full)};
}

Outcome theorem1_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyConfig cfg;  // 100 seeds x 4 radii x 3 mollification widths
  const auto s = stats(run_suite("theorem1", cfg));
  const double secs = seconds_since(t0);
  return {s.all_pass && s.count == 1200 && secs < 120.0,
          std::to_string(s.count) + " checks, " + std::to_string(s.failed) + " violations, " + fmt(secs) +
              " s (limit 120 s)"};
}

Outcome equality_case() {
  const auto s = stats(run_suite("equality", VerifyConfig{}));
  return {s.all_pass, std::to_string(s.count) + " checks, " + std::to_string(s.failed) + " failed"};
}

Outcome kernel_identity() {
  double worst = 0;
  for (double r : {0.3, 0.5, 0.7, 0.9}) {
    for (int k = 0; k < 8; ++k) {
      const double a = (k + 0.5) * 2 * pi / 8;
      worst = std::max(worst, std::abs(kernel_K(r, a) - kernel_defining_quadrature(r, a, 2048)));
    }
  }
  return {worst < 1e-9, "32 points, max residual " + fmt(worst) + " (tol 1e-9)"};
}

Outcome semigroup() {
  double worst = 0;
  for (double r : {0.3, 0.6, 0.9}) {
    for (double s : {0.3, 0.6, 0.9}) {
      for (int k = 0; k < 64; ++k) worst = std::max(worst, semigroup_residual(r, s, 2 * pi * k / 64, 2048));
    }
  }
  return {worst < 1e-8, "max residual " + fmt(worst) + " (tol 1e-8)"};
}

Outcome proof_suite() {
  const auto records = run_proof_suite(ProofSuiteOptions{});
  double cos_worst = 0, symsum_worst = 0, step3_min = INFINITY, chain_min = INFINITY, reflect_worst = 0;
  for (const auto& v : records) {
    if (v.check_name == "cos_identity") cos_worst = std::max(cos_worst, v.lhs);
    if (v.check_name == "symsum_identity") symsum_worst = std::max(symsum_worst, v.lhs);
    if (v.check_name == "step3_nonnegative") step3_min = std::min(step3_min, v.lhs);
    if (v.check_name == "punchline_chain") chain_min = std::min(chain_min, v.lhs);
    if (v.check_name == "step3_reflection_invariance") reflect_worst = std::max(reflect_worst, v.lhs);
  }
  const auto s = stats(records);
  const bool ok = s.all_pass && cos_worst < 1e-8 && symsum_worst < 1e-12 && step3_min >= -1e-8 &&
                  chain_min >= -1e-10 && reflect_worst <= 1e-10;
  return {ok, std::to_string(s.count) + " records; cos " + fmt(cos_worst) + ", symsum " + fmt(symsum_worst) +
                  ", step3 min " + fmt(step3_min) + ", chain margin " + fmt(chain_min) + ", reflection " +
                  fmt(reflect_worst)};
}

Outcome corollary() {
  const auto records = run_suite("corollary", VerifyConfig{});
  double min_slack = INFINITY;
  for (const auto& v : records) min_slack = std::min(min_slack, v.slack);
  const auto s = stats(records);
  return {s.all_pass && s.inconclusive == 0,
          std::to_string(s.count) + " maps, min I(1) - 2pi = " + fmt(min_slack) + " (tol -1e-3)"};
}

Outcome schwarz() {
  const auto records = run_suite("schwarz", VerifyConfig{});
  double gap = INFINITY;
  for (const auto& v : records) {
    if (v.check_name == "schwarz_sharpness") gap = v.error_indicator;
  }
  const auto s = stats(records);
  return {s.all_pass && gap < 0.05,
          std::to_string(s.count) + " records; two-jump gap to bound at r = 0.9: " + fmt(gap) + " (limit 0.05)"};
}

Outcome performance() {
  const auto m = mollify(make_random_homeomorphism(7, 16, 0.5), 2 * pi / 64);
  double worst = 0, t_direct = INFINITY, t_fft = INFINITY;
  for (std::size_t M : {256, 1024, 4096}) {
    for (int rep = 0; rep < 3; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      const double d = area_kernel_direct(m, Radius(0.6), M).value;
      const double td = seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      const double f = area_kernel_fft(m, Radius(0.6), M).value;
      const double tf = seconds_since(t0);
      worst = std::max(worst, std::abs(d - f) / std::abs(d));
      if (M == 4096) {
        t_direct = std::min(t_direct, td);
        t_fft = std::min(t_fft, tf);
      }
    }
  }
  return {worst <= 1e-10 && t_fft < t_direct, "max rel diff " + fmt(worst) + " (tol 1e-10); M=4096 direct " +
                                                  fmt(t_direct * 1e3) + " ms, fft " + fmt(t_fft * 1e3) + " ms"};
}

std::string serialize(std::vector<VerdictRecord> records) {
  std::string out;
  for (auto& v : records) {
    v.wall_time_ms = 0;
    out += verdict_csv_row(v);
    out += '\n';
  }
  return out;
}

Outcome determinism() {
  VerifyConfig cfg;
  cfg.families = {"random:0..19:0.5"};
  ProofSuiteOptions opt;
  opt.random_gammas_step3 = 100;
  opt.random_gammas_chain = 50;
  auto run = [&] {
    return serialize(run_suite("theorem1", cfg)) + serialize(run_suite("equality", cfg)) +
           serialize(run_proof_suite(opt));
  };
  const auto a = run();
  cfg.threads = 1;
  const auto b = run();
  return {a == b && !a.empty(), std::to_string(a.size()) + " bytes compared across two runs"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exact-family areas", exact_family_areas},
      {"shear formula and concavity", shear_reproduction},
      {"area contraction sweep", theorem1_sweep},
      {"equality case", equality_case},
      {"kernel identity", kernel_identity},
      {"Poisson semigroup", semigroup},
      {"proof suite", proof_suite},
      {"boundary Jacobian integral", corollary},
      {"harmonic Schwarz bound", schwarz},
      {"FFT vs direct kernel sum", performance},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %-30s %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
