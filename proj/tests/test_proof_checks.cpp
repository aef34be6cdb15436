#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdisk/proof_checks.hpp"
#include "oracles.hpp"

using namespace hdisk;
using oracle::pi;

namespace {

MonotoneGamma gamma_from(double (*f)(double), std::size_t n = 512) {
  std::vector<double> s;
  for (std::size_t k = 0; k <= n; ++k) s.push_back(f(2 * pi * k / n));
  return MonotoneGamma(s);
}

}  // namespace

TEST_CASE("tangent gap values and derivative") {
  for (double a : {0.0, 1.0, 4.0}) CHECK(tangent_gap(a, a) == 0.0);
  CHECK(tangent_gap(0, pi) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(tangent_gap(pi / 2, 3 * pi / 2) == doctest::Approx(2.0).epsilon(1e-15));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng);
    const double fd = (tangent_gap(a, b + h) - tangent_gap(a, b - h)) / (2 * h);
    CHECK(std::abs(fd - (std::cos(a) - std::cos(b))) < 1e-8);
  }
}

TEST_CASE("difference slices") {
  for (double t : {0.0, 1.3, 5.9}) {
    const auto g = gamma_slice(make_rotation(0.4), t, 64);
    for (std::size_t k = 0; k <= 64; ++k) CHECK(g[k] == doctest::Approx(g.alpha(k)).epsilon(1e-14));
  }
  const auto m = make_random_homeomorphism(3, 16, 0.8);
  for (double t : {0.0, 2.2, 6.0}) {
    const auto g = gamma_slice(m, t);
    CHECK(g[0] == 0.0);
    CHECK(g[g.intervals()] == 2 * pi);
    for (double v : g.samples()) CHECK((v >= 0 && v <= 2 * pi));
  }
}

TEST_CASE("closed-form kernel matches its defining convolution") {
  double worst = 0;
  for (double r : {0.3, 0.5, 0.7, 0.9}) {
    for (int k = 0; k < 8; ++k) {
      const double a = (k + 0.5) * 2 * pi / 8;
      // Oracle: plain sum of P_r(θ) P'_r(θ − α) with P' from central differences.
      double acc = 0;
      const double h = 1e-5;
      for (int j = 0; j < 2048; ++j) {
        const double th = 2 * pi * j / 2048;
        acc += oracle::poisson(r, th) * (oracle::poisson(r, th - a + h) - oracle::poisson(r, th - a - h)) / (2 * h);
      }
      CHECK(acc / 2048 == doctest::Approx(kernel_K(r, a)).epsilon(1e-6));
      worst = std::max(worst, std::abs(kernel_K(r, a) - kernel_defining_quadrature(r, a, 2048)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("sign structure of K H") {
  const double radii[] = {0.3, 0.6, 0.9};
  for (const auto& v : check_H_sign_structure(256, radii)) {
    CAPTURE(v.check_name);
    CHECK(v.passed);
  }
  CHECK_THROWS_AS(check_H_sign_structure(32, radii), std::invalid_argument);
  // A point of T1 where the product is negative.
  CHECK(oracle::kernel(0.6, 3 * pi / 4) * tangent_gap(3 * pi / 4, 7 * pi / 4) < 0);
  CHECK(oracle::kernel(0.6, pi / 2) * tangent_gap(pi / 2, 7 * pi / 4) > 0);
}

TEST_CASE("symmetrised sum identity") {
  for (double r : {0.3, 0.6, 0.7, 0.9}) {
    const auto rep = symsum_report(Radius(r), 256);
    CHECK(rep.residual < 1e-12);
    CHECK(rep.min_rhs >= -1e-12);
    CHECK(check_symsum(Radius(r), 256).passed);
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng), r = 0.7;
    const double lhs = oracle::kernel(r, a) * tangent_gap(a, b) + oracle::kernel(r, 2 * pi - a) * tangent_gap(2 * pi - a, b);
    CHECK(std::abs(lhs - 2 * oracle::kernel(r, a) * tangent_gap(a, pi)) < 1e-12);
  }
}

TEST_CASE("cosine identity and shift means") {
  CHECK(cos_identity_residual(make_identity(), Radius(0.6), 256) < 1e-16);
  CHECK(cos_identity_residual(make_random_homeomorphism(5, 16, 0.5), Radius(0.6), 1024) < 1e-8);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto m = make_random_homeomorphism(seed, 16, 0.5);
    for (double a : {0.3, 2.0, 4.4}) CHECK(shift_mean_residual(m, a, 1024) < 1e-10);
  }
}

TEST_CASE("double integral forms") {
  const auto m = make_random_homeomorphism(9, 16, 0.5);
  for (double r : {0.3, 0.6}) {
    CHECK(std::abs(ar7_integral(m, Radius(r), 256) - ar17_integral(m, Radius(r), 256)) < 1e-10);
  }
  CHECK(std::abs(ar8_integral(make_identity(), Radius(0.5), 256)) < 1e-10);
  CHECK(check_ar8(m, Radius(0.5), 512).passed);
  CHECK(ar8_integral(m, Radius(0.5), 512) >= 0);
  CHECK(check_ar8_bookkeeping(m, Radius(0.5), 512).passed);

  const double r = 0.5;
  const double value = ar8_integral(make_mobius_boundary(0.5), Radius(r), 512);
  CHECK(value / (4 * pi) == doctest::Approx(pi * r * r - 0.16 * pi).epsilon(1e-6));
}

TEST_CASE("step-3 integral") {
  const auto id = gamma_from([](double a) { return a; });
  auto s = step3_integral(id, Radius(0.6));
  CHECK(std::abs(s.value) < 1e-14);
  CHECK(s.alpha0 == doctest::Approx(pi));

  // Γ ≡ 0 makes the integrand non-periodic, so use a fine grid.
  const auto zero = gamma_from([](double) { return 0.0; }, 8192);
  s = step3_integral(zero, Radius(0.6));
  CHECK(s.alpha0 == doctest::Approx(2 * pi));
  const double ref = oracle::simpson(
      [](double a) { return oracle::kernel(0.6, a) * (std::sin(a) - a * std::cos(a)); }, 0, 2 * pi, 8192);
  CHECK(s.value == doctest::Approx(ref).epsilon(1e-6));
  CHECK(s.value >= 0);

  std::mt19937_64 rng(11);
  for (double r : {0.3, 0.6, 0.9}) {
    for (int i = 0; i < 500; ++i) {
      const auto g = make_random_gamma(rng, 512);
      const auto v = step3_integral(g, Radius(r));
      CHECK(v.value >= -1e-8);
      CHECK(std::abs(v.value - step3_integral(reflect_gamma(g), Radius(r)).value) < 1e-10);
    }
  }
}

TEST_CASE("punchline chain") {
  const auto id = gamma_from([](double a) { return a; });
  const auto c = punchline_chain(id, Radius(0.6));
  CHECK(std::abs(c.full) < 1e-14);
  CHECK(std::abs(c.window) < 1e-14);
  CHECK(std::abs(c.frozen) < 1e-14);
  CHECK(std::abs(c.folded) < 1e-14);

  const auto capped = gamma_from([](double a) { return std::min(a, pi); });
  CHECK(check_punchline_chain(capped, Radius(0.6)).passed);

  std::mt19937_64 rng(12);
  for (double r : {0.3, 0.6, 0.9}) {
    for (int i = 0; i < 200; ++i) {
      auto g = make_random_gamma(rng, 512);
      if (g[256] > pi) g = reflect_gamma(g);
      CHECK(punchline_chain(g, Radius(r)).margin() >= -1e-10);
    }
  }
  CHECK_THROWS_AS(punchline_chain(gamma_from([](double) { return 2 * pi; }), Radius(0.5)), std::invalid_argument);
}

TEST_CASE("equality-case positivity") {
  for (double r : {0.3, 0.6, 0.9}) CHECK(equality_positivity_margin(Radius(r), 256) > 1e-12);
}

TEST_CASE("random Gamma is monotone and seeded") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    const auto ga = make_random_gamma(a, 64);
    const auto gb = make_random_gamma(b, 64);
    for (std::size_t k = 0; k <= 64; ++k) {
      CHECK(ga[k] == gb[k]);
      if (k) CHECK(ga[k] >= ga[k - 1]);
    }
  }
}

TEST_CASE("proof suite batch passes") {
  ProofSuiteOptions opt;
  opt.radii = {0.6};
  opt.samples = 256;
  opt.random_gammas_step3 = 50;
  opt.random_gammas_chain = 20;
  for (const auto& v : run_proof_suite(opt)) {
    CAPTURE(v.check_name);
    CAPTURE(v.map_id);
    CHECK(v.passed);
  }
}
