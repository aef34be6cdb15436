#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdisk/verify.hpp"
#include "oracles.hpp"

using namespace hdisk;
using oracle::cplx;
using oracle::pi;

namespace {

BoundaryMap smooth_random(std::uint64_t seed) { return mollify(make_random_homeomorphism(seed, 16, 0.5), 2 * pi / 64); }

BoundaryMap two_jump() {
  const double jumps[] = {pi / 2, 3 * pi / 2};
  const double values[] = {pi, 2 * pi};
  return make_step_map(jumps, values);
}

}  // namespace

TEST_CASE("verdict sign conventions") {
  auto le = le_verdict("x", 1.0, 2.0, 0.0);
  CHECK(le.slack == 1.0);
  CHECK(le.passed);
  CHECK_FALSE(le_verdict("x", 2.0, 1.0, 0.5).passed);
  CHECK(le_verdict("x", 2.0, 1.0, 1.0).passed);
  auto ge = ge_verdict("x", 1.0, 2.0, 0.0);
  CHECK(ge.slack == -1.0);
  CHECK_FALSE(ge.passed);
  CHECK_FALSE(le_verdict("x", std::nan(""), 1.0, 1.0).passed);
}

TEST_CASE("area contraction on random maps") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (double r : {0.25, 0.9}) {
      const auto v = check_area_contraction(smooth_random(seed), Radius(r), AreaMethod::KernelFFT, 1e-6 * pi * r * r);
      CHECK(v.passed);
      CHECK(v.lhs < pi * r * r);
      CHECK(v.rhs == doctest::Approx(pi * r * r));
    }
  }
  CHECK_THROWS_AS(check_area_contraction(two_jump(), Radius(0.5), AreaMethod::KernelFFT, 1e-6), HypothesisError);
}

TEST_CASE("equality case separates rotations from everything else") {
  for (double r : {0.25, 0.5, 0.9}) {
    const auto rot = check_equality_case(make_rotation(2.0), Radius(r));
    CHECK(rot.passed);
    CHECK(std::abs(equality_slack(make_rotation(2.0), Radius(r))) < 1e-8);
    for (const auto& m : {smooth_random(3), make_mobius_boundary(0.3)}) {
      const auto v = check_equality_case(m, Radius(r));
      CHECK(v.passed);
      CHECK(v.lhs > 10 * v.error_indicator);
    }
  }
  // The Mobius slack is known in closed form.
  const double r = 0.5;
  const double rho = r * (1 - 0.09) / (1 - 0.09 * r * r);
  CHECK(equality_slack(make_mobius_boundary(0.3), Radius(r)) == doctest::Approx(pi * (r * r - rho * rho)).epsilon(1e-6));
}

TEST_CASE("Schwarz bound") {
  const PolarGrid grid;
  CHECK(schwarz_bound_check(make_identity(), 0.0, grid).passed);
  CHECK(schwarz_bound_check(make_symmetric_random_homeomorphism(1, 32, 0.5, 2), 0.0, grid).passed);
  CHECK_THROWS_AS(schwarz_bound_check(make_mobius_boundary(0.5), 0.0, grid), PreconditionError);

  const auto coeffs = schwarz_coefficients(smooth_random(2));
  const auto a = locate_zero(coeffs);
  CHECK(std::abs(eval_harmonic(coeffs, a)) < 1e-12);
  CHECK(schwarz_bound_check(coeffs, a, grid).passed);

  // The two-jump step map sits on the bound along the positive real axis.
  const auto step = schwarz_coefficients(two_jump());
  CHECK(schwarz_bound_check(step, 0.0, grid).passed);
  const double bound = 4 / pi * std::atan(0.9);
  const double value = std::abs(eval_harmonic(step, 0.9, 0.0));
  CHECK(value <= bound + 1e-8);
  CHECK(value > bound - 0.05);
}

TEST_CASE("locate_zero recovers the Mobius parameter") {
  const cplx a(0.3, -0.2);
  const auto coeffs = fourier_from_boundary(make_mobius_boundary(a), 256);
  CHECK(std::abs(locate_zero(coeffs) - a) < 1e-5);
}

TEST_CASE("boundary Jacobian integral") {
  const double eps[] = {0.04, 0.02, 0.01};
  for (const auto& m : {make_identity(), make_rotation(1.0)}) {
    const auto v = boundary_jacobian_integral(m, eps);
    CHECK(v.passed);
    CHECK(v.lhs == doctest::Approx(2 * pi).epsilon(1e-10));
  }
  for (double a : {0.2, 0.4}) {
    // ∫|h'|² over the unit circle for z ↦ (z − a)/(1 − az).
    const double exact = 2 * pi * (1 + a * a) / (1 - a * a);
    const auto v = boundary_jacobian_integral(make_mobius_boundary(a), eps);
    CHECK(v.passed);
    CHECK_FALSE(v.inconclusive);
    CHECK(std::abs(v.lhs - exact) <= 10 * v.error_indicator);
    CHECK(v.lhs >= 2 * pi - 10 * v.error_indicator);
  }
  CHECK_THROWS_AS(boundary_jacobian_integral(two_jump(), eps), HypothesisError);
}

TEST_CASE("convexity inequality: holomorphic holds, harmonic shear fails") {
  const auto mob = family_coefficients({ExactFamily::Kind::MobiusDisk, cplx(0.3, 0.1)}, 128);
  std::vector<cplx> series;
  for (int n = 1; n <= 128; ++n) series.push_back(mob[n]);
  CHECK(holomorphic_series_injective(series));
  const auto shear = family_coefficients({ExactFamily::Kind::Shear, 0.3}, 2);
  for (double r : {0.25, 0.5, 0.75}) {
    CHECK(holomorphic_convexity_check(series, Radius(r)).passed);
    CHECK_FALSE(harmonic_convexity_check(shear, Radius(r)).passed);
    CHECK(convexity_counterexample(shear, Radius(r)).passed);
  }
  CHECK_FALSE(convexity_counterexample(mob, Radius(0.5)).passed);
}

TEST_CASE("winding-number injectivity test") {
  CHECK(holomorphic_series_injective(std::vector<cplx>{1.0, 0.4}));
  CHECK_FALSE(holomorphic_series_injective(std::vector<cplx>{1.0, 0.7}));
}
