#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdisk/area.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace hdisk;
using oracle::cplx;
using oracle::pi;

namespace {

const AreaMethod kFive[] = {AreaMethod::GreenSpectral, AreaMethod::GreenQuadrature, AreaMethod::KernelDirect,
                            AreaMethod::KernelFFT, AreaMethod::JacobianGrid};

std::size_t resolution_for(AreaMethod m) { return m == AreaMethod::GreenSpectral ? 256 : 1024; }

BoundaryMap smooth_random(std::uint64_t seed) { return mollify(make_random_homeomorphism(seed, 16, 0.5), 2 * pi / 64); }

}  // namespace

TEST_CASE("identity and rotation give pi r^2 under every method") {
  for (const auto& m : {make_identity(), make_rotation(0.8)}) {
    for (double r : {0.25, 0.5, 0.9}) {
      for (auto method : kFive) {
        CAPTURE(to_string(method));
        CHECK(compute_area(m, Radius(r), method, resolution_for(method)).value ==
              doctest::Approx(pi * r * r).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("shear area") {
  const ExactFamily shear{ExactFamily::Kind::Shear, 0.3};
  const auto coeffs = family_coefficients(shear, 2);
  for (double r : {0.4, 0.8}) {
    const double expect = pi * (r * r - 2 * 0.09 * r * r * r * r);
    CHECK(area_green_spectral(coeffs, Radius(r)).value == doctest::Approx(expect).epsilon(1e-7));
    CHECK(area_jacobian_grid(coeffs, Radius(r), 64, 1024).value == doctest::Approx(expect).epsilon(1e-7));
    CHECK(exact_family_area(shear, Radius(r)).value == doctest::Approx(expect).epsilon(1e-14));
    // Shoelace area of the image of |z| = r.
    const auto curve = [r](double t) {
      const cplx z = std::polar(r, t);
      return z + 0.3 * std::conj(z) * std::conj(z);
    };
    CHECK(oracle::shoelace(curve, 1 << 16) == doctest::Approx(expect).epsilon(1e-8));
  }
  CHECK(exact_family_area(shear, Radius(0.8)).value == doctest::Approx(pi * 0.566272).epsilon(1e-12));
}

TEST_CASE("shear area is strictly concave in r^2") {
  const ExactFamily shear{ExactFamily::Kind::Shear, 0.3};
  const double full = pi * (1 - 2 * 0.09);
  for (double r : {0.2, 0.5, 0.9}) {
    CHECK(exact_family_area(shear, Radius(r)).value > r * r * full);
  }
}

TEST_CASE("Mobius image radius formula, confirmed by the Jacobian grid and the shoelace oracle") {
  for (cplx a : {cplx(0.5, 0), cplx(0.2, 0.4), cplx(-0.6, 0.1)}) {
    for (double r : {0.3, 0.5, 0.8}) {
      const double rho = r * (1 - std::norm(a)) / (1 - std::norm(a) * r * r);
      const double formula = pi * rho * rho;
      const auto coeffs = family_coefficients({ExactFamily::Kind::MobiusDisk, a}, 256);
      CHECK(area_jacobian_grid(coeffs, Radius(r), 64, default_sample_count(r)).value ==
            doctest::Approx(formula).epsilon(1e-9));
      const auto curve = [a, r](double t) { return oracle::mobius(a, std::polar(r, t)); };
      CHECK(oracle::shoelace(curve, 1 << 16) == doctest::Approx(formula).epsilon(1e-8));
      CHECK(exact_family_area({ExactFamily::Kind::MobiusDisk, a}, Radius(r)).value ==
            doctest::Approx(formula).epsilon(1e-14));
    }
  }
  CHECK(exact_family_area({ExactFamily::Kind::MobiusDisk, 0.0}, Radius(0.3)).value ==
        doctest::Approx(0.09 * pi).epsilon(1e-15));
}

TEST_CASE("five methods agree on smooth random maps") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto m = smooth_random(seed);
    for (double r : {0.25, 0.5, 0.75, 0.9}) {
      std::vector<AreaEstimate> est;
      for (auto method : kFive) est.push_back(compute_area(m, Radius(r), method));
      for (std::size_t i = 0; i < est.size(); ++i) {
        for (std::size_t j = i + 1; j < est.size(); ++j) {
          const double tol = std::max({1e-5, 10 * est[i].error_indicator, 10 * est[j].error_indicator});
          CAPTURE(to_string(est[i].method));
          CAPTURE(to_string(est[j].method));
          CHECK(std::abs(est[i].value - est[j].value) <= tol);
        }
      }
    }
  }
}

TEST_CASE("kernel area matches the shoelace area of the image curve") {
  const auto m = smooth_random(4);
  for (double r : {0.3, 0.7}) {
    const auto curve = [&m, r](double t) { return oracle::harmonic(m, r, t, 2048); };
    const double ref = oracle::shoelace_extrapolated(curve, 4096);
    CHECK(area_kernel_fft(m, Radius(r), 2048).value == doctest::Approx(ref).epsilon(1e-7));
  }
}

TEST_CASE("FFT and direct kernel sums agree") {
  const auto m = make_random_homeomorphism(7, 16, 0.5);
  for (std::size_t M : {256, 1024}) {
    const double d = area_kernel_direct(m, Radius(0.6), M).value;
    const double f = area_kernel_fft(m, Radius(0.6), M).value;
    CHECK(std::abs(d - f) <= 1e-10 * std::abs(d));
  }
}

TEST_CASE("kernel area depends on lift differences only") {
  const auto base = smooth_random(6);
  const Radius r(0.7);
  const std::size_t M = 1024;
  const double a0 = area_kernel_fft(base, r, M).value;

  std::vector<Knot> lifted;
  for (const auto& k : base.knots()) lifted.push_back({k.t, k.xi + 0.77});
  CHECK(area_kernel_fft(BoundaryMap(lifted, base.omega(), base.kind()), r, M).value ==
        doctest::Approx(a0).epsilon(1e-10));

  // Shift by a grid-commensurate t0: knots are uniform on 4096 points.
  const std::size_t n = base.knots().size();
  const std::size_t shift = n / 8;
  std::vector<Knot> shifted;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = (j + shift) % n;
    const double xi = base.knots()[src].xi + (j + shift >= n ? 2 * pi : 0.0);
    shifted.push_back({base.knots()[j].t, xi});
  }
  CHECK(area_kernel_fft(BoundaryMap(shifted, base.omega(), base.kind()), r, M).value ==
        doctest::Approx(a0).epsilon(1e-10));
}

TEST_CASE("kernel closed form") {
  for (double r : {0.1, 0.5, 0.9}) {
    for (double a : {0.2, 1.0, 3.0, 5.5}) {
      CHECK(kernel_K(r, -a) == -kernel_K(r, a));
      CHECK(kernel_K(r, a) == doctest::Approx(oracle::kernel(r, a)).epsilon(1e-14));
    }
    for (std::size_t k = 0; k <= 64; ++k) CHECK(kernel_K_grid(r, k, 64) == -kernel_K_grid(r, 64 - k, 64));
    CHECK(kernel_K_grid(r, 32, 64) == 0.0);
  }
}

TEST_CASE("area grows with r") {
  const auto m = smooth_random(10);
  double prev = 0;
  for (double r : {0.1, 0.25, 0.5, 0.75, 0.9, 0.97}) {
    const double a = compute_area(m, Radius(r), AreaMethod::KernelFFT).value;
    CHECK(a >= prev - 1e-8);
    prev = a;
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(Radius(0.0), std::domain_error);
  CHECK_THROWS_AS(Radius(1.0), std::domain_error);
  CHECK_THROWS_AS(exact_family_area({ExactFamily::Kind::Shear, 0.5}, Radius(0.5)), std::domain_error);
  CHECK_THROWS_AS(exact_family_area({ExactFamily::Kind::MobiusDisk, cplx(0.8, 0.6)}, Radius(0.5)),
                  std::domain_error);
  const double jumps[] = {1.0, 4.0};
  const double values[] = {2.0, 5.0};
  CHECK_THROWS_AS(area_jacobian_grid(make_step_map(jumps, values), Radius(0.5), 16, 64), std::domain_error);
  CHECK_THROWS(compute_area(make_identity(), Radius(0.5), AreaMethod::ExactFamily));
  CHECK_THROWS_AS(area_kernel_fft(make_identity(), Radius(0.5), 7), std::invalid_argument);
}

TEST_CASE("method names round-trip") {
  for (auto m : {AreaMethod::GreenSpectral, AreaMethod::GreenQuadrature, AreaMethod::KernelDirect,
                 AreaMethod::KernelFFT, AreaMethod::JacobianGrid, AreaMethod::ExactFamily}) {
    CHECK(area_method_from_string(to_string(m)) == m);
  }
  CHECK_THROWS_AS(area_method_from_string("simpson"), std::invalid_argument);
}
