#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "hankel/equilibrium.hpp"

using namespace hankel;

TEST_SUITE_BEGIN("equilibrium");

TEST_CASE("density pointwise values") {
  Density rho{DensityKind::rho}, rhoS{DensityKind::rhoS}, rhoP{DensityKind::rhoP};
  CHECK(density_eval(rho, 0.3) == 1.0);
  CHECK(density_eval(rho, -1.0) == 0.0);
  CHECK(density_eval(rho, 0.5) == 1.0);
  // continuity at 1/2 from above: rho(1/2 + eps) = 1 - O(sqrt(eps))
  CHECK(density_eval(rho, 0.5 + 1e-8) > 1.0 - 1e-3);
  CHECK(density_eval(rho, 0.5 + 1e-8) < 1.0);
  // far tail: sqrt(2)/(3 pi) x^{-3/2} within 1%
  double tail = std::sqrt(2.0) / (3.0 * M_PI) * std::pow(50.0, -1.5);
  CHECK(std::abs(density_eval(rho, 50.0) / tail - 1.0) < 0.01);

  CHECK(density_eval(rhoS, 1.0) == 0.0);
  CHECK(density_eval(rhoS, 2.0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));

  CHECK(density_eval(rhoP, 0.0) == 0.0);
  CHECK(density_eval(rhoP, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  Density mir{DensityKind::rhoP_mirrored};
  CHECK(density_eval(mir, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(density_eval(mir, 1.3) ==
        doctest::Approx(1.0 - density_eval(rhoP, 1.3)).epsilon(1e-12));
}

TEST_CASE("rho is monotone nonincreasing and within [0,1]") {
  Density rho{DensityKind::rho};
  double prev = 1.0;
  for (int i = 0; i < 10000; ++i) {
    double x = 0.5 + i * 0.002;
    double v = density_eval(rho, x);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    CHECK(v > 0.0);  // positive tail
    prev = v;
  }
}

TEST_CASE("normalization integrals are 1 to 1e-10") {
  for (DensityKind k : {DensityKind::rho, DensityKind::rhoS, DensityKind::rhoP,
                        DensityKind::rhoP_mirrored}) {
    CAPTURE(density_name(k));
    QuadResult q = normalization(Density{k});
    CHECK(std::abs(q.value - 1.0) <= 1e-10);
    CHECK(q.error <= 1e-9);
  }
}

TEST_CASE("log potential closed form at the pinned points") {
  CHECK(log_potential_rho(0.0) == doctest::Approx(std::log(2.0) - 1.0).epsilon(1e-15));
  CHECK(log_potential_rho(1.0) == 0.0);
  CHECK(log_potential_rho(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // continuity across the branch points
  CHECK(log_potential_rho(0.5 - 1e-9) ==
        doctest::Approx(log_potential_rho(0.5)).epsilon(1e-7));
  CHECK(log_potential_rho(1e-12) ==
        doctest::Approx(std::log(2.0) - 1.0).epsilon(1e-9));
  CHECK_THROWS_AS(log_potential_rho(-0.1), std::invalid_argument);
}

TEST_CASE("log potential equals the quadrature oracle") {
  Density rho{DensityKind::rho};
  for (double x : {0.0, 0.1, 0.25, 0.4, 0.5, 0.75, 1.0, 2.0, 3.7, 5.0}) {
    CAPTURE(x);
    QuadResult q = log_potential_quadrature(rho, x);
    CHECK(std::abs(q.value - log_potential_rho(x)) <= 1e-8);
  }
}

TEST_CASE("potential quadrature of rho at half is log(1/2)") {
  Density rho{DensityKind::rho};
  CHECK(log_potential_quadrature(rho, 0.5).value ==
        doctest::Approx(std::log(0.5)).epsilon(1e-9));
}

TEST_CASE("pv residuals for rho and rhoS") {
  Density rho{DensityKind::rho}, rhoS{DensityKind::rhoS};
  for (double x : {0.6, 1.0, 2.0, 5.0, 10.0}) {
    CAPTURE(x);
    CHECK(pv_residual(rho, x) <= 1e-6);
  }
  for (double x : {1.5, 2.0, 5.0, 10.0}) {
    CAPTURE(x);
    CHECK(pv_residual(rhoS, x) <= 1e-6);
  }
  CHECK_THROWS_AS(pv_residual(rho, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(pv_residual(rhoS, 0.9), std::invalid_argument);
}

TEST_CASE("rhoP principal values match the analytic transforms") {
  // derived closed forms: PV of printed = -log(2(2-x)); mirrored = log(2x)
  Density p{DensityKind::rhoP}, m{DensityKind::rhoP_mirrored};
  for (double x : {0.5, 1.0, 1.5}) {
    CAPTURE(x);
    CHECK(pv_transform(p, x) ==
          doctest::Approx(-std::log(2.0 * (2.0 - x))).epsilon(1e-6));
    CHECK(pv_transform(m, x) == doctest::Approx(std::log(2.0 * x)).epsilon(1e-6));
  }
  // hence at x=1 both orientations miss log(x)=0 by exactly log 2
  CHECK(pv_residual(p, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-6));
  CHECK(pv_residual(m, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("phi functional reproduces the closed-form energies") {
  for (long n : {1L, 10L, 100L}) {
    double nn = static_cast<double>(n);
    double v = phi_functional(Density{DensityKind::rho}, n);
    double target = -nn * nn * (std::log(2.0 * nn) - 1.5);
    CHECK(std::abs(v - target) <= 1e-6 * std::abs(target));
  }
  for (long n : {1L, 10L}) {
    double nn = static_cast<double>(n);
    double v = phi_functional(Density{DensityKind::rhoS}, n);
    double target = -2.0 * std::log(2.0) * nn * nn;
    CHECK(std::abs(v - target) <= 1e-6 * std::abs(target));
  }
}

TEST_CASE("density cdf closed forms") {
  Density rho{DensityKind::rho};
  CHECK(density_cdf(rho, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  // quadrature cross-check of the cdf at a few points
  for (double x : {0.8, 1.5, 3.0}) {
    QuadResult q = integrate([&](double y) { return density_eval(rho, y); }, 0.0, x, 1e-11);
    CHECK(density_cdf(rho, x) == doctest::Approx(0.5 + q.value - 0.5).epsilon(1e-9));
  }
  Density rhoP{DensityKind::rhoP};
  CHECK(density_cdf(rhoP, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  QuadResult q = integrate([&](double y) { return density_eval(rhoP, y); }, 0.0, 1.2, 1e-11);
  CHECK(density_cdf(rhoP, 1.2) == doctest::Approx(q.value).epsilon(1e-9));
}

TEST_SUITE_END();
