#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "hankel/asymptotics.hpp"
#include "hankel/special.hpp"

using namespace hankel;

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("exact polynomial recovery") {
  // y = u - 2u^2 sampled at u = 1/5, 1/7, 1/9 (n = 2, 3, 4), K = 2
  std::vector<FitSample> s;
  const mpfr_prec_t bits = bits_for_digits(60);
  for (long n : {2L, 3L, 4L}) {
    Real u = Real::from_long(1, bits) / (2 * n + 1);
    s.push_back(FitSample{n, u - u * u * 2});
  }
  FitResult f = fit_inverse_series(s, InvVariable::inv_2n_plus_1, 2);
  CHECK(f.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.coefficients[1] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(f.residual_norm < 1e-12);
}

TEST_CASE("recovery to 1e-10 for orders up to 6") {
  const mpfr_prec_t bits = bits_for_digits(80);
  const double coef[6] = {1.0, -2.0, 7.0 / 3.0, -3.2, 4.5556, -0.25};
  for (int k = 2; k <= 6; ++k) {
    std::vector<FitSample> s;
    for (long n = 10; n < 10 + k; ++n) {
      Real u = Real::from_long(1, bits) / (2 * n);
      Real y(bits);
      Real p = u;
      for (int j = 0; j < k; ++j) {
        y = y + p * Real::from_double(coef[j], bits);
        p = p * u;
      }
      s.push_back(FitSample{n, y});
    }
    FitResult f = fit_inverse_series(s, InvVariable::inv_2n, k);
    for (int j = 0; j < k; ++j) {
      CHECK(std::abs(f.coefficients[static_cast<size_t>(j)] - coef[j]) <=
            1e-10 * std::max(1.0, std::abs(coef[j])));
    }
  }
}

TEST_CASE("fit input validation") {
  std::vector<FitSample> s;
  const mpfr_prec_t bits = bits_for_digits(40);
  s.push_back(FitSample{3, Real::from_long(1, bits)});
  CHECK_THROWS_AS(fit_inverse_series(s, InvVariable::inv_2n, 2), std::invalid_argument);
  s.push_back(FitSample{3, Real::from_long(2, bits)});
  CHECK_THROWS_AS(fit_inverse_series(s, InvVariable::inv_2n, 2), std::invalid_argument);
}

TEST_CASE("zagier scaling inverts synthetic data exactly") {
  // H_n manufactured from the kind-0 form with A = 1 and the 1/24 correction
  const mpfr_prec_t bits = bits_for_digits(80);
  PrecisionContext ctx = make_context(60);
  std::vector<HankelResult> hs;
  Real e32 = exp(Real::from_double(1.5, bits));
  for (long n = 6; n <= 16; ++n) {
    Real base = Real::from_long(2 * n + 1, bits) / e32;
    Real expo = Real::from_long((2 * n + 1) * (2 * n + 1), bits) / 4;
    Real u2 = Real::from_long(1, bits) / ((2 * n + 1) * (2 * n + 1));
    Real corr = Real::from_long(1, bits) + u2 / 24;
    HankelResult h;
    h.series = "zeta";
    h.n = n;
    h.r = 0;
    h.value = BigReal(pow(base, -expo) * corr, ctx.digits);
    hs.push_back(std::move(h));
  }
  ScalingFit f = zagier_scaling(hs, 0);
  CHECK(f.extrapolated);
  CHECK(std::abs(f.estimate - 1.0) < 1e-8);
}

TEST_CASE("richardson is exact on pure even-power corrections") {
  const mpfr_prec_t bits = bits_for_digits(80);
  std::vector<HankelResult> hs;
  Real e32 = exp(Real::from_double(1.5, bits));
  for (long m = 7; m <= 15; ++m) {  // r=1 results H_m^(1), n = m+1
    long n = m + 1;
    Real base = Real::from_long(2 * n, bits) / e32;
    Real expo = Real::from_long(4 * n * n - 3, bits) / 4;
    Real v2 = Real::from_long(1, bits) / (4 * n * n);
    Real corr = Real::from_long(1, bits) + v2 * 3 - v2 * v2 * 5;
    HankelResult h;
    h.series = "zeta";
    h.n = m;
    h.r = 1;
    h.value = BigReal(pow(base, -expo) * corr * Real::from_double(0.75, bits), 60);
    hs.push_back(std::move(h));
  }
  ScalingFit f = zagier_scaling(hs, 1);
  CHECK(f.extrapolated);
  CHECK(std::abs(f.estimate - 0.75) < 1e-10);
}

TEST_CASE("fewer than three samples returns the raw value flagged") {
  const mpfr_prec_t bits = bits_for_digits(60);
  std::vector<HankelResult> hs;
  HankelResult h;
  h.series = "zeta";
  h.n = 5;
  h.r = 0;
  h.value = BigReal(Real::from_long(1, bits), 40);
  hs.push_back(h);
  ScalingFit f = zagier_scaling(hs, 0);
  CHECK(!f.extrapolated);
}

TEST_CASE("leading law residual at n=1") {
  HankelResult h1 = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 1, 0}, 20);
  auto res = leading_law_residual({h1});
  REQUIRE(res.size() == 1);
  // log zeta(2) + (log 2 - 1.5)
  CHECK(res[0].second == doctest::Approx(-0.30915).epsilon(1e-4));
}

TEST_CASE("sharper residual tends to log A0") {
  // log H_n + (n+1/2)^2 (log(2n+1) - 3/2) -> log A0; with the empirical
  // constant 0.66359780287... this is -0.4101...
  HankelResult h = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 14, 0}, 30);
  double lnH = log(abs(h.value.value)).to_double();
  double n = 14.0;
  double val = lnH + (n + 0.5) * (n + 0.5) * (std::log(2 * n + 1) - 1.5);
  CHECK(val == doctest::Approx(std::log(0.66359780287358569)).epsilon(2e-3));
}

TEST_CASE("selberg exact values and route agreement") {
  PrecisionContext ctx = make_context(40);
  CHECK(std::abs(selberg_exact_log(1, ctx).to_double()) < 1e-35);
  CHECK(selberg_exact_log(2, ctx).to_double() ==
        doctest::Approx(std::log(1.0 / 6.0)).epsilon(1e-14));
  for (long n : {1L, 2L, 3L, 7L, 20L, 50L, 100L, 200L}) {
    Real a = selberg_exact_log(n, ctx).value;
    Real b = selberg_exact_log_barnes(n, ctx).value;
    Real diff = abs(a - b);
    Real scale = abs(a) + Real::from_long(1, ctx.bits());
    CHECK(cmp(diff, scale * pow_si(Real::from_long(10, ctx.bits()), -35)) < 0);
  }
}

TEST_CASE("selberg asymptotic formula value at n=1") {
  CHECK(selberg_asymptotic_log(1) ==
        doctest::Approx(-2 * std::log(2.0) + std::log(2 * M_PI) - 1.0).epsilon(1e-15));
}

TEST_CASE("selberg exact minus asymptotic grows like (1/4) log n") {
  // The displayed O(1) remainder is actually (1/4) log n + C + o(1); the
  // corrected difference is flat to ~4e-4 between n=100 and n=200.
  PrecisionContext ctx = make_context(30);
  auto corrected = [&](long n) {
    return selberg_exact_log(n, ctx).to_double() - selberg_asymptotic_log(n) -
           0.25 * std::log(static_cast<double>(n));
  };
  double c50 = corrected(50), c100 = corrected(100), c200 = corrected(200);
  CHECK(std::abs(c100 - c50) < 5e-3);
  CHECK(std::abs(c200 - c100) < 5e-3);
  CHECK(c200 == doctest::Approx(0.4808).epsilon(1e-2));
  // raw drift, for the record: ~ (1/4) log 2
  double raw100 = selberg_exact_log(100, ctx).to_double() - selberg_asymptotic_log(100);
  double raw200 = selberg_exact_log(200, ctx).to_double() - selberg_asymptotic_log(200);
  CHECK(raw200 - raw100 == doctest::Approx(0.25 * std::log(2.0)).epsilon(2e-2));
}

TEST_CASE("selberg dominates the hankel determinant") {
  PrecisionContext ctx = make_context(30);
  double prev = 0.0;
  for (long n : {2L, 4L, 6L, 8L, 10L}) {
    HankelResult h = hankel::hankel(HankelSpec{DirichletSeries::zeta(), n, 0}, 20);
    double gap = selberg_exact_log(n, ctx).to_double() - log(abs(h.value.value)).to_double();
    CHECK(gap > 0.0);
    CHECK(gap > prev);
    prev = gap;
  }
}

TEST_CASE("barnes asymptotic expansion") {
  CHECK(barnes_asymptotic_log(1.0) ==
        doctest::Approx(-0.75 + 0.5 * std::log(2 * M_PI)).epsilon(1e-15));
  PrecisionContext ctx = make_context(40);
  double d50 = log_barnes_g(51, ctx).to_double() - barnes_asymptotic_log(50.0);
  double d100 = log_barnes_g(101, ctx).to_double() - barnes_asymptotic_log(100.0);
  CHECK(std::abs(d100 - d50) <= 0.05);  // n-independent constant
  // that constant is zeta'(-1) = -0.16542114...
  CHECK(d100 == doctest::Approx(-0.1654211437).epsilon(1e-5));
}

TEST_SUITE_END();
