#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "hankel/engine.hpp"
#include "hankel/special.hpp"

using namespace hankel;

namespace {

bool close_digits(const Real& a, const Real& b, long digits) {
  Real diff = abs(a - b);
  Real scale = abs(b);
  if (cmp(scale, Real::from_long(1, b.prec())) < 0) scale = Real::from_long(1, b.prec());
  return cmp(diff, scale * pow_si(Real::from_long(10, b.prec()), -digits)) <= 0;
}

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("build_matrix lays out F(i+j+r)") {
  PrecisionContext ctx = make_context(40);
  {
    PrecMatrix m = build_matrix(HankelSpec{DirichletSeries::zeta(), 1, 0}, ctx);
    CHECK(close_digits(m.at(0, 0), zeta_int(2, ctx).value, 39));
  }
  {
    PrecMatrix m = build_matrix(HankelSpec{DirichletSeries::zeta(), 2, 1}, ctx);
    CHECK(close_digits(m.at(0, 0), zeta_int(3, ctx).value, 39));
    CHECK(close_digits(m.at(0, 1), zeta_int(4, ctx).value, 39));
    CHECK(close_digits(m.at(1, 0), zeta_int(4, ctx).value, 39));
    CHECK(close_digits(m.at(1, 1), zeta_int(5, ctx).value, 39));
  }
  {
    PrecMatrix m = build_matrix(HankelSpec{DirichletSeries::moebius_series(), 1, 0}, ctx);
    Real inv = Real::from_long(1, ctx.bits()) / zeta_int(2, ctx).value;
    CHECK(close_digits(m.at(0, 0), inv, 39));
  }
}

TEST_CASE("determinants of simple matrices") {
  const mpfr_prec_t bits = bits_for_digits(60);
  SUBCASE("identity") {
    PrecMatrix m(3, bits);
    for (long i = 0; i < 3; ++i) m.at(i, i) = Real::from_long(1, bits);
    for (DetMethod method : {DetMethod::cholesky, DetMethod::lu}) {
      DetResult d = determinant(m, method);
      REQUIRE(d.ok);
      CHECK(close_digits(d.det, Real::from_long(1, bits), 55));
    }
  }
  SUBCASE("2x2 equals ad - bc") {
    PrecMatrix m(2, bits);
    m.at(0, 0) = Real::from_double(3.25, bits);
    m.at(0, 1) = Real::from_double(-1.5, bits);
    m.at(1, 0) = Real::from_double(7.0, bits);
    m.at(1, 1) = Real::from_double(0.125, bits);
    DetResult d = det_lu(m);
    REQUIRE(d.ok);
    Real expect = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    CHECK(close_digits(d.det, expect, 55));
  }
  SUBCASE("singular matrix gives exact zero") {
    PrecMatrix m(2, bits);
    for (long i = 0; i < 2; ++i) {
      for (long j = 0; j < 2; ++j) m.at(i, j) = Real::from_long(1, bits);
    }
    DetResult d = det_lu(m);
    REQUIRE(d.ok);
    CHECK(d.exact_zero);
    CHECK(d.det.is_zero());
  }
  SUBCASE("cholesky fails cleanly on an indefinite matrix") {
    PrecMatrix m(2, bits);
    m.at(0, 0) = Real::from_long(1, bits);
    m.at(0, 1) = Real::from_long(2, bits);
    m.at(1, 0) = Real::from_long(2, bits);
    m.at(1, 1) = Real::from_long(1, bits);
    DetResult d = det_cholesky(m);
    CHECK(!d.ok);
    CHECK(d.failure.find("pivot") != std::string::npos);
    DetResult lu = det_lu(m);
    REQUIRE(lu.ok);
    CHECK(close_digits(lu.det, Real::from_long(-3, bits), 55));
  }
}

TEST_CASE("zeta hankel determinant equals the 2x2 identity") {
  PrecisionContext ctx = make_context(80);
  Real ident = zeta_int(2, ctx).value * zeta_int(4, ctx).value -
               zeta_int(3, ctx).value * zeta_int(3, ctx).value;
  HankelResult h = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 2, 0}, 55);
  CHECK(h.digits_certified >= 55);
  CHECK(h.method == "cholesky");
  CHECK(close_digits(h.value.value, ident, 55));
  CHECK(h.log10_value == doctest::Approx(-0.474424563).epsilon(1e-8));
}

TEST_CASE("hankel n=1 is zeta(2) and results are positive") {
  HankelResult h1 = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 1, 0}, 30);
  CHECK(h1.value.to_double() == doctest::Approx(1.6449340668).epsilon(1e-9));
  for (long n = 1; n <= 8; ++n) {
    for (long r : {0L, 1L}) {
      HankelResult h = hankel::hankel(HankelSpec{DirichletSeries::zeta(), n, r}, 20);
      CHECK(h.value.value.sgn() > 0);
      CHECK(h.digits_certified >= 20);
    }
  }
}

TEST_CASE("cholesky and lu agree on the zeta family") {
  // method independence to certified digits, n up to 20
  for (long n : {3L, 8L, 14L, 20L}) {
    HankelSpec spec{DirichletSeries::zeta(), n, 0};
    PrecisionContext ctx = make_context(working_digits_for(spec));
    PrecMatrix m = build_matrix(spec, ctx);
    DetResult c = det_cholesky(m);
    DetResult l = det_lu(m);
    REQUIRE(c.ok);
    REQUIRE(l.ok);
    CHECK(close_digits(c.det, l.det, 30));
  }
}

TEST_CASE("parallel determinant kernels match the serial references bitwise") {
  HankelSpec spec{DirichletSeries::zeta(), 16, 0};
  PrecisionContext ctx = make_context(400);
  PrecMatrix m = build_matrix(spec, ctx);
  DetResult cp = det_cholesky(m), cs = det_cholesky_serial(m);
  REQUIRE(cp.ok);
  REQUIRE(cs.ok);
  CHECK(mpfr_equal_p(cp.det.raw(), cs.det.raw()));
  DetResult lp = det_lu(m), ls = det_lu_serial(m);
  REQUIRE(lp.ok);
  REQUIRE(ls.ok);
  CHECK(mpfr_equal_p(lp.det.raw(), ls.det.raw()));
}

TEST_CASE("transpose leaves hankel matrices fixed") {
  PrecisionContext ctx = make_context(40);
  PrecMatrix m = build_matrix(HankelSpec{DirichletSeries::zeta(), 5, 1}, ctx);
  PrecMatrix t = m.transposed();
  for (long i = 0; i < 5; ++i) {
    for (long j = 0; j < 5; ++j) {
      CHECK(mpfr_equal_p(m.at(i, j).raw(), t.at(i, j).raw()));
    }
  }
  DetResult a = det_lu(m), b = det_lu(t);
  CHECK(mpfr_equal_p(a.det.raw(), b.det.raw()));
}

TEST_CASE("precision monotonicity: higher targets extend certified digits") {
  HankelSpec spec{DirichletSeries::zeta(), 4, 0};
  HankelResult lo = hankel::hankel(spec, 25);
  HankelResult hi = hankel::hankel(spec, 60);
  CHECK(hi.digits_certified >= lo.digits_certified);
  auto lo_rec = lo.value.to_record();
  auto hi_rec = BigReal(hi.value.value, lo.value.certified_digits).to_record();
  CHECK(lo_rec.significand == hi_rec.significand);
  CHECK(lo_rec.exponent10 == hi_rec.exponent10);
}

TEST_CASE("adaptive loop reports non-convergence with both trials") {
  // an evaluator whose digits depend on the working precision never certifies
  DirichletSeries bogus;
  bogus.name = "bogus";
  bogus.coeff = [](uint64_t) { return 1L; };
  bogus.is_multiplicative = false;
  bogus.is_nonnegative = false;
  bogus.evaluate = [](long s, const PrecisionContext& ctx) {
    Real v = Real::from_long(s, ctx.bits());
    // precision-dependent curvature, so no two working precisions agree
    Real jitter = Real::from_long((ctx.digits % 97 + 1) * s * s, ctx.bits()) / 1000;
    return BigReal(v + jitter, ctx.digits);
  };
  CHECK_THROWS_AS(hankel::hankel(HankelSpec{bogus, 2, 0}, 30), HankelConvergenceError);
}

TEST_CASE("dirichlet route: partial plus tail brackets the determinant") {
  PrecisionContext ctx = make_context(40);
  SUBCASE("n=1 zeta reduces to partial zeta sums") {
    DirichletSum ds = hankel_via_dirichlet(HankelSpec{DirichletSeries::zeta(), 1, 0}, 50, ctx);
    Real expect(ctx.bits());
    mpfr_t t;
    mpfr_init2(t, ctx.bits());
    for (uint64_t m = 1; m <= 50; ++m) {
      mpfr_ui_pow_ui(t, static_cast<unsigned long>(m), 2, MPFR_RNDN);
      mpfr_ui_div(t, 1, t, MPFR_RNDN);
      mpfr_add(expect.raw(), expect.raw(), t, MPFR_RNDN);
    }
    mpfr_clear(t);
    CHECK(close_digits(ds.partial.value, expect, 35));
    Real truetail = zeta_int(2, ctx).value - expect;
    CHECK(cmp(truetail, ds.tail.value) <= 0);
  }
  SUBCASE("zeta and moebius at (2,0), M=500") {
    for (const auto& series :
         {DirichletSeries::zeta(), DirichletSeries::moebius_series()}) {
      HankelSpec spec{series, 2, 0};
      HankelResult det = hankel::hankel(spec, 25);
      DirichletSum ds = hankel_via_dirichlet(spec, 500, ctx);
      Real diff = abs(det.value.value.rounded_to(ctx.bits()) - ds.partial.value);
      CHECK(cmp(diff, ds.tail.value) <= 0);
    }
  }
  SUBCASE("rejects non-multiplicative series") {
    DirichletSeries s = DirichletSeries::zeta();
    s.is_multiplicative = false;
    CHECK_THROWS_AS(hankel_via_dirichlet(HankelSpec{s, 2, 0}, 100, ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("bruteforce oracle behaves") {
  PrecisionContext ctx = make_context(40);
  SUBCASE("n=1 equals the partial sum") {
    BigReal b = hankel_bruteforce(HankelSpec{DirichletSeries::zeta(), 1, 0}, 30, ctx);
    Real expect(ctx.bits());
    mpfr_t t;
    mpfr_init2(t, ctx.bits());
    for (uint64_t m = 1; m <= 30; ++m) {
      mpfr_ui_pow_ui(t, static_cast<unsigned long>(m), 2, MPFR_RNDN);
      mpfr_ui_div(t, 1, t, MPFR_RNDN);
      mpfr_add(expect.raw(), expect.raw(), t, MPFR_RNDN);
    }
    mpfr_clear(t);
    CHECK(close_digits(b.value, expect, 35));
  }
  SUBCASE("n=2 approaches H_2 from below") {
    HankelResult h2 = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 2, 0}, 25);
    BigReal b = hankel_bruteforce(HankelSpec{DirichletSeries::zeta(), 2, 0}, 200, ctx);
    double dev = std::abs(b.to_double() - h2.value.to_double());
    CHECK(dev < 1e-2);  // ~2 digits at M=200
    CHECK(b.to_double() < h2.value.to_double());
  }
  SUBCASE("n=3 monotone in M, all terms positive") {
    Real v40 = hankel_bruteforce(HankelSpec{DirichletSeries::zeta(), 3, 0}, 40, ctx).value;
    Real v60 = hankel_bruteforce(HankelSpec{DirichletSeries::zeta(), 3, 0}, 60, ctx).value;
    HankelResult h3 = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 3, 0}, 25);
    CHECK(v40.sgn() > 0);
    CHECK(cmp(v40, v60) < 0);
    CHECK(v60.to_double() < h3.value.to_double());
  }
  SUBCASE("serial matches parallel bitwise; n > 4 rejected") {
    HankelSpec spec{DirichletSeries::zeta(), 3, 1};
    Real a = hankel_bruteforce(spec, 50, ctx).value;
    Real b = hankel_bruteforce_serial(spec, 50, ctx).value;
    CHECK(mpfr_equal_p(a.raw(), b.raw()));
    CHECK_THROWS_AS(hankel_bruteforce(HankelSpec{DirichletSeries::zeta(), 5, 0}, 20, ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("ratio sequences are positive and track the expansions") {
  auto rows = ratio_sequences(8, 25);
  REQUIRE(rows.size() == 7);  // n = 2..8
  for (const auto& row : rows) {
    CHECK(row.r0.value.sgn() > 0);
    CHECK(row.r1.value.sgn() > 0);
  }
  // leading behavior at n=8: R0 ~ 1/17, R1 ~ 1/16 with their second terms
  const auto& r8 = rows.back();
  double u = 1.0 / 17.0, v = 1.0 / 16.0;
  CHECK(r8.r0.to_double() ==
        doctest::Approx(u - 2 * u * u + 7.0 / 3.0 * u * u * u).epsilon(2e-3));
  CHECK(r8.r1.to_double() ==
        doctest::Approx(v + v * v - 2.0 / 3.0 * v * v * v).epsilon(2e-3));
}

TEST_CASE("mzv expansion structure") {
  auto t2 = mzv_expansion(2);
  REQUIRE(t2.size() == 3);
  CHECK(t2[0].exponents == std::vector<int>{2, 4});
  CHECK(t2[0].coeff == 1);
  CHECK(t2[1].exponents == std::vector<int>{3, 3});
  CHECK(t2[1].coeff == -2);
  CHECK(t2[2].exponents == std::vector<int>{4, 2});
  CHECK(t2[2].coeff == 1);

  for (int n : {2, 3, 4}) {
    long csum = 0;
    for (const auto& t : mzv_expansion(n)) {
      csum += t.coeff;
      long esum = 0;
      for (int e : t.exponents) {
        esum += e;
        CHECK(e >= 2);
      }
      CHECK(esum == n * (n + 1));
    }
    CHECK(csum == 0);
  }
  CHECK_THROWS_AS(mzv_expansion(1), std::invalid_argument);
  CHECK_THROWS_AS(mzv_expansion(5), std::invalid_argument);
}

TEST_CASE("mzv evaluation") {
  PrecisionContext ctx = make_context(40);
  SUBCASE("depth 1 is a zeta value") {
    MZVValue v = mzv_eval({6}, 4000, ctx);
    Real pi = const_pi(ctx);
    Real target = pow_si(pi, 6) / 945;
    CHECK(std::abs((v.value.value - target).to_double()) < 1e-12);
  }
  SUBCASE("stuffle: zeta_<(3,3) = (zeta(3)^2 - zeta(6))/2") {
    MZVValue v = mzv_eval({3, 3}, 200000, ctx);
    Real z3 = zeta_int(3, ctx).value, z6 = zeta_int(6, ctx).value;
    Real target = (z3 * z3 - z6) / 2;
    CHECK(std::abs((v.value.value - target).to_double()) < 1e-9);
    CHECK(v.value.to_double() == doctest::Approx(0.21380).epsilon(1e-4));
  }
  SUBCASE("n=2 combination reproduces the determinant") {
    Real sum(ctx.bits());
    for (const auto& t : mzv_expansion(2)) {
      sum = sum + mzv_eval(t.exponents, 100000, ctx).value.value * t.coeff;
    }
    HankelResult h2 = hankel::hankel(HankelSpec{DirichletSeries::zeta(), 2, 0}, 25);
    CHECK(std::abs((sum - h2.value.value.rounded_to(ctx.bits())).to_double()) < 2e-5);
  }
  SUBCASE("divergent compositions rejected") {
    CHECK_THROWS_AS(mzv_eval({2, 1}, 100, ctx), std::invalid_argument);
    CHECK_THROWS_AS(mzv_eval({0, 3}, 100, ctx), std::invalid_argument);
    CHECK_THROWS_AS(mzv_eval({}, 100, ctx), std::invalid_argument);
  }
}

TEST_SUITE_END();
