#include "hankel/matrix.hpp"

#include <omp.h>

#include <stdexcept>

namespace hankel {
namespace {

// Shared Cholesky kernel; `parallel` toggles the OpenMP clause only, the
// arithmetic per entry is identical either way.
DetResult cholesky_impl(const PrecMatrix& m, bool parallel) {
  const long n = m.n();
  const mpfr_prec_t bits = m.bits();
  PrecMatrix l(n, bits);
  DetResult res;
  res.det = Real(bits);

  Real logdet(bits);
  mpfr_t acc, t;
  mpfr_init2(acc, bits);
  mpfr_init2(t, bits);

  for (long j = 0; j < n; ++j) {
    // pivot: a_jj - sum_k l_jk^2
    mpfr_set(acc, m.at(j, j).raw(), MPFR_RNDN);
    for (long k = 0; k < j; ++k) {
      mpfr_sqr(t, l.at(j, k).raw(), MPFR_RNDN);
      mpfr_sub(acc, acc, t, MPFR_RNDN);
    }
    if (mpfr_sgn(acc) <= 0) {
      res.ok = false;
      res.failure = "cholesky: non-positive pivot at column " + std::to_string(j) +
                    " (indefinite matrix or insufficient precision)";
      mpfr_clear(acc);
      mpfr_clear(t);
      return res;
    }
    mpfr_sqrt(l.at(j, j).raw(), acc, MPFR_RNDN);

#pragma omp parallel for schedule(static) if (parallel && n - j > 8)
    for (long i = j + 1; i < n; ++i) {
      mpfr_t s, u;
      mpfr_init2(s, bits);
      mpfr_init2(u, bits);
      mpfr_set(s, m.at(i, j).raw(), MPFR_RNDN);
      for (long k = 0; k < j; ++k) {
        mpfr_mul(u, l.at(i, k).raw(), l.at(j, k).raw(), MPFR_RNDN);
        mpfr_sub(s, s, u, MPFR_RNDN);
      }
      mpfr_div(l.at(i, j).raw(), s, l.at(j, j).raw(), MPFR_RNDN);
      mpfr_clear(s);
      mpfr_clear(u);
    }
  }

  // det = prod l_jj^2
  Real det = Real::from_long(1, bits);
  for (long j = 0; j < n; ++j) {
    mpfr_mul(det.raw(), det.raw(), l.at(j, j).raw(), MPFR_RNDN);
  }
  mpfr_sqr(det.raw(), det.raw(), MPFR_RNDN);
  res.ok = true;
  res.det = det;
  mpfr_clear(acc);
  mpfr_clear(t);
  return res;
}

DetResult lu_impl(const PrecMatrix& m, bool parallel) {
  const long n = m.n();
  const mpfr_prec_t bits = m.bits();
  PrecMatrix a = m;  // factor in place on a copy
  DetResult res;
  res.det = Real(bits);
  int sign = 1;

  for (long k = 0; k < n; ++k) {
    long piv = k;
    for (long i = k + 1; i < n; ++i) {
      if (mpfr_cmpabs(a.at(i, k).raw(), a.at(piv, k).raw()) > 0) piv = i;
    }
    if (mpfr_zero_p(a.at(piv, k).raw())) {
      res.ok = true;
      res.exact_zero = true;  // singular: determinant exactly zero
      return res;
    }
    if (piv != k) {
      sign = -sign;
      for (long j = 0; j < n; ++j) {
        mpfr_swap(a.at(k, j).raw(), a.at(piv, j).raw());
      }
    }
#pragma omp parallel for schedule(static) if (parallel && n - k > 8)
    for (long i = k + 1; i < n; ++i) {
      mpfr_t f, u;
      mpfr_init2(f, bits);
      mpfr_init2(u, bits);
      mpfr_div(f, a.at(i, k).raw(), a.at(k, k).raw(), MPFR_RNDN);
      for (long j = k + 1; j < n; ++j) {
        mpfr_mul(u, f, a.at(k, j).raw(), MPFR_RNDN);
        mpfr_sub(a.at(i, j).raw(), a.at(i, j).raw(), u, MPFR_RNDN);
      }
      mpfr_set(a.at(i, k).raw(), f, MPFR_RNDN);
      mpfr_clear(f);
      mpfr_clear(u);
    }
  }

  Real det = Real::from_long(sign, bits);
  for (long k = 0; k < n; ++k) {
    mpfr_mul(det.raw(), det.raw(), a.at(k, k).raw(), MPFR_RNDN);
  }
  res.ok = true;
  res.det = det;
  return res;
}

}  // namespace

PrecMatrix PrecMatrix::transposed() const {
  PrecMatrix t(n_, bits_);
  for (long i = 0; i < n_; ++i) {
    for (long j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

DetResult det_cholesky(const PrecMatrix& m) { return cholesky_impl(m, true); }
DetResult det_cholesky_serial(const PrecMatrix& m) { return cholesky_impl(m, false); }
DetResult det_lu(const PrecMatrix& m) { return lu_impl(m, true); }
DetResult det_lu_serial(const PrecMatrix& m) { return lu_impl(m, false); }

DetResult determinant(const PrecMatrix& m, DetMethod method) {
  return method == DetMethod::cholesky ? det_cholesky(m) : det_lu(m);
}

}  // namespace hankel
