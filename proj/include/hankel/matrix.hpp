#pragma once

#include <string>
#include <vector>

#include "hankel/precision.hpp"

namespace hankel {

// Dense square matrix of mpfr values at a single working precision.
class PrecMatrix {
 public:
  PrecMatrix(long n, mpfr_prec_t bits)
      : n_(n), bits_(bits), a_(static_cast<size_t>(n * n), Real(bits)) {}

  long n() const { return n_; }
  mpfr_prec_t bits() const { return bits_; }
  Real& at(long i, long j) { return a_[static_cast<size_t>(i * n_ + j)]; }
  const Real& at(long i, long j) const { return a_[static_cast<size_t>(i * n_ + j)]; }

  PrecMatrix transposed() const;

 private:
  long n_;
  mpfr_prec_t bits_;
  std::vector<Real> a_;
};

enum class DetMethod { cholesky, lu };

struct DetResult {
  bool ok = false;
  // det and log(det); value meaningful only when ok. An exactly singular
  // input yields ok=true, det=0, exact_zero=true.
  Real det;
  bool exact_zero = false;
  std::string failure;  // set when !ok (e.g. non-positive Cholesky pivot)
};

// Cholesky route: requires symmetric positive definite input, fails cleanly
// on a non-positive pivot (indefinite matrix or insufficient precision).
// Row updates run under OpenMP; every entry is produced by the same
// instruction sequence regardless of thread count, so results are
// bit-identical to the serial reference.
DetResult det_cholesky(const PrecMatrix& m);
DetResult det_cholesky_serial(const PrecMatrix& m);

// LU with partial pivoting; works for any matrix.
DetResult det_lu(const PrecMatrix& m);
DetResult det_lu_serial(const PrecMatrix& m);

DetResult determinant(const PrecMatrix& m, DetMethod method);

}  // namespace hankel
