#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace hankel {

// Decimal digits -> mpfr bits, rounded up with a little slack.
inline mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3219280948873626 + 16.0);
}

// Working-precision contract shared by every high-precision operation.
// All internal arithmetic carries digits + guard_digits decimal digits;
// results exported under this context are trustworthy to `digits`.
struct PrecisionContext {
  long digits = 0;
  long guard_digits = 20;
  mpfr_prec_t bits() const { return bits_for_digits(digits + guard_digits); }
};

// Rejects digits < 30: below that the certification machinery cannot
// distinguish convergence from coincidence.
PrecisionContext make_context(long digits, long guard_digits = 20);

// RAII value type over mpfr_t. Precision is fixed at construction; binary
// operators allocate the result at the wider operand precision and round
// to nearest. Immutable sharing across threads is safe; concurrent writes
// to one instance are not.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static Real from_long(long x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_double(double x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_string(const std::string& s, mpfr_prec_t bits);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sgn() const { return mpfr_sgn(v_); }

  Real rounded_to(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t wider(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
int cmp(const Real& a, const Real& b);

Real sqrt(const Real& a);
Real log(const Real& a);
Real log10(const Real& a);
Real exp(const Real& a);
Real atan(const Real& a);
Real abs(const Real& a);
// a^e for integer e (e may be negative).
Real pow_si(const Real& a, long e);
// x^y for real y.
Real pow(const Real& a, const Real& y);

// Arbitrary-precision value annotated with how many leading decimal digits
// are certified correct. Serialization is sign + significand + base-10
// exponent with value = +-0.significand x 10^exponent; re-parsing a record
// reproduces the record exactly.
struct BigReal {
  Real value;
  long certified_digits = 0;

  BigReal() = default;
  BigReal(Real v, long cert) : value(std::move(v)), certified_digits(cert) {}

  struct Record {
    std::string significand;  // decimal digits, '-' prefix when negative
    long exponent10 = 0;
    long digits = 0;
  };

  Record to_record() const;
  static BigReal from_record(const Record& r);

  double to_double() const { return value.to_double(); }
  // log10 of |value|; -inf for zero.
  double log10_abs() const;
};

}  // namespace hankel
