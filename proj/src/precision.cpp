#include "hankel/precision.hpp"

#include <cstdio>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hankel {

PrecisionContext make_context(long digits, long guard_digits) {
  if (digits < 30) {
    throw std::invalid_argument("make_context: need at least 30 digits, got " +
                                std::to_string(digits));
  }
  if (guard_digits < 0) {
    throw std::invalid_argument("make_context: guard_digits must be >= 0");
  }
  return PrecisionContext{digits, guard_digits};
}

Real Real::from_string(const std::string& s, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0 && s.empty()) {
    throw std::invalid_argument("Real::from_string: unparsable '" + s + "'");
  }
  return r;
}

#define HK_BINOP(name, fn)                              \
  Real name(const Real& a, const Real& b) {             \
    Real r(wider(a, b));                                \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);           \
    return r;                                           \
  }

HK_BINOP(operator+, mpfr_add)
HK_BINOP(operator-, mpfr_sub)
HK_BINOP(operator*, mpfr_mul)
HK_BINOP(operator/, mpfr_div)
#undef HK_BINOP

Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }

#define HK_UNFN(name, fn)          \
  Real name(const Real& a) {       \
    Real r(a.prec());              \
    fn(r.raw(), a.raw(), MPFR_RNDN); \
    return r;                      \
  }

HK_UNFN(sqrt, mpfr_sqrt)
HK_UNFN(log, mpfr_log)
HK_UNFN(log10, mpfr_log10)
HK_UNFN(exp, mpfr_exp)
HK_UNFN(atan, mpfr_atan)
HK_UNFN(abs, mpfr_abs)
#undef HK_UNFN

Real pow_si(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& a, const Real& y) {
  Real r(wider(a, y));
  mpfr_pow(r.raw(), a.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal::Record BigReal::to_record() const {
  Record rec;
  rec.digits = certified_digits;
  if (value.is_zero() || certified_digits <= 0) {
    rec.significand = "0";
    rec.exponent10 = 0;
    return rec;
  }
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(certified_digits),
                         value.raw(), MPFR_RNDN);
  rec.significand = s;
  mpfr_free_str(s);
  rec.exponent10 = static_cast<long>(e);
  return rec;
}

BigReal BigReal::from_record(const Record& rec) {
  const bool neg = !rec.significand.empty() && rec.significand[0] == '-';
  const std::string digits = neg ? rec.significand.substr(1) : rec.significand;
  const long ndig = static_cast<long>(digits.size());
  // value = +-digits x 10^(exponent10 - ndig)
  std::string text = (neg ? "-" : "") + digits + "e" +
                     std::to_string(rec.exponent10 - ndig);
  long cert = rec.digits > 0 ? rec.digits : ndig;
  Real v = Real::from_string(text, bits_for_digits(cert) + 32);
  return BigReal(std::move(v), cert);
}

double BigReal::log10_abs() const {
  if (value.is_zero()) return -std::numeric_limits<double>::infinity();
  Real a = log10(abs(value));
  return a.to_double();
}

}  // namespace hankel
