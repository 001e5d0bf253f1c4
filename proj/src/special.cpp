#include "hankel/special.hpp"

#include <gmpxx.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hankel {
namespace {

// ---------------------------------------------------------------------------
// Bernoulli numbers through tangent numbers (Knuth-Buckholtz recurrence).
// T[k] is the k-th tangent number; B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k-1)).
// ---------------------------------------------------------------------------
class TangentTable {
 public:
  static TangentTable& instance() {
    static TangentTable t;
    return t;
  }

  // Tangent numbers T_1..T_k, growing the table as needed.
  mpz_class get(long k) {
    std::lock_guard<std::mutex> lock(mu_);
    if (k > static_cast<long>(t_.size())) grow(k);
    return t_[static_cast<size_t>(k - 1)];
  }

  // B_{2k}/(2k)! as an exact rational.
  mpq_class em_coefficient(long k) {
    mpz_class tk = get(k);
    mpz_class four_k = 1;
    mpz_mul_2exp(four_k.get_mpz_t(), four_k.get_mpz_t(), 2 * k);  // 4^k
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
    mpq_class num(2 * k * tk);
    mpq_class den(four_k * (four_k - 1) * fact);
    mpq_class c = num / den;
    if (k % 2 == 0) c = -c;
    return c;
  }

  mpq_class bernoulli(long k) {  // B_{2k}
    mpz_class tk = get(k);
    mpz_class four_k = 1;
    mpz_mul_2exp(four_k.get_mpz_t(), four_k.get_mpz_t(), 2 * k);
    mpq_class b(2 * k * tk, four_k * (four_k - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    return b;
  }

 private:
  void grow(long k) {
    size_t n = static_cast<size_t>(k);
    std::vector<mpz_class> t(n);
    t[0] = 1;
    for (size_t j = 1; j < n; ++j) t[j] = mpz_class(j) * t[j - 1];
    for (size_t kk = 2; kk <= n; ++kk) {
      for (size_t j = kk; j <= n; ++j) {
        t[j - 1] = mpz_class(j - kk) * t[j - 2] + mpz_class(j - kk + 2) * t[j - 1];
      }
    }
    t_ = std::move(t);
  }

  std::mutex mu_;
  std::vector<mpz_class> t_;
};

// ---------------------------------------------------------------------------
// Euler-Maclaurin parameter selection. Remainder after summing m <= N-1 and
// applying K correction terms is bounded by
//   2 |B_{2K+2}|/(2K+2)! * prod_{j=0}^{2K}(s+j) * N^{-s-2K-1}
// and |B_{2m}|/(2m)! = 2 zeta(2m)/(2pi)^{2m} <= 4 (2pi)^{-2m}.
// ---------------------------------------------------------------------------
struct EmPlan {
  long n_cut = 2;
  long k_corr = 1;
};

double em_log10_bound(long s, long k, double log10_n) {
  // log10 of the remainder bound with K=k corrections.
  const double lg2pi = std::log10(2.0 * M_PI);
  double lg = std::log10(8.0) - (2.0 * k + 2.0) * lg2pi;
  lg += (std::lgamma(static_cast<double>(s) + 2 * k + 1) -
         std::lgamma(static_cast<double>(s))) /
        std::log(10.0);
  lg -= (static_cast<double>(s) + 2 * k + 1) * log10_n;
  return lg;
}

EmPlan em_plan(long s, long target_digits) {
  EmPlan best;
  double best_cost = 1e300;
  for (long k = 0; k <= 4000; k = (k < 32 ? k + 1 : k + std::max<long>(1, k / 8))) {
    // Smallest N with bound <= 10^-target.
    double lg_n = (em_log10_bound(s, k, 0.0) + target_digits) /
                  (static_cast<double>(s) + 2 * k + 1);
    lg_n = std::max(lg_n, std::log10(2.0));
    if (lg_n > 8.5) continue;  // N beyond 3e8 is never the optimum here
    double n = std::pow(10.0, lg_n);
    double cost = n + 6.0 * static_cast<double>(k);
    if (cost < best_cost) {
      best_cost = cost;
      best.n_cut = static_cast<long>(n) + 2;
      best.k_corr = k;
    }
  }
  if (best_cost >= 1e300) {
    throw std::runtime_error("euler-maclaurin: no feasible cutoff for s=" +
                             std::to_string(s));
  }
  return best;
}

// Direct sum sum_{m=1}^{N-1} m^{-s} at `bits`, split into fixed-size chunks
// whose partial sums are reduced in index order, so the result does not
// depend on the thread count.
Real direct_power_sum(long s, long n_cut, mpfr_prec_t bits) {
  const long chunk = 2048;
  const long nterms = n_cut - 1;
  const long nchunks = std::max<long>(1, (nterms + chunk - 1) / chunk);
  std::vector<Real> partial(static_cast<size_t>(nchunks), Real(bits));
  bool nested = omp_in_parallel();
#pragma omp parallel for schedule(dynamic) if (!nested && nterms > 4096)
  for (long c = 0; c < nchunks; ++c) {
    mpfr_t t;
    mpfr_init2(t, bits);
    Real acc(bits);
    const long lo = 1 + c * chunk;
    const long hi = std::min(nterms, (c + 1) * chunk);
    for (long m = lo; m <= hi; ++m) {
      mpfr_ui_pow_ui(t, static_cast<unsigned long>(m),
                     static_cast<unsigned long>(s), MPFR_RNDN);
      mpfr_ui_div(t, 1, t, MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t, MPFR_RNDN);
    }
    partial[static_cast<size_t>(c)] = std::move(acc);
    mpfr_clear(t);
  }
  Real sum(bits);
  for (const Real& p : partial) mpfr_add(sum.raw(), sum.raw(), p.raw(), MPFR_RNDN);
  return sum;
}

// zeta(s) by Euler-Maclaurin, truncation below 10^-target_digits.
Real zeta_em(long s, long target_digits) {
  const mpfr_prec_t bits = bits_for_digits(target_digits + 10);
  const EmPlan plan = em_plan(s, target_digits + 5);
  const long n = plan.n_cut;

  Real sum = direct_power_sum(s, n, bits);

  mpfr_t npow, t, poch, w;
  mpfr_init2(npow, bits);
  mpfr_init2(t, bits);
  mpfr_init2(poch, bits);
  mpfr_init2(w, bits);

  // N^{1-s}/(s-1)
  mpfr_ui_pow_ui(npow, static_cast<unsigned long>(n),
                 static_cast<unsigned long>(s - 1), MPFR_RNDN);
  mpfr_mul_si(t, npow, s - 1, MPFR_RNDN);
  mpfr_ui_div(t, 1, t, MPFR_RNDN);
  mpfr_add(sum.raw(), sum.raw(), t, MPFR_RNDN);

  // N^{-s}/2
  mpfr_mul_ui(npow, npow, static_cast<unsigned long>(n), MPFR_RNDN);  // N^s
  mpfr_ui_div(t, 1, npow, MPFR_RNDN);                                 // N^-s
  mpfr_div_2ui(w, t, 1, MPFR_RNDN);
  mpfr_add(sum.raw(), sum.raw(), w, MPFR_RNDN);

  // correction terms: coef_k * (s)_(2k-1) * N^{-s-2k+1}
  TangentTable& tab = TangentTable::instance();
  mpfr_set_si(poch, s, MPFR_RNDN);                // (s)_1
  mpfr_mul_ui(t, t, static_cast<unsigned long>(n), MPFR_RNDN);  // N^{-s+1}
  mpfr_t nsq;
  mpfr_init2(nsq, bits);
  mpfr_set_ui(nsq, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_sqr(nsq, nsq, MPFR_RNDN);
  mpfr_ui_div(nsq, 1, nsq, MPFR_RNDN);  // N^-2
  for (long k = 1; k <= plan.k_corr; ++k) {
    if (k > 1) {
      mpfr_mul_si(poch, poch, s + 2 * k - 3, MPFR_RNDN);
      mpfr_mul_si(poch, poch, s + 2 * k - 2, MPFR_RNDN);
      mpfr_mul(t, t, nsq, MPFR_RNDN);
    } else {
      mpfr_mul(t, t, nsq, MPFR_RNDN);  // N^{-s-1}
    }
    mpq_class coef = tab.em_coefficient(k);
    mpfr_set_q(w, coef.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(w, w, poch, MPFR_RNDN);
    mpfr_mul(w, w, t, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), w, MPFR_RNDN);
  }

  mpfr_clear(npow);
  mpfr_clear(t);
  mpfr_clear(poch);
  mpfr_clear(w);
  mpfr_clear(nsq);
  return sum;
}

// ---------------------------------------------------------------------------
// Process-wide memo store at canonical digit grades.
// ---------------------------------------------------------------------------
constexpr long kGradeQuantum = 60;

long grade_for(long digits) {
  return ((digits + kGradeQuantum - 1) / kGradeQuantum) * kGradeQuantum;
}

struct StoredZeta {
  long grade = 0;
  Real value;
};

class ZetaStore {
 public:
  static ZetaStore& instance() {
    static ZetaStore z;
    return z;
  }

  Real get(long s, long need_digits) {
    const long grade = grade_for(need_digits);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(s);
      if (it != map_.end() && it->second.grade >= grade) return it->second.value;
    }
    Real v = zeta_em(s, grade);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(s);
    if (it == map_.end() || it->second.grade < grade) {
      map_[s] = StoredZeta{grade, v};
      return v;
    }
    return it->second.value;
  }

  void seed(const ZetaRecord& rec) {
    BigReal v = BigReal::from_record({rec.significand, rec.exponent10, rec.digits});
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(rec.s);
    if (it == map_.end() || it->second.grade < rec.digits) {
      map_[rec.s] = StoredZeta{rec.digits, v.value};
    }
  }

  std::vector<ZetaRecord> records() {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<ZetaRecord> out;
    out.reserve(map_.size());
    for (const auto& [s, st] : map_) {
      BigReal b(st.value, st.grade);
      auto rec = b.to_record();
      out.push_back(ZetaRecord{s, st.grade, rec.significand, rec.exponent10});
    }
    return out;
  }

  bool validate(const ZetaRecord& rec) {
    Real fresh = zeta_em(rec.s, rec.digits);
    BigReal b(fresh, rec.digits);
    auto r = b.to_record();
    if (r.significand == rec.significand && r.exponent10 == rec.exponent10) {
      return true;
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(rec.s);
    if (it != map_.end() && it->second.grade == rec.digits) map_.erase(it);
    return false;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
  }

 private:
  std::mutex mu_;
  std::map<long, StoredZeta> map_;
};

}  // namespace

BigReal zeta_int(long s, const PrecisionContext& ctx) {
  if (s <= 1) {
    throw std::domain_error("zeta_int: s must be >= 2 (pole/divergence at s=" +
                            std::to_string(s) + ")");
  }
  Real stored = ZetaStore::instance().get(s, ctx.digits + ctx.guard_digits);
  return BigReal(stored.rounded_to(ctx.bits()), ctx.digits);
}

BigReal zeta_int_eta(long s, const PrecisionContext& ctx) {
  if (s <= 1) throw std::domain_error("zeta_int_eta: s must be >= 2");
  const long target = ctx.digits + ctx.guard_digits + 5;
  const mpfr_prec_t bits = bits_for_digits(target + 10);
  // Borwein's algorithm 2: n terms give error ~ (3+sqrt(8))^-n.
  const long n = static_cast<long>(target * std::log(10.0) / std::log(3.0 + std::sqrt(8.0))) + 3;

  // d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!), exact rationals.
  std::vector<mpq_class> d(static_cast<size_t>(n) + 1);
  mpq_class term(1);  // n * c_0 = 1
  mpq_class acc(1);
  d[0] = acc;
  for (long i = 1; i <= n; ++i) {
    term *= mpq_class(4 * (n + i - 1) * (n - i + 1), 2 * i * (2 * i - 1));
    acc += term;
    d[static_cast<size_t>(i)] = acc;
  }

  Real sum(bits);
  mpfr_t t, dk;
  mpfr_init2(t, bits);
  mpfr_init2(dk, bits);
  for (long k = 0; k < n; ++k) {
    mpq_class diff = d[static_cast<size_t>(k)] - d[static_cast<size_t>(n)];
    mpfr_set_q(dk, diff.get_mpq_t(), MPFR_RNDN);
    mpfr_ui_pow_ui(t, static_cast<unsigned long>(k + 1),
                   static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_div(t, dk, t, MPFR_RNDN);
    if (k % 2 == 1) mpfr_neg(t, t, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), t, MPFR_RNDN);
  }
  // zeta = -sum / (d_n (1 - 2^{1-s}))
  mpfr_set_q(dk, d[static_cast<size_t>(n)].get_mpq_t(), MPFR_RNDN);
  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_div_2ui(t, t, static_cast<unsigned long>(s - 1), MPFR_RNDN);
  mpfr_ui_sub(t, 1, t, MPFR_RNDN);
  mpfr_mul(t, t, dk, MPFR_RNDN);
  mpfr_div(sum.raw(), sum.raw(), t, MPFR_RNDN);
  mpfr_neg(sum.raw(), sum.raw(), MPFR_RNDN);
  mpfr_clear(t);
  mpfr_clear(dk);
  return BigReal(sum.rounded_to(ctx.bits()), ctx.digits);
}

BigReal log_gamma(const Real& x, const PrecisionContext& ctx) {
  if (mpfr_sgn(x.raw()) <= 0) {
    throw std::domain_error("log_gamma: requires x > 0");
  }
  mpfr_prec_t bits = std::max(ctx.bits(), x.prec());
  Real xs = x.rounded_to(bits);
  Real r(bits);
  mpfr_lngamma(r.raw(), xs.raw(), MPFR_RNDN);
  return BigReal(r.rounded_to(ctx.bits()), ctx.digits);
}

BigReal log_gamma(double x, const PrecisionContext& ctx) {
  return log_gamma(Real::from_double(x, ctx.bits()), ctx);
}

BigReal log_barnes_g(long n, const PrecisionContext& ctx) {
  if (n <= 0) throw std::domain_error("log_barnes_g: requires n >= 1");
  const mpfr_prec_t bits = bits_for_digits(ctx.digits + ctx.guard_digits + 10);
  Real acc(bits);
  mpfr_t x, t;
  mpfr_init2(x, bits);
  mpfr_init2(t, bits);
  for (long i = 2; i <= n - 2; ++i) {  // log(i!) = lngamma(i+1)
    mpfr_set_si(x, i + 1, MPFR_RNDN);
    mpfr_lngamma(t, x, MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), t, MPFR_RNDN);
  }
  mpfr_clear(x);
  mpfr_clear(t);
  return BigReal(acc.rounded_to(ctx.bits()), ctx.digits);
}

Real const_pi(const PrecisionContext& ctx) {
  Real r(ctx.bits());
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

std::pair<std::string, std::string> bernoulli_2k(long k) {
  mpq_class b = TangentTable::instance().bernoulli(k);
  return {b.get_num().get_str(), b.get_den().get_str()};
}

std::vector<BigReal> zeta_batch(const std::vector<long>& args,
                                const PrecisionContext& ctx) {
  std::vector<BigReal> out(args.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(args.size()); ++i) {
    out[static_cast<size_t>(i)] = zeta_int(args[static_cast<size_t>(i)], ctx);
  }
  return out;
}

std::vector<BigReal> zeta_batch_serial(const std::vector<long>& args,
                                       const PrecisionContext& ctx) {
  std::vector<BigReal> out(args.size());
  for (size_t i = 0; i < args.size(); ++i) out[i] = zeta_int(args[i], ctx);
  return out;
}

void zeta_store_seed(const ZetaRecord& rec) { ZetaStore::instance().seed(rec); }

std::vector<ZetaRecord> zeta_store_records() {
  return ZetaStore::instance().records();
}

bool zeta_store_validate(const ZetaRecord& rec) {
  return ZetaStore::instance().validate(rec);
}

void zeta_store_clear() { ZetaStore::instance().clear(); }

}  // namespace hankel
