#include "hankel/engine.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hankel/special.hpp"

namespace hankel {
namespace {

constexpr long kMinWorkingDigits = 60;

long agreement_digits(const Real& a, const Real& b) {
  if (mpfr_zero_p(a.raw()) && mpfr_zero_p(b.raw())) return 1000000;
  if (mpfr_zero_p(a.raw()) || mpfr_zero_p(b.raw())) return 0;
  if (mpfr_sgn(a.raw()) != mpfr_sgn(b.raw())) return 0;
  Real rel = abs((a - b) / b);
  if (rel.is_zero()) return 1000000;
  double lg = log10(rel).to_double();
  if (lg >= 0.0) return 0;
  return static_cast<long>(-lg);
}

Real det_for(const HankelSpec& spec, const PrecisionContext& ctx, DetMethod method,
             bool& ok, std::string& why) {
  PrecMatrix m = build_matrix(spec, ctx);
  DetResult d = determinant(m, method);
  ok = d.ok;
  why = d.failure;
  return d.det;
}

}  // namespace

long working_digits_for(const HankelSpec& spec) {
  const double n = static_cast<double>(spec.n);
  if (spec.series.name == "zeta") {
    double need = (n + 0.5) * (n + 0.5) * (std::log(2.0 * n + 1.0) - 1.5) / std::log(10.0);
    long d = static_cast<long>(std::ceil(std::max(0.0, need))) + 10 * spec.n + 60;
    return std::max(kMinWorkingDigits, d);
  }
  return 200;
}

PrecMatrix build_matrix(const HankelSpec& spec, const PrecisionContext& ctx) {
  if (spec.n < 1 || spec.r < 0) {
    throw std::invalid_argument("build_matrix: need n >= 1, r >= 0");
  }
  if (!spec.series.evaluate) {
    throw std::domain_error("build_matrix: series '" + spec.series.name +
                            "' has no closed-form evaluator F(s)");
  }
  const long n = spec.n;
  std::vector<BigReal> vals(static_cast<size_t>(2 * n - 1));
  bool nested = omp_in_parallel();
#pragma omp parallel for schedule(dynamic) if (!nested)
  for (long k = 0; k < 2 * n - 1; ++k) {
    vals[static_cast<size_t>(k)] = spec.series.evaluate(2 + spec.r + k, ctx);
  }
  PrecMatrix m(n, ctx.bits());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      m.at(i, j) = vals[static_cast<size_t>(i + j)].value;
    }
  }
  return m;
}

HankelResult hankel(const HankelSpec& spec, long target_digits) {
  if (target_digits < 10) {
    throw std::invalid_argument("hankel: target_digits must be >= 10");
  }
  const DetMethod method =
      spec.series.is_nonnegative ? DetMethod::cholesky : DetMethod::lu;

  long d = std::max(working_digits_for(spec), target_digits + 10);
  BigReal last_lo, last_hi;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    const long d1 = d;
    const long d2 = (12 * d + 9) / 10 + 30;  // ceil(1.2 d) + 30
    PrecisionContext c1 = make_context(d1);
    PrecisionContext c2 = make_context(d2);

    bool ok1 = false, ok2 = false;
    std::string why1, why2;
    Real v1 = det_for(spec, c1, method, ok1, why1);
    Real v2 = det_for(spec, c2, method, ok2, why2);
    if (ok1 && ok2) {
      last_lo = BigReal(v1, d1);
      last_hi = BigReal(v2, d2);
      const long agree = agreement_digits(v1, v2);
      const long cert = std::min(agree - 2, d1);
      if (cert >= target_digits) {
        HankelResult res;
        res.series = spec.series.name;
        res.n = spec.n;
        res.r = spec.r;
        res.value = BigReal(v2, cert);
        res.log10_value = res.value.log10_abs();  // sign travels in the significand
        res.digits_certified = cert;
        res.method = method == DetMethod::cholesky ? "cholesky" : "lu";
        res.working_digits = d2;
        return res;
      }
    }
    d *= 2;  // cholesky pivot failure or insufficient agreement: escalate
  }
  throw HankelConvergenceError(
      "hankel: no " + std::to_string(target_digits) +
          "-digit agreement for series=" + spec.series.name +
          " n=" + std::to_string(spec.n) + " r=" + std::to_string(spec.r) +
          " after 3 escalations",
      last_lo, last_hi);
}

DirichletSum hankel_via_dirichlet(const HankelSpec& spec, uint64_t M,
                                  const PrecisionContext& ctx) {
  if (!spec.series.is_multiplicative) {
    throw std::invalid_argument(
        "hankel_via_dirichlet: theorem requires a multiplicative series");
  }
  const int n = static_cast<int>(spec.n);
  const long expo = 2 * spec.n + spec.r;
  BigReal tail = dirichlet_tail_bound(n, static_cast<int>(spec.r), M, ctx);

  auto table = h_table(n, M);
  const mpfr_prec_t bits = ctx.bits();
  Real partial(bits);
  mpfr_t t, hz;
  mpfr_init2(t, bits);
  mpfr_init2(hz, bits);
  for (uint64_t m = 1; m <= M; ++m) {
    const mpz_class& h = table[static_cast<size_t>(m - 1)].value;
    if (h == 0) continue;
    long f = spec.series.coeff(m);
    if (f == 0) continue;
    mpfr_set_z(hz, h.get_mpz_t(), MPFR_RNDN);
    mpfr_ui_pow_ui(t, static_cast<unsigned long>(m), static_cast<unsigned long>(expo),
                   MPFR_RNDN);
    mpfr_div(t, hz, t, MPFR_RNDN);
    mpfr_mul_si(t, t, f, MPFR_RNDN);
    mpfr_add(partial.raw(), partial.raw(), t, MPFR_RNDN);
  }
  mpfr_clear(t);
  mpfr_clear(hz);
  return DirichletSum{BigReal(partial, ctx.digits), tail};
}

namespace {

BigReal bruteforce_impl(const HankelSpec& spec, uint64_t M,
                        const PrecisionContext& ctx, bool parallel) {
  if (spec.n > 4) {
    throw std::invalid_argument("hankel_bruteforce: desk-scale oracle, n <= 4 only");
  }
  if (spec.n < 1 || M < static_cast<uint64_t>(spec.n)) {
    throw std::invalid_argument("hankel_bruteforce: need n >= 1 and M >= n");
  }
  const int n = static_cast<int>(spec.n);
  const unsigned long expo = static_cast<unsigned long>(2 * spec.n + spec.r);
  const mpfr_prec_t bits = ctx.bits();
  const auto& f = spec.series.coeff;

  // Partial sums indexed by the outermost variable, reduced in order.
  std::vector<Real> partial(static_cast<size_t>(M), Real(bits));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long m1 = 1; m1 <= static_cast<long>(M); ++m1) {
    mpfr_t t;
    mpfr_init2(t, bits);
    Real acc(bits);
    const long c1 = f(static_cast<uint64_t>(m1));
    auto add_tuple = [&](unsigned long prod, long csign, unsigned __int128 vsq) {
      if (csign == 0 || vsq == 0) return;
      mpfr_ui_pow_ui(t, prod, expo, MPFR_RNDN);
      mpfr_ui_div(t, 1, t, MPFR_RNDN);
      // 128-bit Vandermonde^2 split into two 64-bit halves
      const uint64_t hi = static_cast<uint64_t>(vsq >> 64);
      const uint64_t lo = static_cast<uint64_t>(vsq);
      if (hi != 0) {
        mpfr_t v;
        mpfr_init2(v, 128);
        mpfr_set_ui(v, hi, MPFR_RNDN);
        mpfr_mul_2ui(v, v, 64, MPFR_RNDN);
        mpfr_add_ui(v, v, lo, MPFR_RNDN);
        mpfr_mul(t, t, v, MPFR_RNDN);
        mpfr_clear(v);
      } else {
        mpfr_mul_ui(t, t, lo, MPFR_RNDN);
      }
      mpfr_mul_si(t, t, csign, MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t, MPFR_RNDN);
    };
    auto sq = [](long a) {
      return static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(a);
    };
    if (n == 1) {
      add_tuple(static_cast<unsigned long>(m1), c1, 1);
    } else {
      for (long m2 = m1 + 1; m2 <= static_cast<long>(M); ++m2) {
        const long c2 = c1 * f(static_cast<uint64_t>(m2));
        if (n == 2) {
          add_tuple(static_cast<unsigned long>(m1 * m2), c2, sq(m2 - m1));
        } else {
          for (long m3 = m2 + 1; m3 <= static_cast<long>(M); ++m3) {
            const long c3 = c2 * f(static_cast<uint64_t>(m3));
            const unsigned __int128 v3 = sq(m2 - m1) * sq(m3 - m1) * sq(m3 - m2);
            if (n == 3) {
              add_tuple(static_cast<unsigned long>(m1 * m2 * m3), c3, v3);
            } else {
              for (long m4 = m3 + 1; m4 <= static_cast<long>(M); ++m4) {
                const long c4 = c3 * f(static_cast<uint64_t>(m4));
                const unsigned __int128 v4 =
                    v3 * sq(m4 - m1) * sq(m4 - m2) * sq(m4 - m3);
                add_tuple(static_cast<unsigned long>(m1 * m2 * m3 * m4), c4, v4);
              }
            }
          }
        }
      }
    }
    partial[static_cast<size_t>(m1 - 1)] = std::move(acc);
    mpfr_clear(t);
  }
  Real sum(bits);
  for (const Real& p : partial) {
    mpfr_add(sum.raw(), sum.raw(), p.raw(), MPFR_RNDN);
  }
  return BigReal(sum, ctx.digits);
}

}  // namespace

BigReal hankel_bruteforce(const HankelSpec& spec, uint64_t M,
                          const PrecisionContext& ctx) {
  return bruteforce_impl(spec, M, ctx, true);
}

BigReal hankel_bruteforce_serial(const HankelSpec& spec, uint64_t M,
                                 const PrecisionContext& ctx) {
  return bruteforce_impl(spec, M, ctx, false);
}

HankelGrid hankel_grid(long n0_max, long n1_max, long target_digits) {
  // Warm the zeta store at the largest grade first so every job rounds down
  // from one canonical evaluation instead of recomputing per grade.
  HankelSpec widest{DirichletSeries::zeta(), std::max(n0_max, n1_max + 1), 0};
  long dmax = std::max(working_digits_for(widest), target_digits + 10);
  long d2 = (12 * dmax + 9) / 10 + 30;
  {
    std::vector<long> args;
    for (long k = 2; k <= 2 * widest.n + 1; ++k) args.push_back(k);
    zeta_batch(args, make_context(dmax));
    zeta_batch(args, make_context(d2));
  }

  HankelGrid grid;
  grid.h0.resize(static_cast<size_t>(n0_max));
  grid.h1.resize(static_cast<size_t>(n1_max));
  struct Job {
    long k;
    long r;
  };
  std::vector<Job> jobs;
  for (long k = 1; k <= n0_max; ++k) jobs.push_back({k, 0});
  for (long k = 1; k <= n1_max; ++k) jobs.push_back({k, 1});
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < static_cast<long>(jobs.size()); ++j) {
    const Job& job = jobs[static_cast<size_t>(j)];
    HankelSpec spec{DirichletSeries::zeta(), job.k, job.r};
    HankelResult res = hankel(spec, target_digits);
    if (job.r == 0) {
      grid.h0[static_cast<size_t>(job.k - 1)] = std::move(res);
    } else {
      grid.h1[static_cast<size_t>(job.k - 1)] = std::move(res);
    }
  }
  return grid;
}

std::vector<RatioRow> ratio_sequences(long n_max, long target_digits) {
  if (n_max < 3) throw std::invalid_argument("ratio_sequences: need n_max >= 3");
  HankelGrid g = hankel_grid(n_max + 1, n_max, target_digits);

  std::vector<RatioRow> rows;
  for (long n = 2; n <= n_max; ++n) {
    const BigReal& h0n = g.H0(n).value;
    const BigReal& h1n = g.H1(n).value;
    const BigReal& h0p = g.H0(n + 1).value;
    const BigReal& h0m = g.H0(n - 1).value;
    const BigReal& h1m = g.H1(n - 1).value;
    long cert = std::min({g.H0(n).digits_certified, g.H1(n).digits_certified,
                          g.H0(n + 1).digits_certified, g.H0(n - 1).digits_certified,
                          g.H1(n - 1).digits_certified});
    cert = std::max<long>(1, cert - 2);
    RatioRow row;
    row.n = n;
    row.r0 = BigReal((h0p.value * h1m.value) / (h0n.value * h1n.value), cert);
    row.r1 = BigReal((h0m.value * h1n.value) / (h0n.value * h1m.value), cert);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MZVTerm> mzv_expansion(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("mzv_expansion: 2 <= n <= 4");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto sign_of = [](const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i) {
      for (size_t j = i + 1; j < p.size(); ++j) {
        if (p[i] > p[j]) s = -s;
      }
    }
    return s;
  };

  // Term for ordering sigma and exponent assignment pi: the k-th smallest
  // variable carries exponent i + pi(i) with i = sigma^{-1}(k).
  std::map<std::vector<int>, long> merged;
  for (const auto& sigma : perms) {
    std::vector<int> sigma_inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) {
      sigma_inv[static_cast<size_t>(sigma[i] - 1)] = static_cast<int>(i + 1);
    }
    for (const auto& pi : perms) {
      std::vector<int> e(sigma.size());
      for (size_t k = 0; k < sigma.size(); ++k) {
        int i = sigma_inv[k];
        e[k] = i + pi[static_cast<size_t>(i - 1)];
      }
      merged[e] += sign_of(pi);
    }
  }

  std::vector<MZVTerm> out;
  for (const auto& [e, c] : merged) {
    if (c != 0) out.push_back(MZVTerm{c, e});
  }
  return out;
}

std::vector<MZVTerm> mzv_display_unsymmetrized(int n, bool smallest_first) {
  if (n < 2 || n > 4) throw std::invalid_argument("mzv_display_unsymmetrized: 2 <= n <= 4");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::map<std::vector<int>, long> merged;
  do {
    int s = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
      for (size_t j = i + 1; j < perm.size(); ++j) {
        if (perm[i] > perm[j]) s = -s;
      }
    }
    std::vector<int> e(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
      e[i] = static_cast<int>(i + 1) + perm[i];
    }
    if (!smallest_first) std::reverse(e.begin(), e.end());
    merged[e] += s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<MZVTerm> out;
  for (const auto& [e, c] : merged) {
    if (c != 0) out.push_back(MZVTerm{c, e});
  }
  return out;
}

MZVValue mzv_eval(const std::vector<int>& exponents, uint64_t M,
                  const PrecisionContext& ctx) {
  if (exponents.empty()) throw std::invalid_argument("mzv_eval: empty composition");
  for (int e : exponents) {
    if (e < 1) throw std::invalid_argument("mzv_eval: divergent composition (exponent < 1)");
  }
  if (exponents.back() < 2) {
    throw std::invalid_argument(
        "mzv_eval: divergent composition (largest variable needs exponent >= 2)");
  }
  const size_t K = exponents.size();
  const mpfr_prec_t bits = ctx.bits();

  // Stream t = M..1 keeping acc[k] = sum_{m_k > t} m_k^{-e_k} * acc[k+1]-suffix;
  // terms at t are formed from the pre-update accumulators.
  std::vector<Real> acc(K, Real(bits));
  std::vector<Real> term(K, Real(bits));
  mpfr_t p;
  mpfr_init2(p, bits);
  for (uint64_t t = M; t >= 1; --t) {
    for (size_t k = 0; k < K; ++k) {
      mpfr_ui_pow_ui(p, static_cast<unsigned long>(t),
                     static_cast<unsigned long>(exponents[k]), MPFR_RNDN);
      mpfr_ui_div(p, 1, p, MPFR_RNDN);
      if (k + 1 < K) {
        mpfr_mul(term[k].raw(), p, acc[k + 1].raw(), MPFR_RNDN);
      } else {
        mpfr_set(term[k].raw(), p, MPFR_RNDN);
      }
    }
    for (size_t k = 0; k < K; ++k) {
      mpfr_add(acc[k].raw(), acc[k].raw(), term[k].raw(), MPFR_RNDN);
    }
  }
  mpfr_clear(p);

  double c = 1.0;
  for (size_t k = 0; k + 1 < K; ++k) c *= 1.6449340668482273;  // zeta(2) bound
  double tail = c * std::pow(static_cast<double>(M), 1.0 - exponents.back()) /
                (exponents.back() - 1.0);
  return MZVValue{BigReal(acc[0], ctx.digits), tail};
}

}  // namespace hankel
