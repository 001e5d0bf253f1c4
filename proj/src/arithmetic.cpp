#include "hankel/arithmetic.hpp"

#include <omp.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hankel/special.hpp"

namespace hankel {

FactorSieve::FactorSieve(uint64_t limit) : limit_(std::max<uint64_t>(limit, 16)) {
  spf_.assign(static_cast<size_t>(limit_) + 1, 0);
  for (uint64_t i = 2; i <= limit_; ++i) {
    if (spf_[static_cast<size_t>(i)] == 0) {
      for (uint64_t j = i; j <= limit_; j += i) {
        if (spf_[static_cast<size_t>(j)] == 0) {
          spf_[static_cast<size_t>(j)] = static_cast<uint32_t>(i);
        }
      }
    }
  }
}

std::vector<std::pair<uint64_t, int>> FactorSieve::factorize(uint64_t m) const {
  if (m == 0) throw std::invalid_argument("factorize: m must be positive");
  std::vector<std::pair<uint64_t, int>> out;
  while (m > 1 && m <= limit_) {
    uint64_t p = spf_[static_cast<size_t>(m)];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  // beyond the sieve: trial division
  for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (m > 1) out.emplace_back(m, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint64_t> FactorSieve::divisors(uint64_t m) const {
  auto f = factorize(m);
  std::vector<uint64_t> divs{1};
  for (const auto& [p, e] : f) {
    size_t base = divs.size();
    uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

const FactorSieve& default_sieve(uint64_t at_least) {
  // Old generations are kept alive so references handed out before a regrow
  // stay valid for concurrent callers.
  static std::mutex mu;
  static std::vector<std::unique_ptr<FactorSieve>> generations;
  std::lock_guard<std::mutex> lock(mu);
  if (generations.empty() || generations.back()->limit() < at_least) {
    generations.push_back(
        std::make_unique<FactorSieve>(std::max<uint64_t>(at_least * 2, 1 << 20)));
  }
  return *generations.back();
}

uint64_t sigma2(uint64_t m) {
  if (m == 0) throw std::invalid_argument("sigma2: m must be positive");
  uint64_t r = 1;
  for (const auto& [p, e] : default_sieve(m).factorize(m)) {
    // (p^{2(e+1)} - 1) / (p^2 - 1)
    uint64_t geom = 1, pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p * p;
      geom += pk;
    }
    r *= geom;
  }
  return r;
}

uint64_t num_divisors(uint64_t m) {
  if (m == 0) throw std::invalid_argument("num_divisors: m must be positive");
  uint64_t r = 1;
  for (const auto& [p, e] : default_sieve(m).factorize(m)) {
    r *= static_cast<uint64_t>(e + 1);
  }
  return r;
}

int moebius(uint64_t m) {
  if (m == 0) throw std::invalid_argument("moebius: m must be positive");
  int k = 0;
  for (const auto& [p, e] : default_sieve(m).factorize(m)) {
    if (e > 1) return 0;
    ++k;
  }
  return (k % 2 == 0) ? 1 : -1;
}

DirichletSeries DirichletSeries::zeta() {
  DirichletSeries s;
  s.name = "zeta";
  s.coeff = [](uint64_t) { return 1L; };
  s.is_multiplicative = true;
  s.is_nonnegative = true;
  s.evaluate = [](long k, const PrecisionContext& ctx) { return zeta_int(k, ctx); };
  return s;
}

DirichletSeries DirichletSeries::moebius_series() {
  DirichletSeries s;
  s.name = "moebius";
  s.coeff = [](uint64_t m) { return static_cast<long>(moebius(m)); };
  s.is_multiplicative = true;
  s.is_nonnegative = false;
  s.evaluate = [](long k, const PrecisionContext& ctx) {
    BigReal z = zeta_int(k, ctx);
    Real one = Real::from_long(1, ctx.bits());
    return BigReal(one / z.value, ctx.digits);
  };
  return s;
}

namespace {

void ordered_rec(const FactorSieve& sieve, uint64_t remaining, int slots,
                 std::vector<uint64_t>& tuple,
                 const std::function<void(const std::vector<uint64_t>&)>& emit,
                 uint64_t& count) {
  if (slots == 1) {
    tuple.push_back(remaining);
    emit(tuple);
    ++count;
    tuple.pop_back();
    return;
  }
  for (uint64_t d : sieve.divisors(remaining)) {
    tuple.push_back(d);
    ordered_rec(sieve, remaining / d, slots - 1, tuple, emit, count);
    tuple.pop_back();
  }
}

// Strictly increasing tuples a_1 < ... < a_k with product `remaining`,
// entries > floor; accumulates the squared Vandermonde of the full set.
void distinct_rec(const FactorSieve& sieve, uint64_t remaining, int slots,
                  uint64_t floor, std::vector<uint64_t>& chosen, mpz_class& acc) {
  if (slots == 1) {
    if (remaining > floor) {
      mpz_class v = 1;
      for (uint64_t c : chosen) {
        uint64_t d = remaining - c;
        v *= mpz_class(d) * mpz_class(d);
      }
      for (size_t i = 0; i < chosen.size(); ++i) {
        for (size_t j = i + 1; j < chosen.size(); ++j) {
          uint64_t d = chosen[j] - chosen[i];
          v *= mpz_class(d) * mpz_class(d);
        }
      }
      acc += v;
    }
    return;
  }
  for (uint64_t d : sieve.divisors(remaining)) {
    if (d <= floor) continue;
    // The slots-1 later entries are strictly increasing and all exceed d,
    // so (d+1)^(slots-1) <= remaining/d is necessary.
    const uint64_t cap = remaining / d;
    uint64_t need = 1;
    bool feasible = true;
    for (int t = 0; t < slots - 1; ++t) {
      if (need > cap / (d + 1)) {
        feasible = false;
        break;
      }
      need *= d + 1;
    }
    if (!feasible) break;  // divisors ascend, so later d fail as well
    chosen.push_back(d);
    distinct_rec(sieve, remaining / d, slots - 1, d, chosen, acc);
    chosen.pop_back();
  }
}

}  // namespace

uint64_t ordered_factorizations(
    uint64_t m, int n,
    const std::function<void(const std::vector<uint64_t>&)>& emit) {
  if (m == 0 || n <= 0) {
    throw std::invalid_argument("ordered_factorizations: need m >= 1, n >= 1");
  }
  std::vector<uint64_t> tuple;
  tuple.reserve(static_cast<size_t>(n));
  uint64_t count = 0;
  ordered_rec(default_sieve(m), m, n, tuple, emit, count);
  return count;
}

std::vector<std::vector<uint64_t>> ordered_factorizations_list(uint64_t m, int n) {
  std::vector<std::vector<uint64_t>> out;
  ordered_factorizations(m, n, [&](const std::vector<uint64_t>& t) { out.push_back(t); });
  return out;
}

mpz_class h_function(int n, uint64_t m) {
  if (m == 0 || n <= 0) throw std::invalid_argument("h_function: need m >= 1, n >= 1");
  if (n == 1) return 1;  // empty Vandermonde product
  mpz_class acc = 0;
  std::vector<uint64_t> chosen;
  chosen.reserve(static_cast<size_t>(n));
  distinct_rec(default_sieve(m), m, n, 0, chosen, acc);
  return acc;
}

mpz_class h_from_ordered(int n, uint64_t m) {
  mpz_class raw = 0;
  ordered_factorizations(m, n, [&](const std::vector<uint64_t>& t) {
    mpz_class v = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      for (size_t j = i + 1; j < t.size(); ++j) {
        long d = static_cast<long>(t[j]) - static_cast<long>(t[i]);
        v *= mpz_class(d) * mpz_class(d);
      }
    }
    raw += v;
  });
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), raw.get_mpz_t(), fact.get_mpz_t());
  if (r != 0) {
    throw std::logic_error("h_from_ordered: n! does not divide the raw sum (enumeration bug)");
  }
  return q;
}

std::vector<HFunctionEntry> h_table(int n, uint64_t m_max) {
  if (n <= 0 || m_max == 0) throw std::invalid_argument("h_table: need n >= 1, m_max >= 1");
  default_sieve(m_max);  // build once before going parallel
  std::vector<HFunctionEntry> out(static_cast<size_t>(m_max));
#pragma omp parallel for schedule(dynamic, 64)
  for (long m = 1; m <= static_cast<long>(m_max); ++m) {
    auto& e = out[static_cast<size_t>(m - 1)];
    e.n = static_cast<uint64_t>(n);
    e.m = static_cast<uint64_t>(m);
    e.value = h_function(n, static_cast<uint64_t>(m));
  }
  return out;
}

std::vector<HFunctionEntry> h_table_serial(int n, uint64_t m_max) {
  if (n <= 0 || m_max == 0) throw std::invalid_argument("h_table: need n >= 1, m_max >= 1");
  std::vector<HFunctionEntry> out(static_cast<size_t>(m_max));
  for (uint64_t m = 1; m <= m_max; ++m) {
    out[static_cast<size_t>(m - 1)] = HFunctionEntry{static_cast<uint64_t>(n), m,
                                                     h_function(n, m)};
  }
  return out;
}

std::vector<uint64_t> divisor_count_table(int n, uint64_t m_max) {
  std::vector<uint64_t> cur(static_cast<size_t>(m_max) + 1, 1);
  cur[0] = 0;
  for (int step = 2; step <= n; ++step) {
    std::vector<uint64_t> next(static_cast<size_t>(m_max) + 1, 0);
    for (uint64_t d = 1; d <= m_max; ++d) {
      for (uint64_t m = d; m <= m_max; m += d) next[m] += cur[m / d];
    }
    cur = std::move(next);
  }
  return cur;  // cur[m] = d_n(m), cur[0] unused
}

BigReal dirichlet_tail_bound(int n, int r, uint64_t M, const PrecisionContext& ctx) {
  if (n <= 0 || r < 0) throw std::invalid_argument("dirichlet_tail_bound: need n >= 1, r >= 0");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  if (mpz_class(static_cast<unsigned long>(M)) < fact) {
    throw std::invalid_argument(
        "dirichlet_tail_bound: M below n! (no nonzero coefficient that low; raise M)");
  }
  const mpfr_prec_t bits = ctx.bits();
  BigReal z = zeta_int(2 + r, ctx);
  Real zn = pow_si(z.value, n);

  auto dn = divisor_count_table(n, M);
  Real partial(bits);
  mpfr_t t;
  mpfr_init2(t, bits);
  for (uint64_t m = 1; m <= M; ++m) {
    mpfr_ui_pow_ui(t, static_cast<unsigned long>(m),
                   static_cast<unsigned long>(2 + r), MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDN);
    mpfr_mul_ui(t, t, static_cast<unsigned long>(dn[m]), MPFR_RNDN);
    mpfr_add(partial.raw(), partial.raw(), t, MPFR_RNDN);
  }
  mpfr_clear(t);

  Real tail = zn - partial;
  Real factr(bits);
  mpfr_set_z(factr.raw(), fact.get_mpz_t(), MPFR_RNDN);
  tail = tail / factr;
  if (tail.is_negative()) tail = Real(bits);  // clamp rounding residue at zero
  return BigReal(tail, ctx.digits);
}

}  // namespace hankel
