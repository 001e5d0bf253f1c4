#include "hankel/coulomb.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hankel {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kMaxSite = 1 << 20;

// log k for integer k, cached; Phi comparisons need ~1e-12 resolution and
// sites stay far below the table limit at desk scale.
const double* log_table() {
  static const std::vector<double> t = [] {
    std::vector<double> v(static_cast<size_t>(kMaxSite));
    v[0] = kNegInf;
    for (long k = 1; k < kMaxSite; ++k) {
      v[static_cast<size_t>(k)] = std::log(static_cast<double>(k));
    }
    return v;
  }();
  return t.data();
}

inline double log_i(long k) { return log_table()[static_cast<size_t>(k)]; }

}  // namespace

double phi_discrete(const std::vector<long>& m, long n) {
  if (static_cast<long>(m.size()) != n) {
    throw std::invalid_argument("phi_discrete: length(m) must equal n");
  }
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || m[i] >= kMaxSite) {
      throw std::invalid_argument("phi_discrete: sites must be positive (and desk-scale)");
    }
    if (i > 0 && m[i] < m[i - 1]) {
      throw std::invalid_argument("phi_discrete: sites must be increasing (canonical order)");
    }
    if (i > 0 && m[i] == m[i - 1]) return kNegInf;  // tied charges
  }
  double phi = 0.0;
  for (long v : m) phi -= 2.0 * static_cast<double>(n) * log_i(v);
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      phi += 2.0 * log_i(m[j] - m[i]);
    }
  }
  return phi;
}

double phi_discrete_any_order(std::vector<long> m, long n) {
  std::sort(m.begin(), m.end());
  if (std::adjacent_find(m.begin(), m.end()) != m.end()) return kNegInf;
  return phi_discrete(m, n);
}

Configuration optimize(long n, uint64_t seed, long move_budget) {
  if (n < 1) throw std::invalid_argument("optimize: n >= 1");
  const long w = std::max<long>(8, n / 10);
  std::vector<long> site(static_cast<size_t>(n));
  std::vector<uint8_t> occ(static_cast<size_t>(kMaxSite), 0);
  for (long i = 0; i < n; ++i) {
    site[static_cast<size_t>(i)] = i + 1;
    occ[static_cast<size_t>(i + 1)] = 1;
  }
  double phi = phi_discrete(site, n);
  if (n == 1) return Configuration{site, phi};

  std::mt19937_64 rng(seed);
  long max_idx = n - 1;  // index of the largest charge (kept up to date)

  auto delta_move = [&](long idx, long b) {
    const long a = site[static_cast<size_t>(idx)];
    double d = -2.0 * static_cast<double>(n) * (log_i(b) - log_i(a));
    for (long j = 0; j < n; ++j) {
      if (j == idx) continue;
      const long mj = site[static_cast<size_t>(j)];
      d += 2.0 * (log_i(std::abs(b - mj)) - log_i(std::abs(a - mj)));
    }
    return d;
  };

  for (long step = 0; step < move_budget; ++step) {
    long idx, b;
    if (step % 16 == 15) {
      // support extension: push the largest charge further out
      idx = max_idx;
      const long span = 1 + static_cast<long>(rng() % static_cast<uint64_t>(4 * w));
      b = site[static_cast<size_t>(idx)] + span;
    } else {
      idx = static_cast<long>(rng() % static_cast<uint64_t>(n));
      long off = 1 + static_cast<long>(rng() % static_cast<uint64_t>(2 * w));
      long d = off <= w ? off : -(off - w);
      b = site[static_cast<size_t>(idx)] + d;
    }
    if (b < 1 || b >= kMaxSite || occ[static_cast<size_t>(b)]) continue;
    const double d = delta_move(idx, b);
    if (!(d > 0.0)) continue;
    occ[static_cast<size_t>(site[static_cast<size_t>(idx)])] = 0;
    occ[static_cast<size_t>(b)] = 1;
    site[static_cast<size_t>(idx)] = b;
    phi += d;
    if (site[static_cast<size_t>(idx)] > site[static_cast<size_t>(max_idx)]) {
      max_idx = idx;
    } else if (idx == max_idx) {
      max_idx = static_cast<long>(std::max_element(site.begin(), site.end()) -
                                  site.begin());
    }
  }

  std::sort(site.begin(), site.end());
  return Configuration{site, phi_discrete(site, n)};
}

Configuration optimize_multi(long n, const std::vector<uint64_t>& seeds,
                             long move_budget) {
  if (seeds.empty()) throw std::invalid_argument("optimize_multi: need seeds");
  std::vector<Configuration> runs(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(seeds.size()); ++i) {
    runs[static_cast<size_t>(i)] = optimize(n, seeds[static_cast<size_t>(i)], move_budget);
  }
  size_t best = 0;
  for (size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].phi > runs[best].phi ||
        (runs[i].phi == runs[best].phi && seeds[i] < seeds[best])) {
      best = i;
    }
  }
  return runs[best];
}

std::vector<std::pair<double, double>> empirical_cdf(const Configuration& c, long n) {
  std::vector<long> m = c.m;
  std::sort(m.begin(), m.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out.emplace_back(static_cast<double>(m[i]) / static_cast<double>(n),
                     static_cast<double>(i + 1) / static_cast<double>(n));
  }
  return out;
}

double sup_cdf_distance(const Configuration& c, long n) {
  Density rho{DensityKind::rho};
  auto cdf = empirical_cdf(c, n);
  double sup = 0.0;
  for (size_t i = 0; i < cdf.size(); ++i) {
    const double r = density_cdf(rho, cdf[i].first);
    const double before = static_cast<double>(i) / static_cast<double>(n);
    sup = std::max(sup, std::abs(r - cdf[i].second));
    sup = std::max(sup, std::abs(r - before));
  }
  return sup;
}

long Partition::size() const {
  long s = 0;
  for (long p : parts) s += p;
  return s;
}

namespace {

std::vector<long> shifted_coordinates(const Partition& p, long n) {
  long rows = 0;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] < 0) throw std::invalid_argument("partition parts must be >= 0");
    if (i > 0 && p.parts[i] > p.parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (p.parts[i] > 0) rows = static_cast<long>(i) + 1;
  }
  if (rows > n) throw std::invalid_argument("partition does not fit in n rows");
  std::vector<long> m(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    long part = i <= static_cast<long>(p.parts.size()) ? p.parts[static_cast<size_t>(i - 1)] : 0;
    m[static_cast<size_t>(i - 1)] = part + n - i;
  }
  return m;  // strictly decreasing
}

}  // namespace

PlancherelWeight plancherel_weight(const Partition& p, long n) {
  const std::vector<long> m = shifted_coordinates(p, n);
  PlancherelWeight out;
  double lg = 0.0;
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      lg += 2.0 * std::log(static_cast<double>(m[i] - m[j]));
    }
    lg -= 2.0 * std::lgamma(static_cast<double>(m[i]) + 1.0);
  }
  out.log_value = lg;
  if (p.size() <= 30) {
    mpz_class num = 1, den = 1, f;
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = i + 1; j < m.size(); ++j) {
        mpz_class d(m[i] - m[j]);
        num *= d * d;
      }
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
      den *= f * f;
    }
    out.exact = mpq_class(num, den);
    out.exact.canonicalize();
    out.exact_valid = true;
  }
  return out;
}

mpz_class partition_dimension(const Partition& p, long n) {
  const std::vector<long> m = shifted_coordinates(p, n);
  mpz_class num, f;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.size()));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) num *= mpz_class(m[i] - m[j]);
  }
  mpz_class den = 1;
  for (size_t i = 0; i < m.size(); ++i) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
    den *= f;
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("partition_dimension: non-integer quotient");
  return q;
}

namespace {

void partitions_rec(long k, long max_part, std::vector<long>& cur,
                    std::vector<Partition>& out) {
  if (k == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (long p = std::min(k, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(k - p, p, cur, out);
    cur.pop_back();
  }
}

double z_term(const std::vector<long>& m) {
  double lg = 0.0;
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      lg += 2.0 * std::log(static_cast<double>(m[j] - m[i]));
    }
    lg -= 2.0 * std::lgamma(static_cast<double>(m[i]) + 1.0);
  }
  return std::exp(lg);
}

void z_rec(long n, long m_max, long next_min, std::vector<long>& m, double& acc) {
  if (static_cast<long>(m.size()) == n) {
    acc += z_term(m);
    return;
  }
  for (long v = next_min; v <= m_max; ++v) {
    m.push_back(v);
    z_rec(n, m_max, v + 1, m, acc);
    m.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long k) {
  if (k < 0) throw std::invalid_argument("partitions_of: k >= 0");
  std::vector<Partition> out;
  std::vector<long> cur;
  partitions_rec(k, k == 0 ? 1 : k, cur, out);
  return out;
}

double plancherel_Z(long n, long m_max) {
  if (n < 1 || m_max < n - 1) {
    throw std::invalid_argument("plancherel_Z: need n >= 1 and m_max >= n-1");
  }
  // partials by the smallest coordinate, reduced in ascending order
  std::vector<double> partial(static_cast<size_t>(m_max) + 1, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long m1 = 0; m1 <= m_max; ++m1) {
    std::vector<long> m{m1};
    double acc = 0.0;
    z_rec(n, m_max, m1 + 1, m, acc);
    partial[static_cast<size_t>(m1)] = acc;
  }
  double z = 0.0;
  for (double p : partial) z += p;
  return z;
}

double plancherel_Z_serial(long n, long m_max) {
  if (n < 1 || m_max < n - 1) {
    throw std::invalid_argument("plancherel_Z: need n >= 1 and m_max >= n-1");
  }
  double z = 0.0;
  std::vector<long> m;
  z_rec(n, m_max, 0, m, z);
  return z;
}

}  // namespace hankel
