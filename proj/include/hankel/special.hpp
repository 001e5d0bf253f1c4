#pragma once

#include <string>
#include <vector>

#include "hankel/precision.hpp"

namespace hankel {

// Riemann zeta at integer s >= 2 under the context's error contract:
// |result - zeta(s)| <= 10^(-ctx.digits). Euler-Maclaurin with the cutoff
// and correction order chosen from the standard remainder bound so the
// truncation error is below 10^(-digits-guard). Values are memoized
// process-wide at a canonical digit grade (multiples of 60) so reruns and
// warm caches reproduce bit-identical results.
BigReal zeta_int(long s, const PrecisionContext& ctx);

// Independent route: Borwein's accelerated alternating series for the eta
// function, zeta(s) = eta(s) / (1 - 2^(1-s)). Kept as the cross-check
// oracle for zeta_int; not memoized.
BigReal zeta_int_eta(long s, const PrecisionContext& ctx);

// log Gamma(x), x > 0.
BigReal log_gamma(const Real& x, const PrecisionContext& ctx);
BigReal log_gamma(double x, const PrecisionContext& ctx);

// log of the Barnes function G(n) = prod_{i=0}^{n-2} i!, n >= 1, computed
// as a sum of log Gamma values (never by the asymptotic series).
BigReal log_barnes_g(long n, const PrecisionContext& ctx);

Real const_pi(const PrecisionContext& ctx);

// Exact Bernoulli number B_{2k} as a numerator/denominator string pair;
// test hook for the Euler-Maclaurin table (tangent-number recurrence).
std::pair<std::string, std::string> bernoulli_2k(long k);

// Batch evaluation zeta(s) for every s in `args` (OpenMP across arguments,
// values independent of thread count). Serial reference kept for tests and
// the benchmark.
std::vector<BigReal> zeta_batch(const std::vector<long>& args,
                                const PrecisionContext& ctx);
std::vector<BigReal> zeta_batch_serial(const std::vector<long>& args,
                                       const PrecisionContext& ctx);

// Process-wide zeta memo store. File-cache integration: seed() installs an
// externally cached value (trusted until validated), records() snapshots
// the store for saving, validate_entry() recomputes and compares.
struct ZetaRecord {
  long s = 0;
  long digits = 0;
  std::string significand;
  long exponent10 = 0;
};

void zeta_store_seed(const ZetaRecord& rec);
std::vector<ZetaRecord> zeta_store_records();
// Recompute `rec` from scratch and compare significands. Returns true when
// the record is confirmed; false evicts it from the store.
bool zeta_store_validate(const ZetaRecord& rec);
void zeta_store_clear();

}  // namespace hankel
