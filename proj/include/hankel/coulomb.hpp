#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "hankel/equilibrium.hpp"

namespace hankel {

// Lattice charge configuration, sites strictly increasing.
struct Configuration {
  std::vector<long> m;
  double phi = 0.0;
};

// Phi(m) = -2n sum log m_i + 2 sum_{i<j} log(m_j - m_i), the r = 0 energy.
// Duplicate or nonpositive sites give -inf.
double phi_discrete(const std::vector<long>& m, long n);
// Sorting wrapper (the functional is permutation invariant).
double phi_discrete_any_order(std::vector<long> m, long n);

// Greedy start m_i = i, then strict-improvement single-site moves within a
// window of width max(8, n/10) plus support-extension moves for the largest
// charge. Deterministic for fixed (n, seed, budget).
Configuration optimize(long n, uint64_t seed, long move_budget);

// Independent restarts across seeds (OpenMP), best phi wins, seed breaks ties.
Configuration optimize_multi(long n, const std::vector<uint64_t>& seeds,
                             long move_budget);

// Step function F(x) = #{i : m_i <= n x}/n on the scaled axis x = m/n.
std::vector<std::pair<double, double>> empirical_cdf(const Configuration& c, long n);

// sup_x |F_emp(x) - int_0^x rho| over the jump points (both one-sided limits).
double sup_cdf_distance(const Configuration& c, long n);

// Weakly decreasing partition; trailing zeros allowed when embedding into n rows.
struct Partition {
  std::vector<long> parts;
  long size() const;
};

struct PlancherelWeight {
  bool exact_valid = false;
  mpq_class exact;      // when |lambda| <= 30
  double log_value = 0.0;  // natural log of the weight (always set)
};

// P(lambda) = prod_{i<j}(m_i - m_j)^2 / prod (m_i!)^2 in shifted coordinates
// m_i = lambda_i + n - i.
PlancherelWeight plancherel_weight(const Partition& p, long n);

// dim(lambda) embedded in n rows: |lambda|! prod_{i<j}(m_i-m_j) / prod m_i!.
mpz_class partition_dimension(const Partition& p, long n);

// All partitions of k (weakly decreasing), deterministic order.
std::vector<Partition> partitions_of(long k);

// Truncated Z_n = sum over 0 <= m_1 < ... < m_n <= m_max of
// prod (m_i - m_j)^2 / prod (m_i!)^2; deterministic summation order.
double plancherel_Z(long n, long m_max);
double plancherel_Z_serial(long n, long m_max);

}  // namespace hankel
