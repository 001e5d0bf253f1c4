#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hankel/arithmetic.hpp"
#include "hankel/matrix.hpp"
#include "hankel/precision.hpp"

namespace hankel {

// The matrix (F(i+j+r))_{1<=i,j<=n}; smallest argument is 2+r.
struct HankelSpec {
  DirichletSeries series;
  long n = 1;
  long r = 0;
};

struct HankelResult {
  std::string series;
  long n = 0;
  long r = 0;
  BigReal value;
  double log10_value = 0.0;
  long digits_certified = 0;
  std::string method;       // "cholesky" | "lu"
  long working_digits = 0;  // precision of the accepted run
};

// Thrown after the escalation budget is exhausted; carries both trial values.
struct HankelConvergenceError : std::runtime_error {
  HankelConvergenceError(std::string msg, BigReal lo, BigReal hi)
      : std::runtime_error(std::move(msg)), trial_low(std::move(lo)), trial_high(std::move(hi)) {}
  BigReal trial_low, trial_high;
};

// Working-digit estimate for the zeta family, driven by the asymptotic decay
// law so the determinant survives cancellation; other series start at 200
// and rely on the doubling escalation.
long working_digits_for(const HankelSpec& spec);

// Entry (i,j) = F(i+j+r); the 2n-1 distinct values are computed once
// (in parallel) and fanned out across the antidiagonals.
PrecMatrix build_matrix(const HankelSpec& spec, const PrecisionContext& ctx);

// Adaptive-precision determinant: evaluate at D and ceil(1.2 D)+30 digits,
// certify the agreeing leading digits minus 2, escalate by doubling (at most
// 3 times) until `target_digits` are certified.
HankelResult hankel(const HankelSpec& spec, long target_digits);

// Dirichlet-series route of the coefficient theorem: partial sum
// sum_{m<=M} h_n(m) f(m) / m^(2n+r) plus a rigorous tail bound. Requires a
// multiplicative series and M >= n!.
struct DirichletSum {
  BigReal partial;
  BigReal tail;
};
DirichletSum hankel_via_dirichlet(const HankelSpec& spec, uint64_t M,
                                  const PrecisionContext& ctx);

// Truncated multi-sum oracle (1/n!) sum over tuples in [1,M]^n, evaluated
// over sorted distinct tuples. Desk-scale only: n <= 4.
BigReal hankel_bruteforce(const HankelSpec& spec, uint64_t M,
                          const PrecisionContext& ctx);
BigReal hankel_bruteforce_serial(const HankelSpec& spec, uint64_t M,
                                 const PrecisionContext& ctx);

// Balanced consecutive-determinant ratios of the zeta family:
//   R0(n) = H_{n+1}^(0) H_{n-1}^(1) / (H_n^(0) H_n^(1))   ~ 1/(2n+1) - ...
//   R1(n) = H_{n-1}^(0) H_n^(1) / (H_n^(0) H_{n-1}^(1))   ~ 1/(2n) + ...
// (the combinations carrying the two printed expansions; see README).
struct RatioRow {
  long n = 0;
  BigReal r0;
  BigReal r1;
};
std::vector<RatioRow> ratio_sequences(long n_max, long target_digits);

// Precomputed determinant grid H_k^(r) used by ratio/scaling consumers;
// results indexed [r][k], k = 1..n_max(+1 for r=0).
struct HankelGrid {
  std::vector<HankelResult> h0;  // H_k^(0), k = 1..n0_max
  std::vector<HankelResult> h1;  // H_k^(1), k = 1..n1_max
  const HankelResult& H0(long k) const { return h0.at(static_cast<size_t>(k - 1)); }
  const HankelResult& H1(long k) const { return h1.at(static_cast<size_t>(k - 1)); }
};
HankelGrid hankel_grid(long n0_max, long n1_max, long target_digits);

// One signed multiple-zeta term: coeff * zeta_<(e_1,...,e_n), exponents
// listed from the smallest summation variable upward.
struct MZVTerm {
  long coeff = 0;
  std::vector<int> exponents;
};

// Fully symmetrized signed expansion of H_n^(0)[zeta] into nested sums:
// terms over both the exponent assignment and the variable ordering, merged
// by composition and sorted lexicographically. 2 <= n <= 4.
std::vector<MZVTerm> mzv_expansion(int n);

// The paper's unsymmetrized display sum_pi (-1)^pi zeta(1+pi(1),...,n+pi(n))
// read in one of the two index conventions; kept for the comparison record.
std::vector<MZVTerm> mzv_display_unsymmetrized(int n, bool smallest_first);

// Nested truncated sum over m_1 < ... < m_k <= M with tail estimate
// O(M^(1-e_k)). Exponents >= 1, last >= 2.
struct MZVValue {
  BigReal value;
  double tail_estimate = 0.0;
};
MZVValue mzv_eval(const std::vector<int>& exponents, uint64_t M,
                  const PrecisionContext& ctx);

}  // namespace hankel
