#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hankel/engine.hpp"
#include "hankel/precision.hpp"

namespace hankel {

enum class InvVariable { inv_2n_plus_1, inv_2n };

struct FitResult {
  InvVariable variable = InvVariable::inv_2n_plus_1;
  std::vector<double> coefficients;  // c_1..c_K for y ~ sum c_k u^k
  long n_min = 0, n_max = 0;
  double residual_norm = 0.0;
};

struct FitSample {
  long n = 0;
  Real y;
};

// Least-squares (exact interpolation when #samples == K) for
// y ~ sum_{k=1..K} c_k u^k with u = 1/(2n+1) or 1/(2n). Solved in extended
// precision; the u-powers make the system ill-conditioned in doubles.
FitResult fit_inverse_series(const std::vector<FitSample>& samples,
                             InvVariable variable, int order);

struct ScalingFit {
  int kind = 0;
  std::vector<std::pair<long, double>> a_table;  // (n, A_n)
  double estimate = 0.0;
  bool extrapolated = false;  // false: fewer than 3 samples, raw last value
};

struct ScalingConstants {
  double A0_estimate = 0.0;
  double A1_estimate = 0.0;
  double ratio_A1_over_A0 = 0.0;
};

// kind 0: A_n = H_n^(0) ((2n+1)/e^{3/2})^{(n+1/2)^2};
// kind 1: results H_m^(1) are indexed as H_{n-1}^(1) with n = m+1 and
//         A_n = H_{n-1}^(1) ((2n)/e^{3/2})^{n^2 - 3/4}.
// Richardson (polynomial extrapolation in 1/(2n+1)^2 resp. 1/(2n)^2)
// removes the even-power corrections.
ScalingFit zagier_scaling(const std::vector<HankelResult>& values, int kind);

ScalingConstants scaling_constants(const ScalingFit& kind0, const ScalingFit& kind1);

// residual(n) = log H_n^(0) + n^2 (log 2n - 3/2); residual/n^2 -> 0.
std::vector<std::pair<long, double>> leading_law_residual(
    const std::vector<HankelResult>& values);

// log S_n(1,1,1) by the exact Gamma sum; the Barnes-G combination
// 3 log G(n+1) + log G(n+2) - log G(2n+1) is the cross-check route.
BigReal selberg_exact_log(long n, const PrecisionContext& ctx);
BigReal selberg_exact_log_barnes(long n, const PrecisionContext& ctx);

// -2 log2 n^2 + (log(2 pi n) - 1) n, the paper's two displayed terms.
double selberg_asymptotic_log(long n);

// z^2 (log(z)/2 - 3/4) + z log(2 pi)/2 - log(z)/12, no constant term.
double barnes_asymptotic_log(double z);

}  // namespace hankel
