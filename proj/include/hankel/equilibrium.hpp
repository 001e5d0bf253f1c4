#pragma once

#include <string>

#include "hankel/quadrature.hpp"

namespace hankel {

// The three closed-form equilibrium densities. rhoP_mirrored is the
// orientation-flipped Plancherel density 1 - rhoP(x) = arccos(x-1)/pi; it is
// carried alongside the printed form because the stationarity test has to
// adjudicate between the two (the paper's prose and formula disagree).
enum class DensityKind { rho, rhoS, rhoP, rhoP_mirrored };

struct Density {
  DensityKind kind = DensityKind::rho;
  double support_lo() const;
  double support_hi() const;  // +inf for rho, rhoS
};

std::string density_name(DensityKind k);

// Piecewise closed form; zero outside the support.
double density_eval(const Density& d, double x);

// int_{lo}^{x} density; closed forms.
double density_cdf(const Density& d, double x);

// Adaptive quadrature of the density over its support (sqrt singularities
// removed by the substitutions y=(s^2+1)/2 and y=1+s^2, tails in 1/s).
QuadResult normalization(const Density& d);

// Closed-form logarithmic potential of rho: log2 - 1 at 0, the middle
// branch on (0, 1/2), log x for x >= 1/2.
double log_potential_rho(double x);

// Oracle route: int d(y) log|x-y| dy by quadrature, split at the
// singularity, log moments subtracted on the singular panel.
QuadResult log_potential_quadrature(const Density& d, double x);

// Principal value int d(y)/(x-y) dy by symmetric excision with Richardson
// refinement of the excision radius.
double pv_transform(const Density& d, double x);

// |target(x) - PV|, target 1/x for rho and rhoS, log x for the rhoP kinds.
// x must lie in the region where the stationarity equation applies
// (rho: x > 1/2, rhoS: x > 1, rhoP: 0 < x < 2).
double pv_residual(const Density& d, double x);

// Energy functional. For rho: -n^2 log n - n^2 (2 I1 - I2) with
// I1 = int rho log x, I2 = int rho(x) U(x) dx collapsing the double integral
// through log_potential_rho. For rhoS and the rhoP kinds the unscaled form
// -n^2 (2 I1 - I2) with U from quadrature.
double phi_functional(const Density& d, long n);

}  // namespace hankel
