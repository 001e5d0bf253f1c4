#pragma once

#include <functional>

namespace hankel {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated estimate
  long evals = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive bisection with nested 12/24-point Gauss-Legendre panels (nodes
// computed once by Newton iteration, no tabulated constants). Absolute
// tolerance; open rule, so integrable endpoint singularities are never
// evaluated directly.
QuadResult integrate(const Integrand& f, double a, double b, double abs_tol,
                     int max_depth = 52);

// int_a^b g(y) log|y - x0| dy for smooth g and x0 inside or at an endpoint
// of [a,b]: the panel around x0 is handled by subtracting the analytic log
// moment, the rest adaptively.
QuadResult integrate_log_singular(const Integrand& g, double a, double b,
                                  double x0, double abs_tol);

}  // namespace hankel
