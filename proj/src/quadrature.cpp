#include "hankel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hankel {
namespace {

struct GaussRule {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

// Legendre nodes by Newton iteration from the Chebyshev initial guess;
// weights 2 / ((1-x^2) P'_n(x)^2).
GaussRule make_rule(int n) {
  GaussRule r;
  r.x.resize(static_cast<size_t>(n));
  r.w.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[static_cast<size_t>(i)] = x;
    r.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GaussRule& rule12() {
  static const GaussRule r = make_rule(12);
  return r;
}
const GaussRule& rule24() {
  static const GaussRule r = make_rule(24);
  return r;
}

double apply(const GaussRule& r, const Integrand& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) {
    s += r.w[i] * f(c + h * r.x[i]);
  }
  evals += static_cast<long>(r.x.size());
  return s * h;
}

void adapt(const Integrand& f, double a, double b, double tol, int depth,
           int max_depth, QuadResult& out) {
  long evals = 0;
  const double coarse = apply(rule12(), f, a, b, evals);
  const double fine = apply(rule24(), f, a, b, evals);
  out.evals += evals;
  const double diff = std::abs(fine - coarse);
  if (diff <= tol || depth >= max_depth) {
    out.value += fine;
    out.error += diff;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, double abs_tol,
                     int max_depth) {
  QuadResult out;
  if (a == b) return out;
  if (!(a < b)) throw std::invalid_argument("integrate: need a <= b");
  adapt(f, a, b, abs_tol, 0, max_depth, out);
  return out;
}

QuadResult integrate_log_singular(const Integrand& g, double a, double b,
                                  double x0, double abs_tol) {
  if (x0 < a || x0 > b) {  // no singularity inside: plain integral
    return integrate([&](double y) { return g(y) * std::log(std::abs(y - x0)); },
                     a, b, abs_tol);
  }
  QuadResult out;
  const double h = std::min(0.25, 0.5 * (b - a));
  const double lo = std::max(a, x0 - h);
  const double hi = std::min(b, x0 + h);

  auto full = [&](double y) { return g(y) * std::log(std::abs(y - x0)); };
  if (lo > a) {
    QuadResult q = integrate(full, a, lo, abs_tol / 3);
    out.value += q.value;
    out.error += q.error;
    out.evals += q.evals;
  }
  if (hi < b) {
    QuadResult q = integrate(full, hi, b, abs_tol / 3);
    out.value += q.value;
    out.error += q.error;
    out.evals += q.evals;
  }
  // singular panel: subtract g(x0) times the analytic log moment
  const double gx = g(x0);
  auto reg = [&](double y) {
    return (g(y) - gx) * std::log(std::abs(y - x0));
  };
  const double h1 = x0 - lo, h2 = hi - x0;
  if (h1 > 0) {
    QuadResult q = integrate(reg, lo, x0, abs_tol / 6);
    out.value += q.value;
    out.error += q.error;
    out.evals += q.evals;
    out.value += gx * h1 * (std::log(h1) - 1.0);
  }
  if (h2 > 0) {
    QuadResult q = integrate(reg, x0, hi, abs_tol / 6);
    out.value += q.value;
    out.error += q.error;
    out.evals += q.evals;
    out.value += gx * h2 * (std::log(h2) - 1.0);
  }
  return out;
}

}  // namespace hankel
