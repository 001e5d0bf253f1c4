#include "hankel/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hankel {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// rho((s^2+1)/2) under y = (s^2+1)/2; the substitution that removes the
// sqrt behavior of the x > 1/2 branch.
double rho_t(double s) {
  return (2.0 / M_PI) * (std::atan(1.0 / s) - s / (1.0 + s * s));
}

double rho_eval(double x) {
  if (x < 0.0) return 0.0;
  if (x <= 0.5) return 1.0;
  const double s = std::sqrt(2.0 * x - 1.0);
  return (2.0 / M_PI) * (std::atan(1.0 / s) - s / (2.0 * x));
}

double rhoS_eval(double x) {
  if (x <= 1.0) return 0.0;
  return 1.0 / (M_PI * x * std::sqrt(x - 1.0));
}

double rhoP_eval(double x) {
  if (x < 0.0 || x > 2.0) return 0.0;
  return std::acos(1.0 - x) / M_PI;
}

double rhoP_mirror_eval(double x) {
  if (x < 0.0 || x > 2.0) return 0.0;
  return std::acos(x - 1.0) / M_PI;
}

// int_Y^inf rho(y) W(y) dy-type tails, via u = 1/sqrt(y) so the endpoint is
// a plain log singularity. Used with W = log-ish kernels.
constexpr double kRhoTailY = 400.0;
constexpr double kRhoSTailS = 400.0;  // s-coordinate cutoff for rhoS pieces

double neville_to_zero(std::vector<double> xs, std::vector<double> ys) {
  const size_t n = xs.size();
  for (size_t lvl = 1; lvl < n; ++lvl) {
    for (size_t i = 0; i + lvl < n; ++i) {
      ys[i] = (xs[i + lvl] * ys[i] - xs[i] * ys[i + 1]) / (xs[i + lvl] - xs[i]);
    }
  }
  return ys[0];
}

}  // namespace

double Density::support_lo() const {
  switch (kind) {
    case DensityKind::rhoS:
      return 1.0;
    default:
      return 0.0;
  }
}

double Density::support_hi() const {
  switch (kind) {
    case DensityKind::rhoP:
    case DensityKind::rhoP_mirrored:
      return 2.0;
    default:
      return kInf;
  }
}

std::string density_name(DensityKind k) {
  switch (k) {
    case DensityKind::rho:
      return "rho";
    case DensityKind::rhoS:
      return "rhoS";
    case DensityKind::rhoP:
      return "rhoP";
    case DensityKind::rhoP_mirrored:
      return "rhoP_mirrored";
  }
  return "?";
}

double density_eval(const Density& d, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("density_eval: x must be finite");
  switch (d.kind) {
    case DensityKind::rho:
      return rho_eval(x);
    case DensityKind::rhoS:
      return rhoS_eval(x);
    case DensityKind::rhoP:
      return rhoP_eval(x);
    case DensityKind::rhoP_mirrored:
      return rhoP_mirror_eval(x);
  }
  return 0.0;
}

double density_cdf(const Density& d, double x) {
  switch (d.kind) {
    case DensityKind::rho:
      if (x <= 0.0) return 0.0;
      if (x <= 0.5) return x;
      return x * rho_eval(x) + (2.0 / M_PI) * std::atan(std::sqrt(2.0 * x - 1.0));
    case DensityKind::rhoS:
      if (x <= 1.0) return 0.0;
      return (2.0 / M_PI) * std::atan(std::sqrt(x - 1.0));
    case DensityKind::rhoP: {
      if (x <= 0.0) return 0.0;
      if (x >= 2.0) return 1.0;
      return ((x - 1.0) * std::acos(1.0 - x) + std::sqrt(2.0 * x - x * x)) / M_PI;
    }
    case DensityKind::rhoP_mirrored: {
      if (x <= 0.0) return 0.0;
      if (x >= 2.0) return 1.0;
      Density p{DensityKind::rhoP};
      return x - density_cdf(p, x);
    }
  }
  return 0.0;
}

QuadResult normalization(const Density& d) {
  const double tol = 1e-12;
  QuadResult out;
  switch (d.kind) {
    case DensityKind::rho: {
      const double S = std::sqrt(2.0 * kRhoTailY - 1.0);
      out = integrate([](double s) { return rho_t(s) * s; }, 0.0, S, tol);
      out.value += 0.5;
      // series tail of the transformed integrand, alternating in S^-2
      const double t1 = 2.0 / (3.0 * S), t2 = 4.0 / (15.0 * std::pow(S, 3)),
                   t3 = 6.0 / (35.0 * std::pow(S, 5)), t4 = 8.0 / (63.0 * std::pow(S, 7));
      out.value += (2.0 / M_PI) * (t1 - t2 + t3 - t4);
      out.error += (2.0 / M_PI) * 10.0 / (99.0 * std::pow(S, 9));
      return out;
    }
    case DensityKind::rhoS: {
      const double S = kRhoSTailS;
      out = integrate([](double s) { return 2.0 / (M_PI * (1.0 + s * s)); }, 0.0, S, tol);
      const double t1 = 1.0 / S, t2 = 1.0 / (3.0 * std::pow(S, 3)),
                   t3 = 1.0 / (5.0 * std::pow(S, 5)), t4 = 1.0 / (7.0 * std::pow(S, 7));
      out.value += (2.0 / M_PI) * (t1 - t2 + t3 - t4);
      out.error += (2.0 / M_PI) / (9.0 * std::pow(S, 9));
      return out;
    }
    case DensityKind::rhoP:
      // x = 1 - cos t turns arccos(1-x)/pi into t/pi with smooth weight
      return integrate([](double t) { return t / M_PI * std::sin(t); }, 0.0, M_PI, tol);
    case DensityKind::rhoP_mirrored:
      return integrate([](double t) { return (M_PI - t) / M_PI * std::sin(t); }, 0.0,
                       M_PI, tol);
  }
  return out;
}

double log_potential_rho(double x) {
  if (x < 0.0) throw std::invalid_argument("log_potential_rho: x >= 0 required");
  if (x == 0.0) return std::log(2.0) - 1.0;
  if (x < 0.5) {
    const double r = std::sqrt(1.0 - 2.0 * x);
    // sign of the third term corrected relative to the printed branch; the
    // x -> 0 limit log2 - 1 and the quadrature oracle both force 2(1-x).
    return -r - std::log(2.0) + 2.0 * (1.0 - x) * std::log1p(r) + x * std::log(2.0 * x);
  }
  return std::log(x);
}

QuadResult log_potential_quadrature(const Density& d, double x) {
  const double tol = 1e-11;
  QuadResult out;
  auto absorb = [&out](const QuadResult& q) {
    out.value += q.value;
    out.error += q.error;
    out.evals += q.evals;
  };
  switch (d.kind) {
    case DensityKind::rho: {
      // flat part [0, 1/2], unit weight
      absorb(integrate_log_singular([](double) { return 1.0; }, 0.0, 0.5, x, tol));
      // curved part in s-coordinates up to y = kRhoTailY
      const double S = std::sqrt(2.0 * kRhoTailY - 1.0);
      auto f = [x](double s) {
        const double y = 0.5 * (s * s + 1.0);
        return rho_t(s) * s * std::log(std::abs(x - y));
      };
      if (x > 0.5 && x < kRhoTailY) {
        const double s0 = std::sqrt(2.0 * x - 1.0);
        absorb(integrate(f, 0.0, s0, tol));
        absorb(integrate(f, s0, S, tol));
      } else {
        absorb(integrate(f, 0.0, S, tol));
      }
      // exact tail in u = 1/sqrt(y)
      auto ft = [x](double u) {
        const double y = 1.0 / (u * u);
        return rho_eval(y) * std::log(y - x) * 2.0 / (u * u * u);
      };
      absorb(integrate(ft, 0.0, 1.0 / std::sqrt(kRhoTailY), tol));
      return out;
    }
    case DensityKind::rhoS: {
      const double S = std::max(kRhoSTailS, 2.0 * std::sqrt(std::max(2.0, x)));
      auto f = [x](double s) {
        return 2.0 / (M_PI * (1.0 + s * s)) * std::log(std::abs(x - 1.0 - s * s));
      };
      if (x > 1.0 && x < 1.0 + S * S) {
        const double s0 = std::sqrt(x - 1.0);
        absorb(integrate(f, 0.0, s0, tol));
        absorb(integrate(f, s0, S, tol));
      } else {
        absorb(integrate(f, 0.0, S, tol));
      }
      auto ft = [x](double u) {
        return 2.0 / (M_PI * (1.0 + u * u)) *
               std::log(std::abs(x - 1.0 - 1.0 / (u * u)));
      };
      absorb(integrate(ft, 0.0, 1.0 / S, tol));
      return out;
    }
    case DensityKind::rhoP:
    case DensityKind::rhoP_mirrored: {
      auto g = [&d](double y) { return density_eval(d, y); };
      return integrate_log_singular(g, 0.0, 2.0, x, tol);
    }
  }
  return out;
}

double pv_transform(const Density& d, double x) {
  const double tol = 1e-11;
  const int levels = 6;

  auto excised = [&](double eps) -> double {
    double total = 0.0;
    switch (d.kind) {
      case DensityKind::rho: {
        total += integrate([x](double y) { return 1.0 / (x - y); }, 0.0, 0.5, tol).value;
        total += integrate([x](double y) { return rho_eval(y) / (x - y); }, 0.5,
                           x - eps, tol)
                     .value;
        total += integrate([x](double y) { return rho_eval(y) / (x - y); }, x + eps,
                           kRhoTailY, tol)
                     .value;
        total += integrate(
                     [x](double u) {
                       const double y = 1.0 / (u * u);
                       return rho_eval(y) / (x - y) * 2.0 / (u * u * u);
                     },
                     0.0, 1.0 / std::sqrt(kRhoTailY), tol)
                     .value;
        return total;
      }
      case DensityKind::rhoS: {
        const double s_lo = std::sqrt(x - 1.0 - eps);
        const double s_hi = std::sqrt(x - 1.0 + eps);
        auto f = [x](double s) {
          return 2.0 / (M_PI * (1.0 + s * s) * (x - 1.0 - s * s));
        };
        total += integrate(f, 0.0, s_lo, tol).value;
        total += integrate(f, s_hi, kRhoSTailS, tol).value;
        total += integrate(
                     [x](double u) {
                       return u * u /
                              (M_PI * 0.5 * (1.0 + u * u) * ((x - 1.0) * u * u - 1.0));
                     },
                     0.0, 1.0 / kRhoSTailS, tol)
                     .value;
        return total;
      }
      case DensityKind::rhoP:
      case DensityKind::rhoP_mirrored: {
        auto f = [&](double y) { return density_eval(d, y) / (x - y); };
        if (x - eps > 0.0) total += integrate(f, 0.0, x - eps, tol).value;
        if (x + eps < 2.0) total += integrate(f, x + eps, 2.0, tol).value;
        return total;
      }
    }
    return total;
  };

  double margin = 0.0;
  switch (d.kind) {
    case DensityKind::rho:
      if (!(x > 0.5)) throw std::invalid_argument("pv_transform(rho): x > 1/2 required");
      margin = (x - 0.5) / 2.0;
      break;
    case DensityKind::rhoS:
      if (!(x > 1.0)) throw std::invalid_argument("pv_transform(rhoS): x > 1 required");
      margin = (x - 1.0) / 2.0;
      break;
    default:
      if (!(x > 0.0 && x < 2.0)) {
        throw std::invalid_argument("pv_transform(rhoP): 0 < x < 2 required");
      }
      margin = std::min(x, 2.0 - x) / 2.0;
      break;
  }
  const double eps0 = std::min(0.1, margin);

  std::vector<double> xs, ys;
  for (int j = 0; j < levels; ++j) {
    const double eps = eps0 / std::pow(2.0, j);
    xs.push_back(eps);
    ys.push_back(excised(eps));
  }
  return neville_to_zero(xs, ys);
}

double pv_residual(const Density& d, double x) {
  const double pv = pv_transform(d, x);
  const double target =
      (d.kind == DensityKind::rho || d.kind == DensityKind::rhoS) ? 1.0 / x
                                                                  : std::log(x);
  return std::abs(target - pv);
}

namespace {

// int_{1/2}^{inf} rho(y) log(y) dy: curved part plus exact u-tail.
double rho_log_moment_upper(double tol) {
  const double S = std::sqrt(2.0 * kRhoTailY - 1.0);
  double v = integrate(
                 [](double s) {
                   const double y = 0.5 * (s * s + 1.0);
                   return rho_t(s) * s * std::log(y);
                 },
                 0.0, S, tol)
                 .value;
  v += integrate(
           [](double u) {
             const double y = 1.0 / (u * u);
             return rho_eval(y) * std::log(y) * 2.0 / (u * u * u);
           },
           0.0, 1.0 / std::sqrt(kRhoTailY), tol)
           .value;
  return v;
}

}  // namespace

double phi_functional(const Density& d, long n) {
  if (n < 1) throw std::invalid_argument("phi_functional: n >= 1");
  const double tol = 1e-9;
  const double nn = static_cast<double>(n);
  switch (d.kind) {
    case DensityKind::rho: {
      const double upper = rho_log_moment_upper(tol);
      const double i1 =
          integrate_log_singular([](double) { return 1.0; }, 0.0, 0.5, 0.0, tol).value +
          upper;
      const double i2 =
          integrate([](double y) { return log_potential_rho(y); }, 0.0, 0.5, tol).value +
          upper;
      return -nn * nn * std::log(nn) - nn * nn * (2.0 * i1 - i2);
    }
    case DensityKind::rhoS: {
      // I1 = int rhoS log y dy in s-coordinates with exact 1/s tail
      double i1 = integrate(
                      [](double s) {
                        return 2.0 / (M_PI * (1.0 + s * s)) * std::log1p(s * s);
                      },
                      0.0, kRhoSTailS, tol)
                      .value;
      i1 += integrate(
                [](double u) {
                  return 2.0 / (M_PI * (1.0 + u * u)) *
                         (std::log1p(u * u) - 2.0 * std::log(u));
                },
                0.0, 1.0 / kRhoSTailS, tol)
                .value;
      // I2 = int rhoS(x) U(x) dx, U by quadrature on a finite window; in the
      // tail U(y) = log y exactly (stationarity + lambda = 0, which the
      // windowed quadrature reconfirms), so the tail reuses the log kernel.
      const double s_out = 20.0;  // window y <= 401
      Density ds{DensityKind::rhoS};
      double i2 = integrate(
                      [&](double s) {
                        const double y = 1.0 + s * s;
                        return 2.0 / (M_PI * (1.0 + s * s)) *
                               log_potential_quadrature(ds, y).value;
                      },
                      0.0, s_out, 1e-7)
                      .value;
      i2 += integrate(
                [](double u) {
                  const double y = 1.0 / (u * u);
                  return rhoS_eval(y) * std::log(y) * 2.0 / (u * u * u);
                },
                0.0, 1.0 / std::sqrt(1.0 + s_out * s_out), tol)
                .value;
      return -nn * nn * (2.0 * i1 - i2);
    }
    case DensityKind::rhoP:
    case DensityKind::rhoP_mirrored: {
      auto g = [&](double y) { return density_eval(d, y); };
      const double i1 = integrate_log_singular(g, 0.0, 2.0, 0.0, tol).value;
      double i2 = integrate(
                      [&](double y) {
                        return density_eval(d, y) * log_potential_quadrature(d, y).value;
                      },
                      1e-12, 2.0 - 1e-12, 1e-7)
                      .value;
      return -nn * nn * (2.0 * i1 - i2);
    }
  }
  return 0.0;
}

}  // namespace hankel
