#include "hankel/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hankel/special.hpp"

namespace hankel {
namespace {

// Gaussian elimination with partial pivoting on an augmented system, in mpfr.
// Throws on a vanishing pivot (rank-deficient fit system).
std::vector<Real> solve_dense(std::vector<std::vector<Real>>& a,
                              std::vector<Real>& b) {
  const size_t k = b.size();
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t i = col + 1; i < k; ++i) {
      if (mpfr_cmpabs(a[i][col].raw(), a[piv][col].raw()) > 0) piv = i;
    }
    if (a[piv][col].is_zero()) {
      throw std::runtime_error("fit_inverse_series: rank-deficient system");
    }
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t i = col + 1; i < k; ++i) {
      Real f = a[i][col] / a[col][col];
      for (size_t j = col; j < k; ++j) a[i][j] = a[i][j] - f * a[col][j];
      b[i] = b[i] - f * b[col];
    }
  }
  std::vector<Real> x(k);
  for (size_t i = k; i-- > 0;) {
    Real s = b[i];
    for (size_t j = i + 1; j < k; ++j) s = s - a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

Real u_of(long n, InvVariable v, mpfr_prec_t bits) {
  Real one = Real::from_long(1, bits);
  long den = v == InvVariable::inv_2n_plus_1 ? 2 * n + 1 : 2 * n;
  return one / den;
}

}  // namespace

FitResult fit_inverse_series(const std::vector<FitSample>& samples,
                             InvVariable variable, int order) {
  const size_t k = static_cast<size_t>(order);
  if (order < 1 || samples.size() < k) {
    throw std::invalid_argument("fit_inverse_series: need at least K samples");
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].n == samples[j].n) {
        throw std::invalid_argument("fit_inverse_series: duplicate sample n");
      }
    }
  }
  mpfr_prec_t bits = bits_for_digits(60);
  for (const auto& s : samples) bits = std::max(bits, s.y.prec());

  // Design matrix rows (u, u^2, ..., u^K).
  const size_t m = samples.size();
  std::vector<std::vector<Real>> v(m, std::vector<Real>(k, Real(bits)));
  for (size_t i = 0; i < m; ++i) {
    Real u = u_of(samples[i].n, variable, bits);
    Real p = u;
    for (size_t j = 0; j < k; ++j) {
      v[i][j] = p;
      p = p * u;
    }
  }

  std::vector<std::vector<Real>> a(k, std::vector<Real>(k, Real(bits)));
  std::vector<Real> b(k, Real(bits));
  if (m == k) {
    for (size_t i = 0; i < k; ++i) {
      a[i] = v[i];
      b[i] = samples[i].y;
    }
  } else {  // normal equations V^T V c = V^T y
    for (size_t p = 0; p < k; ++p) {
      for (size_t q = 0; q < k; ++q) {
        Real s(bits);
        for (size_t i = 0; i < m; ++i) s = s + v[i][p] * v[i][q];
        a[p][q] = s;
      }
      Real s(bits);
      for (size_t i = 0; i < m; ++i) s = s + v[i][p] * samples[i].y;
      b[p] = s;
    }
  }
  std::vector<Real> c = solve_dense(a, b);

  FitResult out;
  out.variable = variable;
  out.n_min = samples.front().n;
  out.n_max = samples.front().n;
  for (const auto& s : samples) {
    out.n_min = std::min(out.n_min, s.n);
    out.n_max = std::max(out.n_max, s.n);
  }
  out.coefficients.reserve(k);
  for (const auto& ci : c) out.coefficients.push_back(ci.to_double());
  double ss = 0.0;
  for (size_t i = 0; i < m; ++i) {
    Real fit(bits);
    for (size_t j = 0; j < k; ++j) fit = fit + v[i][j] * c[j];
    double r = (samples[i].y - fit).to_double();
    ss += r * r;
  }
  out.residual_norm = std::sqrt(ss / static_cast<double>(m));
  return out;
}

ScalingFit zagier_scaling(const std::vector<HankelResult>& values, int kind) {
  if (kind != 0 && kind != 1) throw std::invalid_argument("zagier_scaling: kind is 0 or 1");
  ScalingFit out;
  out.kind = kind;

  struct Pt {
    long n;
    double v2;  // 1/(2n+1)^2 or 1/(2n)^2
    Real a;
  };
  std::vector<Pt> pts;
  for (const auto& h : values) {
    if (h.r != (kind == 0 ? 0 : 1)) continue;
    const mpfr_prec_t bits = h.value.value.prec();
    Real e32 = exp(Real::from_double(1.5, bits));
    long n = kind == 0 ? h.n : h.n + 1;  // kind 1: H_{n-1}^(1) indexing
    long base_int = kind == 0 ? 2 * n + 1 : 2 * n;
    Real base = Real::from_long(base_int, bits) / e32;
    // exponent: (n+1/2)^2 = (2n+1)^2/4 for kind 0; n^2 - 3/4 for kind 1
    Real expo = kind == 0
                    ? Real::from_long((2 * n + 1) * (2 * n + 1), bits) / 4
                    : Real::from_long(4 * n * n - 3, bits) / 4;
    Real a = h.value.value * pow(base, expo);
    double u = 1.0 / static_cast<double>(base_int);
    pts.push_back(Pt{n, u * u, a});
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.n < b.n; });
  if (pts.empty()) throw std::invalid_argument("zagier_scaling: no matching results");

  for (const auto& p : pts) out.a_table.emplace_back(p.n, p.a.to_double());

  if (pts.size() < 3) {
    out.estimate = pts.back().a.to_double();
    out.extrapolated = false;
    return out;
  }

  // Neville extrapolation to v = 0 in v = u^2 over the last <= 10 samples.
  size_t take = std::min<size_t>(10, pts.size());
  std::vector<Real> ys;
  std::vector<double> xs;
  for (size_t i = pts.size() - take; i < pts.size(); ++i) {
    ys.push_back(pts[i].a);
    xs.push_back(pts[i].v2);
  }
  const mpfr_prec_t bits = ys.front().prec();
  for (size_t lvl = 1; lvl < take; ++lvl) {
    for (size_t i = 0; i + lvl < take; ++i) {
      Real xi = Real::from_double(xs[i], bits);
      Real xk = Real::from_double(xs[i + lvl], bits);
      ys[i] = (xk * ys[i] - xi * ys[i + 1]) / (xk - xi);
    }
  }
  out.estimate = ys[0].to_double();
  out.extrapolated = true;
  return out;
}

ScalingConstants scaling_constants(const ScalingFit& kind0, const ScalingFit& kind1) {
  ScalingConstants c;
  c.A0_estimate = kind0.estimate;
  c.A1_estimate = kind1.estimate;
  c.ratio_A1_over_A0 = kind1.estimate / kind0.estimate;
  return c;
}

std::vector<std::pair<long, double>> leading_law_residual(
    const std::vector<HankelResult>& values) {
  std::vector<std::pair<long, double>> out;
  for (const auto& h : values) {
    if (h.r != 0) continue;
    double ln_h = log(abs(h.value.value)).to_double();
    double n = static_cast<double>(h.n);
    out.emplace_back(h.n, ln_h + n * n * (std::log(2.0 * n) - 1.5));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigReal selberg_exact_log(long n, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("selberg_exact_log: n >= 1");
  const mpfr_prec_t bits = bits_for_digits(ctx.digits + ctx.guard_digits + 10);
  Real acc(bits);
  mpfr_t x, t;
  mpfr_init2(x, bits);
  mpfr_init2(t, bits);
  auto add_lngamma = [&](long arg, long mult) {
    mpfr_set_si(x, arg, MPFR_RNDN);
    mpfr_lngamma(t, x, MPFR_RNDN);
    mpfr_mul_si(t, t, mult, MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), t, MPFR_RNDN);
  };
  for (long j = 1; j <= n; ++j) {
    add_lngamma(j, 2);
    add_lngamma(j + 1, 1);
    add_lngamma(n + j, -1);
  }
  mpfr_clear(x);
  mpfr_clear(t);
  return BigReal(acc.rounded_to(ctx.bits()), ctx.digits);
}

BigReal selberg_exact_log_barnes(long n, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("selberg_exact_log_barnes: n >= 1");
  PrecisionContext wide = ctx;
  wide.guard_digits += 10;
  Real v = log_barnes_g(n + 1, wide).value * 3 + log_barnes_g(n + 2, wide).value -
           log_barnes_g(2 * n + 1, wide).value;
  return BigReal(v.rounded_to(ctx.bits()), ctx.digits);
}

double selberg_asymptotic_log(long n) {
  if (n < 1) throw std::invalid_argument("selberg_asymptotic_log: n >= 1");
  const double nn = static_cast<double>(n);
  return -2.0 * std::log(2.0) * nn * nn + (std::log(2.0 * M_PI * nn) - 1.0) * nn;
}

double barnes_asymptotic_log(double z) {
  if (z < 1.0) throw std::invalid_argument("barnes_asymptotic_log: z >= 1");
  return z * z * (0.5 * std::log(z) - 0.75) + 0.5 * std::log(2.0 * M_PI) * z -
         std::log(z) / 12.0;
}

}  // namespace hankel
