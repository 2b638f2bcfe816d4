#pragma once

// Double-exponential quadrature engines: finite-interval tanh-sinh (tolerant
// of algebraic endpoint singularities), exp-sinh for half lines, a split
// full-line rule, and Cauchy principal values by singularity subtraction.
//
// Integrands may optionally take a second argument xc = distance to the
// nearest endpoint, computed without cancellation; use it for integrands
// singular at an endpoint, e.g. (1-x^2)^{-mu} = (xc*(2-xc))^{-mu} on (-1,1).

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tricomi::quad {

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute
  std::int64_t n_evals = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;
using IntegrandXc = std::function<double(double, double)>;  // f(x, dist-to-endpoint)

inline constexpr int default_max_level = 12;

namespace detail {

inline bool usable(double v) { return std::isfinite(v); }

struct LevelSum {
  double sum = 0.0;
  std::int64_t evals = 0;
};

inline constexpr double finite_t_max = 6.0;
inline constexpr double half_line_t_max = 6.8;

// One tanh-sinh level over (lo, hi).  Nodes sit at fraction
// v = sigmoid(pi*sinh(k h)) of the interval; v and 1-v are formed from exp
// directly so offsets from either endpoint carry full precision.  The
// callback receives (x, d_lo, d_hi) with d_* the distances to the endpoints.
template <class F3>
LevelSum tanh_sinh_level(F3&& f, double lo, double hi, double h,
                         bool odd_only) {
  LevelSum out;
  const double len = hi - lo;
  const std::int64_t step = odd_only ? 2 : 1;
  for (std::int64_t k = odd_only ? 1 : 0;; k += step) {
    const double t = k * h;
    if (t > finite_t_max) break;
    const double u = M_PI * std::sinh(t);  // = 2 * (pi/2 sinh t)
    const double e = std::exp(-u);
    const double v = 1.0 / (1.0 + e);   // fraction from lower endpoint, >= 1/2
    const double vc = e / (1.0 + e);    // 1 - v, accurate near 0
    const double w = M_PI_2 * v * vc * std::cosh(t) * 2.0;
    if (w == 0.0 || vc == 0.0) break;
    {
      // x may round to hi here while len*vc still carries the true offset;
      // singular integrands must use the distance arguments, and non-finite
      // values from plain integrands evaluated at a rounded endpoint are
      // dropped below.
      const double fv = f(lo + len * v, len * v, len * vc);
      ++out.evals;
      if (usable(fv)) out.sum += w * fv;
    }
    if (k != 0) {  // mirrored node below the midpoint
      const double fv = f(lo + len * vc, len * vc, len * v);
      ++out.evals;
      if (usable(fv)) out.sum += w * fv;
    }
  }
  out.sum *= len;
  return out;
}

// One exp-sinh level on (lo, inf): x = lo + exp(pi/2 sinh t); callback gets
// (x, offset from lo).
template <class F2>
LevelSum exp_sinh_level(F2&& f, double lo, double h, bool odd_only) {
  LevelSum out;
  const std::int64_t step = odd_only ? 2 : 1;
  for (std::int64_t k = odd_only ? 1 : 0;; k += step) {
    const double t = k * h;
    if (t > half_line_t_max) break;
    for (int sign = 0; sign < (k == 0 ? 1 : 2); ++sign) {
      const double ts = sign == 0 ? t : -t;
      const double u = M_PI_2 * std::sinh(ts);
      if (u > 700.0 || u < -700.0) continue;
      const double ex = std::exp(u);
      const double w = ex * M_PI_2 * std::cosh(ts);
      const double x = lo + ex;
      if (!(x > lo) || !std::isfinite(x)) continue;
      const double fv = f(x, ex);
      ++out.evals;
      if (usable(fv)) out.sum += w * fv;
    }
  }
  return out;
}

// Level-doubling driver; error estimated as |S_k - S_{k-1}|, convergence on
// the mixed criterion err <= max(tol*|S|, tol).
template <class Level>
QuadratureResult refine(Level&& level_sum, double tol, int max_level) {
  if (!(tol > 0.0)) throw std::domain_error("quadrature: tol must be > 0");
  QuadratureResult res;
  double h = 1.0;
  LevelSum l0 = level_sum(h, false);
  res.n_evals += l0.evals;
  double S = l0.sum * h;
  double err = std::numeric_limits<double>::infinity();
  for (int lev = 1; lev <= max_level; ++lev) {
    h *= 0.5;
    LevelSum lk = level_sum(h, true);
    res.n_evals += lk.evals;
    const double S_new = 0.5 * S + lk.sum * h;
    const double err_new = std::fabs(S_new - S);
    err = std::min(err, err_new);
    S = S_new;
    if (lev >= 3 && err_new <= std::max(tol * std::fabs(S), tol)) {
      res.value = S;
      res.err_estimate = err_new;
      res.converged = true;
      return res;
    }
  }
  res.value = S;
  res.err_estimate = err;
  res.converged = false;
  return res;
}

template <class F3>
QuadratureResult integrate_finite3(F3&& f, double lo, double hi, double tol,
                                   int max_level) {
  if (!(lo < hi)) throw std::domain_error("integrate_finite: requires lo < hi");
  return refine(
      [&](double h, bool odd) { return tanh_sinh_level(f, lo, hi, h, odd); },
      tol, max_level);
}

}  // namespace detail

inline QuadratureResult integrate_finite(const IntegrandXc& f, double lo,
                                         double hi, double tol,
                                         int max_level = default_max_level) {
  return detail::integrate_finite3(
      [&f](double x, double d_lo, double d_hi) {
        return f(x, std::min(d_lo, d_hi));
      },
      lo, hi, tol, max_level);
}

inline QuadratureResult integrate_finite(const Integrand& f, double lo,
                                         double hi, double tol,
                                         int max_level = default_max_level) {
  return detail::integrate_finite3(
      [&f](double x, double, double) { return f(x); }, lo, hi, tol, max_level);
}

inline QuadratureResult integrate_half_line(
    const Integrand& f, double lo, double tol,
    int max_level = default_max_level) {
  return detail::refine(
      [&](double h, bool odd) {
        return detail::exp_sinh_level([&f](double x, double) { return f(x); },
                                      lo, h, odd);
      },
      tol, max_level);
}

// Full-line integration, split at 0; each half handled by exp-sinh.
// Integrand evaluations that underflow to 0 are permitted and counted.
inline QuadratureResult integrate_real_line(
    const Integrand& f, double tol, int max_level = default_max_level) {
  QuadratureResult pos = integrate_half_line(f, 0.0, 0.5 * tol, max_level);
  QuadratureResult neg = integrate_half_line(
      [&f](double x) { return f(-x); }, 0.0, 0.5 * tol, max_level);
  QuadratureResult res;
  res.value = pos.value + neg.value;
  res.err_estimate = pos.err_estimate + neg.err_estimate;
  res.n_evals = pos.n_evals + neg.n_evals;
  res.converged = pos.converged && neg.converged;
  return res;
}

// PV \int_lo^hi g(x)/(x - pole) dx by singularity subtraction:
//   \int (g(x)-g(pole))/(x-pole) dx + g(pole) log((hi-pole)/(pole-lo)).
// Within |x - pole| < delta, where the quotient loses precision to
// cancellation, it is replaced by the quadratic model g'(p) + (x-p) g''(p)/2
// built from the 3-point central stencil at spacing delta = (hi-lo)*1e-5;
// the model matches the true quotient exactly at both guard boundaries, so
// the subtracted integrand stays continuous there.  The integral is split at
// the pole so tanh-sinh node clustering resolves the subtraction
// neighbourhood, and the signed distance to the pole is taken from the
// endpoint offsets, which are exact.
inline QuadratureResult principal_value(const IntegrandXc& g, double pole,
                                        double lo, double hi, double tol,
                                        int max_level = default_max_level) {
  if (!(lo < pole && pole < hi))
    throw std::domain_error("principal_value: pole must lie inside (lo, hi)");
  const double delta = (hi - lo) * 1e-5;
  const double gp = g(pole, std::min(pole - lo, hi - pole));
  const double g_plus = g(pole + delta, std::min(pole + delta - lo, hi - pole - delta));
  const double g_minus = g(pole - delta, std::min(pole - delta - lo, hi - pole + delta));
  const double d1 = (g_plus - g_minus) / (2.0 * delta);
  const double half_d2 = (g_plus - 2.0 * gp + g_minus) / (2.0 * delta * delta);
  // dx = signed x - pole, exact (from the endpoint offsets of each piece)
  auto subtracted = [&](double x, double dx, double xc_g) {
    if (std::fabs(dx) < delta) return d1 + half_d2 * dx;
    return (g(x, xc_g) - gp) / dx;
  };
  // In the left piece only d_lo can be a small endpoint offset of the
  // original interval; mirrored for the right piece.
  QuadratureResult left = detail::integrate_finite3(
      [&](double x, double d_lo, double d_hi) {
        return subtracted(x, -d_hi, std::min(d_lo, hi - x));
      },
      lo, pole, 0.5 * tol, max_level);
  QuadratureResult right = detail::integrate_finite3(
      [&](double x, double d_lo, double d_hi) {
        return subtracted(x, d_lo, std::min(x - lo, d_hi));
      },
      pole, hi, 0.5 * tol, max_level);
  QuadratureResult res;
  res.value = left.value + right.value +
              gp * std::log((hi - pole) / (pole - lo));
  res.err_estimate = left.err_estimate + right.err_estimate;
  res.n_evals = left.n_evals + right.n_evals + 3;
  res.converged = left.converged && right.converged;
  return res;
}

inline QuadratureResult principal_value(const Integrand& g, double pole,
                                        double lo, double hi, double tol,
                                        int max_level = default_max_level) {
  return principal_value(
      IntegrandXc([&g](double x, double) { return g(x); }), pole, lo, hi, tol,
      max_level);
}

// Declarative integrand description mirroring the operations above.
enum class DomainKind { finite, half_line, full_line };

struct IntegrandSpec {
  Integrand integrand;
  DomainKind domain = DomainKind::finite;
  double lo = 0.0;
  double hi = 0.0;                       // finite only
  std::optional<double> interior_pole;   // PV integration when set
};

inline QuadratureResult integrate(const IntegrandSpec& spec, double tol,
                                  int max_level = default_max_level) {
  switch (spec.domain) {
    case DomainKind::finite:
      if (spec.interior_pole)
        return principal_value(spec.integrand, *spec.interior_pole, spec.lo,
                               spec.hi, tol, max_level);
      return integrate_finite(spec.integrand, spec.lo, spec.hi, tol,
                              max_level);
    case DomainKind::half_line:
      return integrate_half_line(spec.integrand, spec.lo, tol, max_level);
    case DomainKind::full_line:
      return integrate_real_line(spec.integrand, tol, max_level);
  }
  throw std::logic_error("integrate: bad domain");
}

}  // namespace tricomi::quad
