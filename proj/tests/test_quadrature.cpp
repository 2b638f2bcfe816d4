#include <cmath>

#include "catch_amalgamated.hpp"
#include "tricomi/quadrature.hpp"
#include "tricomi/specfun.hpp"

using namespace tricomi;
using quad::Integrand;
using quad::IntegrandXc;

TEST_CASE("finite interval basics") {
  auto one = quad::integrate_finite(Integrand([](double) { return 1.0; }),
                                    0.0, 1.0, 1e-12);
  REQUIRE(one.converged);
  CHECK_THAT(one.value, Catch::Matchers::WithinAbs(1.0, 1e-13));
  CHECK(one.n_evals > 0);

  // endpoint-singular: \int_{-1}^1 (1-x^2)^{-1/2} dx = pi
  auto circ = quad::integrate_finite(
      IntegrandXc([](double, double xc) {
        return 1.0 / std::sqrt(xc * (2.0 - xc));
      }),
      -1.0, 1.0, 1e-12);
  REQUIRE(circ.converged);
  CHECK_THAT(circ.value, Catch::Matchers::WithinRel(M_PI, 1e-12));

  // \int_0^1 log(u) e^{-u} du; reference from a level-14 run of the same rule
  auto f = Integrand([](double u) { return std::log(u) * std::exp(-u); });
  auto lo = quad::integrate_finite(f, 0.0, 1.0, 1e-13);
  auto hires = quad::integrate_finite(f, 0.0, 1.0, 1e-15, 14);
  REQUIRE(lo.converged);
  CHECK_THAT(lo.value, Catch::Matchers::WithinRel(hires.value, 1e-12));
  CHECK_THAT(lo.value, Catch::Matchers::WithinRel(-0.7965995992970531, 1e-10));
}

TEST_CASE("half line") {
  auto e1 = quad::integrate_half_line(
      Integrand([](double t) { return std::exp(-t); }), 0.0, 1e-12);
  REQUIRE(e1.converged);
  CHECK_THAT(e1.value, Catch::Matchers::WithinRel(1.0, 1e-12));

  // \int_0^inf (log u)^2 e^{-u} du = gamma^2 + pi^2/6
  auto l2 = quad::integrate_half_line(
      Integrand([](double u) {
        const double lg = std::log(u);
        return lg * lg * std::exp(-u);
      }),
      0.0, 1e-12);
  REQUIRE(l2.converged);
  const double g = specfun::euler_gamma;
  CHECK_THAT(l2.value,
             Catch::Matchers::WithinRel(g * g + M_PI * M_PI / 6.0, 1e-11));

  auto scaled = quad::integrate_half_line(
      Integrand([](double t) { return std::exp(-101.0 * t); }), 0.0, 1e-12);
  REQUIRE(scaled.converged);
  CHECK_THAT(scaled.value, Catch::Matchers::WithinRel(1.0 / 101.0, 1e-11));
}

TEST_CASE("real line") {
  auto gauss = quad::integrate_real_line(
      Integrand([](double x) { return std::exp(-x * x); }), 1e-12);
  REQUIRE(gauss.converged);
  CHECK_THAT(gauss.value, Catch::Matchers::WithinRel(specfun::sqrt_pi, 1e-12));

  // \int x e^{-x^2} (1+erf x)/2 dx = 1/(2 sqrt 2)
  auto ibp = quad::integrate_real_line(
      Integrand([](double x) {
        return x * std::exp(-x * x) * 0.5 * std::erfc(-x);
      }),
      1e-12);
  REQUIRE(ibp.converged);
  CHECK_THAT(ibp.value,
             Catch::Matchers::WithinRel(0.5 / std::sqrt(2.0), 1e-11));

  // \int e^{-x^2} ((1+erf x)/2)^9 dx = sqrt(pi)/10
  auto m9 = quad::integrate_real_line(
      Integrand([](double x) {
        return std::exp(-x * x) * std::pow(0.5 * std::erfc(-x), 9.0);
      }),
      1e-12);
  REQUIRE(m9.converged);
  CHECK_THAT(m9.value,
             Catch::Matchers::WithinRel(specfun::sqrt_pi / 10.0, 1e-11));
}

TEST_CASE("principal value") {
  auto zero = quad::principal_value(Integrand([](double) { return 0.0; }),
                                    0.2, -1.0, 1.0, 1e-12);
  REQUIRE(zero.converged);
  CHECK(zero.value == 0.0);

  // g == 1: PV = log((1-a)/(1+a))
  const double a = 0.4;
  auto unit = quad::principal_value(Integrand([](double) { return 1.0; }), a,
                                    -1.0, 1.0, 1e-12);
  REQUIRE(unit.converged);
  CHECK_THAT(unit.value,
             Catch::Matchers::WithinAbs(std::log((1.0 - a) / (1.0 + a)),
                                        1e-11));

  // g = x (1-x^2)^{-1/2}: PV integral is pi for any pole
  auto ell = quad::principal_value(
      IntegrandXc([](double x, double xc) {
        return x / std::sqrt(xc * (2.0 - xc));
      }),
      0.4, -1.0, 1.0, 1e-11);
  REQUIRE(ell.converged);
  CHECK_THAT(ell.value, Catch::Matchers::WithinRel(M_PI, 1e-9));

  CHECK_THROWS_AS(quad::principal_value(Integrand([](double) { return 1.0; }),
                                        1.5, -1.0, 1.0, 1e-12),
                  std::domain_error);
}

TEST_CASE("PV antisymmetry and consistency") {
  // even g about pole 0 on a symmetric interval -> 0
  auto sym = quad::principal_value(
      Integrand([](double x) { return std::cos(x); }), 0.0, -0.7, 0.7, 1e-12);
  REQUIRE(sym.converged);
  CHECK_THAT(sym.value, Catch::Matchers::WithinAbs(0.0, 1e-11));

  // g(pole) = 0 and smooth: plain quadrature of g/(x-pole) must agree
  const double p = 0.3;
  auto g = [p](double x) { return (x - p) * std::exp(x); };
  auto pv = quad::principal_value(Integrand(g), p, -1.0, 1.0, 1e-12);
  auto plain = quad::integrate_finite(
      Integrand([&](double x) { return g(x) / (x - p); }), -1.0, 1.0, 1e-12);
  REQUIRE(pv.converged);
  REQUIRE(plain.converged);
  CHECK_THAT(pv.value, Catch::Matchers::WithinAbs(plain.value, 1e-11));
}

TEST_CASE("linearity") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double al = 2.5, be = -1.25;
  auto If = quad::integrate_finite(Integrand(f), 0.0, 2.0, 1e-13);
  auto Ig = quad::integrate_finite(Integrand(g), 0.0, 2.0, 1e-13);
  auto Ic = quad::integrate_finite(
      Integrand([&](double x) { return al * f(x) + be * g(x); }), 0.0, 2.0,
      1e-13);
  REQUIRE((If.converged && Ig.converged && Ic.converged));
  CHECK_THAT(Ic.value,
             Catch::Matchers::WithinAbs(al * If.value + be * Ig.value,
                                        10.0 * (If.err_estimate +
                                                Ig.err_estimate +
                                                Ic.err_estimate) +
                                            1e-13));
}

TEST_CASE("refinement monotonicity") {
  auto f = Integrand([](double x) { return std::exp(x) * std::cos(5.0 * x); });
  double prev = 1e300;
  for (int cap = 4; cap <= 10; ++cap) {
    auto r = quad::integrate_finite(f, 0.0, 1.0, 1e-300, cap);
    CHECK(r.err_estimate <= prev * (1.0 + 1e-12));
    prev = r.err_estimate;
  }
}

TEST_CASE("declarative integrate dispatch") {
  quad::IntegrandSpec spec;
  spec.integrand = [](double x) { return std::exp(-x * x); };
  spec.domain = quad::DomainKind::full_line;
  auto r = quad::integrate(spec, 1e-12);
  REQUIRE(r.converged);
  CHECK_THAT(r.value, Catch::Matchers::WithinRel(specfun::sqrt_pi, 1e-11));

  spec.domain = quad::DomainKind::finite;
  spec.lo = -1.0;
  spec.hi = 1.0;
  spec.interior_pole = 0.25;
  spec.integrand = [](double) { return 1.0; };
  auto pv = quad::integrate(spec, 1e-12);
  REQUIRE(pv.converged);
  CHECK_THAT(pv.value,
             Catch::Matchers::WithinAbs(std::log(0.75 / 1.25), 1e-11));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(quad::integrate_finite(
                      Integrand([](double) { return 1.0; }), 1.0, 0.0, 1e-12),
                  std::domain_error);
  CHECK_THROWS_AS(quad::integrate_finite(
                      Integrand([](double) { return 1.0; }), 0.0, 1.0, -1.0),
                  std::domain_error);
}
