#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "messkit/bath.hpp"
#include "messkit/errors.hpp"
#include "support.hpp"

using namespace messkit;

namespace {

// 200-point log-linear grid over the positive axis (shared by balance tests).
std::vector<double> balance_grid(double scale) {
  std::vector<double> w;
  for (int i = 0; i < 100; ++i) w.push_back(scale * std::pow(10.0, -6.0 + 6.0 * i / 99.0));
  for (int i = 1; i <= 100; ++i) w.push_back(scale * (0.05 + 10.0 * i / 100.0));
  return w;
}

std::vector<NoisePower> builtin_noise_powers() {
  std::vector<NoisePower> out;
  out.emplace_back(SpectralDensity::ohmic(0.5, 1.0), 1.0);
  out.emplace_back(SpectralDensity::ohmic(0.1, 5.0), 2.5);
  out.emplace_back(SpectralDensity::subohmic(0.05, 0.5, 1.0), 4.0);
  out.emplace_back(SpectralDensity::brownian(1.0, 1.0, 0.5), 0.7);
  out.emplace_back(SpectralDensity::lorentzian_sum({{0.2, 1.0, 0.1}}), 3.0);
  out.emplace_back(SpectralDensity::ohmic(0.3, 2.0), beta_infinity);
  return out;
}

}  // namespace

TEST_CASE("spectral density closed forms and antisymmetry") {
  auto ohm = SpectralDensity::ohmic(1.0, 1.0);
  CHECK(ohm(0.0) == 0.0);
  CHECK(ohm(1.0) == doctest::Approx(0.5 * pi * std::exp(-1.0)).epsilon(1e-14));

  auto br = SpectralDensity::brownian(1.0, 1.0, 0.5);
  CHECK(br(1.0) == doctest::Approx(1.0).epsilon(1e-14));

  // Subohmic power law: J(4w)/J(w) -> 2 below the cutoff.
  auto sub = SpectralDensity::subohmic(0.05, 0.5, 1.0);
  const double w = 1e-7;
  CHECK(sub(4 * w) / sub(w) == doctest::Approx(2.0).epsilon(1e-5));

  for (const auto& s : builtin_noise_powers()) {
    const auto& j = s.density();
    for (double x : balance_grid(j.scale())) {
      CHECK(j(-x) == -j(x));  // exact by construction
      CHECK(j(x) >= 0.0);
    }
  }
}

TEST_CASE("tabulated density: interpolation, comments, no extrapolation") {
  const char* path = "tab_density_test.dat";
  {
    std::ofstream f(path);
    f << "# omega  J(omega)\n";
    f << "0.0, 0.0\n0.5, 0.4\n1.0 0.9\n2.0\t0.3\n4.0 0.05\n";
  }
  auto tab = SpectralDensity::from_file(path);
  CHECK(tab(0.5) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(tab(1.0) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(tab(-0.5) == doctest::Approx(-0.4).epsilon(1e-14));
  CHECK(tab(1.3) > 0.0);
  CHECK_THROWS_AS(tab(5.0), out_of_domain_error);
  CHECK_THROWS_AS(SpectralDensity::tabulated({0.0, 0.0}, {0.0, 1.0}), validation_error);
  std::remove(path);
}

TEST_CASE("noise power: Bose limit, zero temperature, detailed balance") {
  // ohmic J ~ (pi/2) alpha w near zero, so S(w -> 0) = (pi/2) alpha / beta
  const double alpha = 0.7, beta = 2.0;
  NoisePower s(SpectralDensity::ohmic(alpha, 1.0), beta);
  CHECK(s(1e-9) == doctest::Approx(0.5 * pi * alpha / beta).epsilon(1e-6));
  CHECK(s(0.0) == doctest::Approx(0.5 * pi * alpha / beta).epsilon(1e-6));

  // T = 0: S(w) = theta(w) J(w)
  NoisePower s0(SpectralDensity::ohmic(alpha, 1.0), beta_infinity);
  CHECK(s0(-1.0) == 0.0);
  CHECK(s0(2.0) == s0.density()(2.0));

  CHECK_THROWS_AS(NoisePower(SpectralDensity::ohmic(1.0, 1.0), -1.0), validation_error);

  // Detailed balance |S(-w) - exp(-beta w) S(w)| <= 1e-12 max(1, |S(w)|)
  for (const auto& sp : builtin_noise_powers()) {
    for (double w : balance_grid(sp.density().scale())) {
      const double lhs = sp(-w);
      const double rhs = is_zero_temperature(sp.beta()) ? 0.0 : std::exp(-sp.beta() * w) * sp(w);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(sp(w))));
    }
  }
}

TEST_CASE("correlation: lorentzian closed form and hermitian symmetry") {
  NoisePower s(SpectralDensity::lorentzian_sum({{0.2, 1.0, 0.1}}), beta_infinity);
  auto c = CorrelationFunction::closed_form(s);
  for (double t : {0.0, 0.3, 1.7, 6.0}) {
    cd expect = 0.04 * std::exp(cd(-0.1 * t, -1.0 * t));
    CHECK(testsup::close(c(t), expect, 1e-15));
    CHECK(std::abs(c(-t) - std::conj(c(t))) == 0.0);  // structural
  }
  CHECK(c.c0() == doctest::Approx(0.04).epsilon(1e-14));

  CHECK_THROWS_AS(
      CorrelationFunction::closed_form(NoisePower(SpectralDensity::lorentzian_sum({{0.2, 1.0, 0.1}}), 1.0)),
      validation_error);
}

TEST_CASE("correlation quadrature matches an independent integrator") {
  // ohmic alpha = 0.1, omega_c = 5, beta = 1: C(0) vs adaptive Simpson
  NoisePower s(SpectralDensity::ohmic(0.1, 5.0), 1.0);
  auto c = CorrelationFunction::with_quadrature(s);
  auto integrand = [&](double w) { return s(w); };
  const double ref =
      (testsup::adaptive_simpson(integrand, -60.0, -1e-9, 1e-14) +
       testsup::adaptive_simpson(integrand, 1e-9, 150.0, 1e-14)) /
      (2.0 * pi);
  CHECK(std::abs(c.c0() - ref) <= 1e-8 * std::abs(ref));

  // t > 0 as well, against the same oracle with the oscillatory factor
  for (double t : {0.4, 1.3}) {
    auto osc = [&](double w) { return s(w) * std::exp(cd(0.0, -w * t)); };
    cd reft = (testsup::adaptive_simpson(osc, -60.0, -1e-9, 1e-14) +
               testsup::adaptive_simpson(osc, 1e-9, 150.0, 1e-14)) /
              (2.0 * pi);
    CHECK(std::abs(c(t) - reft) <= 1e-7 * std::abs(ref));
  }
}

TEST_CASE("correlation quadrature: grid-doubling convergence and positivity") {
  for (const auto& s : builtin_noise_powers()) {
    if (s.density().kind() == SpectralKind::lorentzian_sum) continue;  // slow tails
    auto c = CorrelationFunction::with_quadrature(s);
    GridSpec dense;
    dense.panels_per_decade = 4;
    dense.gl_order = 24;
    auto cd2 = CorrelationFunction::with_quadrature(s, dense);
    const double tmax = c.ten_decay_times();
    const double c0 = std::abs(c.c0());
    for (int i = 0; i <= 20; ++i) {
      const double t = tmax * i / 20.0;
      CHECK(std::abs(c(t) - cd2(t)) <= 1e-6 * c0);
      CHECK(std::abs(c(t)) <= c0 * (1.0 + 1e-9));  // |C(t)| <= C(0)
    }
    CHECK(c.c0() >= 0.0);
  }
}

TEST_CASE("ten_decay_times: subohmic zero-T window is near 100 / omega_c") {
  NoisePower s(SpectralDensity::subohmic(0.05, 0.5, 1.0), beta_infinity);
  auto c = CorrelationFunction::with_quadrature(s);
  const double t10 = c.ten_decay_times();
  CHECK(t10 > 20.0);
  CHECK(t10 < 400.0);
}
