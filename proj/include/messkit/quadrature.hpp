// quadrature.hpp — Gauss-Legendre panels and adaptive Gauss-Kronrod integration
#pragma once

#include <cmath>
#include <functional>
#include <type_traits>
#include <vector>

#include "messkit/errors.hpp"
#include "messkit/types.hpp"

namespace messkit::quad {

struct Rule {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

// Gauss-Legendre rule on [-1, 1], Newton iteration from Chebyshev guesses.
Rule gauss_legendre(int n);

// Append an n-point Gauss-Legendre panel over [a, b] to (x, w).
void append_panel(std::vector<double>& x, std::vector<double>& w, double a,
                  double b, const Rule& rule);

namespace detail {
// QUADPACK (G7, K15) constants on [0, 1] half-range.
inline constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double wgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double wg[4] = {0.1294849661688697, 0.2797053914892767,
                                 0.3818300505051189, 0.4179591836734694};

template <typename F>
auto gk15(F&& f, double a, double b, double& err) {
  using T = std::invoke_result_t<F, double>;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T gauss{}, kron{};
  for (int i = 0; i < 8; ++i) {
    const double dx = h * xgk[i];
    T fsum = (i == 7) ? f(c) : T(f(c - dx) + f(c + dx));
    kron += wgk[i] * fsum;
    if (i % 2 == 1) gauss += wg[i / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  err = std::abs(kron - gauss);
  return kron;
}
}  // namespace detail

// Adaptive bisection on top of (G7, K15). Throws accuracy_error when the
// local error estimate cannot be brought below tolerance.
template <typename F>
auto adaptive(F&& f, double a, double b, double abs_tol = 1e-12,
              double rel_tol = 1e-10, int max_depth = 40) {
  using T = std::invoke_result_t<F, double>;
  struct Seg {
    double a, b;
    int depth;
  };
  std::vector<Seg> stack{{a, b, 0}};
  T total{};
  double worst = 0.0;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    double err = 0.0;
    T val = detail::gk15(f, s.a, s.b, err);
    const double tol_here =
        std::max(abs_tol, rel_tol * std::abs(val)) *
        std::max(1e-3, (s.b - s.a) / (b - a));
    if (err <= tol_here || s.depth >= max_depth) {
      if (err > tol_here) worst = std::max(worst, err);
      total += val;
    } else {
      const double m = 0.5 * (s.a + s.b);
      stack.push_back({s.a, m, s.depth + 1});
      stack.push_back({m, s.b, s.depth + 1});
    }
  }
  if (worst > std::max(abs_tol, rel_tol * std::abs(total)) * 10) {
    throw accuracy_error("adaptive quadrature did not converge", worst);
  }
  return total;
}

}  // namespace messkit::quad
