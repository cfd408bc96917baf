// support.hpp — test-only helpers, independent of the library's numerics.
#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace testsup {

// Independent adaptive Simpson integrator (oracle for quadrature checks).
template <typename F, typename T = std::invoke_result_t<F, double>>
T simpson_rec(F&& f, double a, double b, T fa, T fm, T fb, T whole, double tol,
              int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  T flm = f(lm), frm = f(rm);
  T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  T delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
auto adaptive_simpson(F&& f, double a, double b, double tol = 1e-12,
                      int depth = 48) {
  using T = std::invoke_result_t<F, double>;
  T fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace testsup
