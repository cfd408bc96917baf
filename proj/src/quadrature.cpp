#include "messkit/quadrature.hpp"

#include <cmath>

namespace messkit::quad {

Rule gauss_legendre(int n) {
  if (n < 1) throw validation_error("gauss_legendre: order must be >= 1");
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

void append_panel(std::vector<double>& x, std::vector<double>& w, double a,
                  double b, const Rule& rule) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    x.push_back(c + h * rule.x[i]);
    w.push_back(h * rule.w[i]);
  }
}

}  // namespace messkit::quad
