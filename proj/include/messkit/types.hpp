// types.hpp — shared scalar/matrix aliases and small numeric helpers
#pragma once

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace messkit {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cd iu{0.0, 1.0};

// beta = +infinity encodes T = 0 exactly (never a large float stand-in).
inline constexpr double beta_infinity = std::numeric_limits<double>::infinity();

inline bool is_zero_temperature(double beta) { return std::isinf(beta); }

inline double sup_norm(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace messkit
