// errors.hpp — exception taxonomy; non-convergent fits return flagged results instead
#pragma once

#include <stdexcept>
#include <string>

namespace messkit {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: shapes, parameter ranges, schema violations.
class validation_error : public error {
 public:
  using error::error;
};

// Evaluation outside a tabulated domain; no extrapolation is ever performed.
class out_of_domain_error : public error {
 public:
  using error::error;
};

// A quadrature or interpolation budget was exceeded; carries the estimate.
class accuracy_error : public error {
 public:
  accuracy_error(const std::string& what, double estimate)
      : error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// Ill-conditioned linear algebra: real-axis poles, near-singular transforms.
class conditioning_error : public error {
 public:
  using error::error;
};

// A decomposition produced no usable modes or an unfactorizable matrix.
class decomposition_error : public error {
 public:
  using error::error;
};

// A generator form precondition failed; message names the condition.
class structural_error : public error {
 public:
  using error::error;
};

// Extended-space dimension guard; message carries a sizing hint.
class dimension_error : public error {
 public:
  using error::error;
};

// Norm watchdog tripped during propagation.
class instability_error : public error {
 public:
  using error::error;
};

}  // namespace messkit
