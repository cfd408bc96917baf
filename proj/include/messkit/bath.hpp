// bath.hpp — spectral densities, thermal noise power, bath correlation functions.
// These are the ground truth every mode decomposition is measured against.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "messkit/types.hpp"

namespace messkit {

enum class SpectralKind {
  ohmic_exponential,
  subohmic_powerlaw,
  brownian,
  lorentzian_sum,
  tabulated,
};

struct LorentzianTerm {
  double g = 0.0;      // coupling amplitude, S contribution 2*gamma*g^2 / ((w-omega)^2 + gamma^2)
  double omega = 0.0;  // resonance frequency
  double gamma = 0.0;  // half width
};

// Antisymmetric spectral density J(w). All kinds evaluate on |w| and apply
// the sign, so J(-w) = -J(w) holds exactly and J(0) = 0.
class SpectralDensity {
 public:
  // (Sub)ohmic with exponential cutoff. Normalization fixed as
  //   J(w) = (pi/2) * alpha * w^s * omega_c^(1-s) * exp(-w/omega_c),
  // comparisons against plotted spectra in the literature are qualitative.
  static SpectralDensity ohmic(double alpha, double omega_c);
  static SpectralDensity subohmic(double alpha, double s, double omega_c);

  // Brownian (damped-oscillator) density 2 c0^2 gamma0 w / ((w^2-w0^2)^2 + 4 gamma0^2 w^2).
  static SpectralDensity brownian(double c0, double omega0, double gamma0);

  // Sum of full-line Lorentzians in S; used for cavity-like narrow resonances.
  static SpectralDensity lorentzian_sum(std::vector<LorentzianTerm> terms);

  // Tabulated samples on a strictly increasing positive grid; monotone cubic
  // interpolation, never extrapolated.
  static SpectralDensity tabulated(std::vector<double> omega, std::vector<double> j);
  static SpectralDensity from_file(const std::string& path);

  double operator()(double omega) const;

  SpectralKind kind() const { return kind_; }
  // Characteristic positive-frequency scale used to size quadrature grids.
  double scale() const;
  // dJ/dw at 0+ by one-sided finite difference (may be large for s < 1).
  double slope_at_zero() const;

  double alpha() const { return alpha_; }
  double exponent() const { return s_; }
  double cutoff() const { return omega_c_; }
  double brownian_c0() const { return c0_; }
  double brownian_omega0() const { return omega0_; }
  double brownian_gamma0() const { return gamma0_; }
  const std::vector<LorentzianTerm>& lorentzians() const { return terms_; }

 private:
  SpectralDensity() = default;
  double positive_part(double omega) const;  // J on w > 0

  SpectralKind kind_ = SpectralKind::ohmic_exponential;
  double alpha_ = 0.0, s_ = 1.0, omega_c_ = 1.0;        // powerlaw kinds
  double c0_ = 0.0, omega0_ = 0.0, gamma0_ = 0.0;       // brownian
  std::vector<LorentzianTerm> terms_;                   // lorentzian_sum
  std::vector<double> tab_w_, tab_j_, tab_slope_;       // tabulated (PCHIP)
};

// Thermal noise power S_beta(w) = J(w) / (1 - exp(-beta w)); the w -> 0
// removable singularity is evaluated by series, T = 0 by beta = +infinity.
class NoisePower {
 public:
  NoisePower(SpectralDensity density, double beta);

  double operator()(double omega) const;
  const SpectralDensity& density() const { return density_; }
  double beta() const { return beta_; }

 private:
  SpectralDensity density_;
  double beta_;
};

struct GridSpec {
  double hi_factor = 10.0;      // omega_hi = hi_factor * max(1/beta, scale)
  int decades = 10;             // logarithmic refinement depth toward w = 0
  int panels_per_decade = 2;
  int gl_order = 16;
  double tail_rel_tol = 1e-6;   // spectral weight allowed beyond omega_hi
  int max_extra_decades = 6;    // automatic tail extension budget
  // Largest time the grid must resolve: linear panels are sized so that
  // exp(-i w t) stays well inside one Gauss-Legendre panel's reach.
  // <= 0 selects an automatic window of 200/scale (+10 beta when finite).
  double t_max_hint = 0.0;
  double osc_budget = 12.0;     // max panel width * t_max (radians)
};

// Composite frequency grid: log-refined Gauss-Legendre panels over
// [-omega_hi, omega_hi] (positive side only at T = 0), with weights.
struct FrequencyGrid {
  std::vector<double> omega;
  std::vector<double> weight;
  double omega_hi = 0.0;
  double t_max = 0.0;  // largest time the panel widths resolve
};

FrequencyGrid build_frequency_grid(const NoisePower& s, const GridSpec& spec = {});

// Bath correlation function C(t) = (1/2pi) \int S_beta(w) exp(-i w t) dw.
// Hermitian symmetry C(-t) = C(t)* is structural: |t| is evaluated and
// conjugated for t < 0.
class CorrelationFunction {
 public:
  enum class Evaluation { closed_form, quadrature };

  // Closed forms: lorentzian_sum at T = 0 (narrow-resonance limit,
  // C = sum g^2 exp(-i(w - i gamma) t)) and brownian at high temperature.
  static CorrelationFunction closed_form(NoisePower s);
  static CorrelationFunction with_quadrature(NoisePower s, const GridSpec& spec = {});

  cd operator()(double t) const;
  double c0() const;  // C(0), real for physical baths

  // First time with |C(t)| <= 1e-3 |C(0)|; the default certification window
  // ("ten decay times") used when callers do not pass one.
  double ten_decay_times() const;

  Evaluation evaluation() const { return eval_; }
  const NoisePower& source() const { return source_; }
  const FrequencyGrid& grid() const;

 private:
  explicit CorrelationFunction(NoisePower s) : source_(std::move(s)) {}
  cd eval_nonneg(double t) const;

  NoisePower source_;
  Evaluation eval_ = Evaluation::quadrature;
  FrequencyGrid grid_;
  std::vector<cd> strength_;  // w_i S(w_i) / 2pi cached on the grid
  mutable std::optional<double> decay_time_;
};

}  // namespace messkit
