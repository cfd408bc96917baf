#include "messkit/bath.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "messkit/errors.hpp"
#include "messkit/quadrature.hpp"

namespace messkit {

namespace {

// Fritsch-Carlson monotone cubic slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
      const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  // Clamp endpoint slopes to preserve monotonicity.
  for (std::size_t i : {std::size_t{0}, n - 1}) {
    const double dd = (i == 0) ? d[0] : d[n - 2];
    if (m[i] * dd <= 0.0)
      m[i] = 0.0;
    else if (std::abs(m[i]) > 3.0 * std::abs(dd))
      m[i] = 3.0 * dd;
  }
  return m;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& m, double xq) {
  auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::size_t i = (it == x.begin()) ? 0 : (it - x.begin() - 1);
  if (i >= x.size() - 1) i = x.size() - 2;
  const double h = x[i + 1] - x[i], t = (xq - x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return y[i] * (2 * t3 - 3 * t2 + 1) + h * m[i] * (t3 - 2 * t2 + t) +
         y[i + 1] * (-2 * t3 + 3 * t2) + h * m[i + 1] * (t3 - t2);
}

}  // namespace

SpectralDensity SpectralDensity::ohmic(double alpha, double omega_c) {
  return subohmic(alpha, 1.0, omega_c);
}

SpectralDensity SpectralDensity::subohmic(double alpha, double s, double omega_c) {
  if (alpha < 0.0 || s <= 0.0 || omega_c <= 0.0)
    throw validation_error("spectral density: require alpha >= 0, s > 0, omega_c > 0");
  SpectralDensity j;
  j.kind_ = (s == 1.0) ? SpectralKind::ohmic_exponential : SpectralKind::subohmic_powerlaw;
  j.alpha_ = alpha;
  j.s_ = s;
  j.omega_c_ = omega_c;
  return j;
}

SpectralDensity SpectralDensity::brownian(double c0, double omega0, double gamma0) {
  if (omega0 <= 0.0 || gamma0 < 0.0)
    throw validation_error("brownian density: require omega0 > 0, gamma0 >= 0");
  SpectralDensity j;
  j.kind_ = SpectralKind::brownian;
  j.c0_ = c0;
  j.omega0_ = omega0;
  j.gamma0_ = gamma0;
  return j;
}

SpectralDensity SpectralDensity::lorentzian_sum(std::vector<LorentzianTerm> terms) {
  if (terms.empty()) throw validation_error("lorentzian_sum: no terms");
  for (const auto& t : terms)
    if (t.gamma < 0.0) throw validation_error("lorentzian_sum: gamma must be >= 0");
  SpectralDensity j;
  j.kind_ = SpectralKind::lorentzian_sum;
  j.terms_ = std::move(terms);
  return j;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> omega,
                                           std::vector<double> j) {
  if (omega.size() != j.size() || omega.size() < 2)
    throw validation_error("tabulated density: need >= 2 matching samples");
  for (std::size_t i = 0; i + 1 < omega.size(); ++i)
    if (omega[i + 1] <= omega[i])
      throw validation_error("tabulated density: grid must be strictly increasing");
  if (omega.front() < 0.0)
    throw validation_error("tabulated density: samples must have omega >= 0");
  SpectralDensity sd;
  sd.kind_ = SpectralKind::tabulated;
  sd.tab_slope_ = pchip_slopes(omega, j);
  sd.tab_w_ = std::move(omega);
  sd.tab_j_ = std::move(j);
  return sd;
}

SpectralDensity SpectralDensity::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open tabulated density file: " + path);
  std::vector<double> w, j;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ss(line);
    double a, b;
    if (ss >> a >> b) {
      w.push_back(a);
      j.push_back(b);
    }
  }
  return tabulated(std::move(w), std::move(j));
}

double SpectralDensity::positive_part(double w) const {
  switch (kind_) {
    case SpectralKind::ohmic_exponential:
    case SpectralKind::subohmic_powerlaw:
      return 0.5 * pi * alpha_ * std::pow(w, s_) * std::pow(omega_c_, 1.0 - s_) *
             std::exp(-w / omega_c_);
    case SpectralKind::brownian: {
      const double a = w * w - omega0_ * omega0_;
      return 2.0 * c0_ * c0_ * gamma0_ * w / (a * a + 4.0 * gamma0_ * gamma0_ * w * w);
    }
    case SpectralKind::lorentzian_sum: {
      double v = 0.0;
      for (const auto& t : terms_) {
        const double dw = w - t.omega;
        v += 2.0 * t.gamma * t.g * t.g / (dw * dw + t.gamma * t.gamma);
      }
      return v;
    }
    case SpectralKind::tabulated:
      if (w < tab_w_.front() || w > tab_w_.back())
        throw out_of_domain_error("tabulated density evaluated outside its grid");
      return pchip_eval(tab_w_, tab_j_, tab_slope_, w);
  }
  return 0.0;
}

double SpectralDensity::operator()(double omega) const {
  if (omega == 0.0) return 0.0;
  return omega > 0.0 ? positive_part(omega) : -positive_part(-omega);
}

double SpectralDensity::scale() const {
  switch (kind_) {
    case SpectralKind::ohmic_exponential:
    case SpectralKind::subohmic_powerlaw:
      return omega_c_;
    case SpectralKind::brownian:
      return omega0_ + 2.0 * gamma0_;
    case SpectralKind::lorentzian_sum: {
      double v = 0.0;
      for (const auto& t : terms_) v = std::max(v, t.omega + 10.0 * t.gamma);
      return v;
    }
    case SpectralKind::tabulated:
      return tab_w_.back();
  }
  return 1.0;
}

double SpectralDensity::slope_at_zero() const {
  double h = 1e-7 * scale();
  if (kind_ == SpectralKind::tabulated) h = std::max(h, tab_w_.front());
  return positive_part(h) / h;
}

NoisePower::NoisePower(SpectralDensity density, double beta)
    : density_(std::move(density)), beta_(beta) {
  if (!(beta > 0.0))
    throw validation_error("noise power: beta must be positive or +infinity");
}

double NoisePower::operator()(double omega) const {
  if (is_zero_temperature(beta_)) {
    return omega > 0.0 ? density_(omega) : 0.0;
  }
  if (omega == 0.0) return density_.slope_at_zero() / beta_;
  const double x = beta_ * omega;
  if (std::abs(x) < 1e-4) {
    // 1 - exp(-x) = x (1 - x/2 + x^2/6 - x^3/24) to 4th order.
    const double p = 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
    return density_(omega) / (x * p);
  }
  return density_(omega) / (1.0 - std::exp(-x));
}

FrequencyGrid build_frequency_grid(const NoisePower& s, const GridSpec& spec) {
  const double scale = s.density().scale();
  const double thermal = is_zero_temperature(s.beta()) ? 0.0 : 1.0 / s.beta();
  double omega_hi = spec.hi_factor * std::max(thermal, scale);
  const bool two_sided = !is_zero_temperature(s.beta());
  const quad::Rule rule = quad::gauss_legendre(spec.gl_order);
  const double auto_window =
      std::min(200.0 / scale + (is_zero_temperature(s.beta()) ? 0.0 : 10.0 * s.beta()),
               2000.0 / scale);
  const double t_max = spec.t_max_hint > 0.0 ? spec.t_max_hint : auto_window;

  const double hi_body = omega_hi;
  auto build_side = [&](double hi, std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    // Log refinement from omega_split down to omega_split * 10^-decades;
    // subohmic weight concentrates near w = 0.
    const double osc_width = spec.osc_budget / std::max(t_max, 1.0 / scale);
    const double split = std::min(scale / 4.0, std::min(osc_width, hi_body / 10.0));
    const double lo = split * std::pow(10.0, -spec.decades);
    quad::append_panel(x, w, 0.0, lo, rule);
    for (int d = 0; d < spec.decades; ++d) {
      const double a = lo * std::pow(10.0, d);
      for (int p = 0; p < spec.panels_per_decade; ++p) {
        const double pa = a * std::pow(10.0, double(p) / spec.panels_per_decade);
        const double pb = a * std::pow(10.0, double(p + 1) / spec.panels_per_decade);
        quad::append_panel(x, w, pa, pb, rule);
      }
    }
    // Linear bulk panels, sized by the oscillation budget, up to hi_body.
    const int n_lin = std::max(4, int(std::ceil((hi_body - split) / osc_width)));
    for (int p = 0; p < n_lin; ++p) {
      quad::append_panel(x, w, split + (hi_body - split) * p / n_lin,
                         split + (hi_body - split) * (p + 1) / n_lin, rule);
    }
    // Tail extension in log panels: the weight out here is already below
    // tail_rel_tol times the body, so unresolved phases cost nothing.
    double a = hi_body;
    while (a < hi * (1.0 - 1e-12)) {
      const double b = std::min(a * std::pow(10.0, 1.0 / spec.panels_per_decade), hi);
      quad::append_panel(x, w, a, b, rule);
      a = b;
    }
  };

  // Extend omega_hi until the spectral weight in the next decade is negligible.
  auto tail_weight = [&](double hi) {
    std::vector<double> x, w;
    for (int p = 0; p < 2 * spec.panels_per_decade; ++p) {
      const double pa = hi * std::pow(10.0, double(p) / (2.0 * spec.panels_per_decade));
      const double pb = hi * std::pow(10.0, double(p + 1) / (2.0 * spec.panels_per_decade));
      quad::append_panel(x, w, pa, pb, rule);
    }
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      v += w[i] * std::abs(s(x[i]));
      if (two_sided) v += w[i] * std::abs(s(-x[i]));
    }
    return v;
  };

  std::vector<double> x, w;
  double body = 0.0;
  int extra = 0;
  for (;; ++extra) {
    build_side(omega_hi, x, w);
    body = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      body += w[i] * std::abs(s(x[i]));
      if (two_sided) body += w[i] * std::abs(s(-x[i]));
    }
    if (s.density().kind() == SpectralKind::tabulated) break;  // no tail beyond data
    const double tail = tail_weight(omega_hi);
    if (tail <= spec.tail_rel_tol * std::max(body, 1e-300)) break;
    if (extra >= spec.max_extra_decades)
      throw accuracy_error("frequency grid: spectral tail above tolerance", tail / body);
    omega_hi *= 10.0;
  }

  FrequencyGrid g;
  g.omega_hi = omega_hi;
  if (two_sided) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      g.omega.push_back(-x[x.size() - 1 - i]);
      g.weight.push_back(w[x.size() - 1 - i]);
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    g.omega.push_back(x[i]);
    g.weight.push_back(w[i]);
  }
  return g;
}

CorrelationFunction CorrelationFunction::closed_form(NoisePower s) {
  CorrelationFunction c(std::move(s));
  c.eval_ = Evaluation::closed_form;
  const auto& d = c.source_.density();
  switch (d.kind()) {
    case SpectralKind::lorentzian_sum:
      if (!is_zero_temperature(c.source_.beta()))
        throw validation_error(
            "closed-form lorentzian correlation is the narrow-resonance form; "
            "construct it at beta = +infinity");
      break;
    case SpectralKind::brownian:
      if (is_zero_temperature(c.source_.beta()))
        throw validation_error(
            "closed-form brownian correlation is the high-temperature form; "
            "construct it at finite beta");
      if (d.brownian_omega0() <= d.brownian_gamma0())
        throw validation_error(
            "closed-form brownian correlation requires the underdamped regime "
            "omega0 > gamma0");
      break;
    default:
      throw validation_error("no closed-form correlation for this spectral kind");
  }
  return c;
}

CorrelationFunction CorrelationFunction::with_quadrature(NoisePower s,
                                                         const GridSpec& spec) {
  CorrelationFunction c(std::move(s));
  c.eval_ = Evaluation::quadrature;
  c.grid_ = build_frequency_grid(c.source_, spec);
  c.strength_.resize(c.grid_.omega.size());
  for (std::size_t i = 0; i < c.grid_.omega.size(); ++i)
    c.strength_[i] = c.grid_.weight[i] * c.source_(c.grid_.omega[i]) / (2.0 * pi);
  return c;
}

const FrequencyGrid& CorrelationFunction::grid() const {
  if (eval_ != Evaluation::quadrature)
    throw validation_error("closed-form correlation has no frequency grid");
  return grid_;
}

cd CorrelationFunction::eval_nonneg(double t) const {
  if (eval_ == Evaluation::closed_form) {
    const auto& d = source_.density();
    if (d.kind() == SpectralKind::lorentzian_sum) {
      cd v = 0.0;
      for (const auto& term : d.lorentzians())
        v += term.g * term.g * std::exp(-iu * (term.omega - iu * term.gamma) * t);
      return v;
    }
    // Brownian at high temperature: position/momentum response of a damped
    // oscillator, C(t) = c0^2/(beta w0^2) phi_q(t) + i c0^2/(2 w0) phi_p(t).
    const double c0 = d.brownian_c0(), w0 = d.brownian_omega0(), g0 = d.brownian_gamma0();
    const double zeta = std::sqrt(w0 * w0 - g0 * g0);
    const double phi_q = std::exp(-g0 * t) * (std::cos(zeta * t) + g0 / zeta * std::sin(zeta * t));
    const double phi_p = -(w0 / zeta) * std::exp(-g0 * t) * std::sin(zeta * t);
    return cd(c0 * c0 / (source_.beta() * w0 * w0) * phi_q, c0 * c0 / (2.0 * w0) * phi_p);
  }
  cd v = 0.0;
  for (std::size_t i = 0; i < strength_.size(); ++i)
    v += strength_[i] * std::exp(-iu * grid_.omega[i] * t);
  return v;
}

cd CorrelationFunction::operator()(double t) const {
  if (t >= 0.0) return eval_nonneg(t);
  return std::conj(eval_nonneg(-t));
}

double CorrelationFunction::c0() const { return eval_nonneg(0.0).real(); }

double CorrelationFunction::ten_decay_times() const {
  if (decay_time_) return *decay_time_;
  const double c0v = std::abs((*this)(0.0));
  const double scale = source_.density().scale();
  const double cap = 2e3 / scale;
  // Coarse bracket, then refine one decade of resolution.
  double dt = 0.5 / scale, t = dt;
  while (t < cap && std::abs((*this)(t)) > 1e-3 * c0v) t += dt;
  double hi = t, lo = std::max(0.0, t - dt);
  dt /= 20.0;
  t = lo;
  while (t < hi && std::abs((*this)(t)) > 1e-3 * c0v) t += dt;
  decay_time_ = t;
  return t;
}

}  // namespace messkit
