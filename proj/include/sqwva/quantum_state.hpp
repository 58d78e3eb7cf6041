#pragma once

// Gaussian single-mode states in quadrature form and the photon-number /
// decibel bookkeeping used everywhere else. Variances are in shot-noise units
// (a coherent state has variance 1 in every quadrature). All dB are power dB.

namespace sqwva::qs {

namespace constants {
inline constexpr double planck_h = 6.62607015e-34;       // J s
inline constexpr double speed_of_light = 299792458.0;    // m / s
}  // namespace constants

struct QuadratureState {
  double mean_x = 0.0;  // sqrt(photon) units
  double mean_y = 0.0;
  double r = 0.0;                          // squeezing parameter, >= 0
  double squeezed_quadrature_angle = 0.0;  // rad; 0 selects amplitude squeezing

  static QuadratureState coherent(double amplitude) { return {amplitude, 0.0, 0.0, 0.0}; }
  static QuadratureState squeezed_vacuum(double r, double angle = 0.0) { return {0.0, 0.0, r, angle}; }

  bool is_coherent() const noexcept { return r == 0.0; }
  // Throws DomainError for r < 0 or non-finite fields.
  void validate() const;
};

struct OpticalPower {
  double watts = 0.0;

  static OpticalPower from_watts(double w);  // throws DomainError if w < 0
};

// r such that exp(-2r) = 10^(-db/10). Negative input is rejected:
// anti-squeezing is expressed through the measurement angle.
double db_to_r(double squeeze_db);
double r_to_db(double r);

// exp(-2r) cos^2(psi - theta_s) + exp(2r) sin^2(psi - theta_s)
double quadrature_variance(const QuadratureState& s, double psi);

// Variance after an efficiency eta mixes in vacuum: eta V + (1 - eta).
double with_efficiency(double variance, double eta);

// N = P lambda T / (h c)
double photon_number_from_power(OpticalPower p, double wavelength, double integration_time);

// 10 log10(a / b)
double power_ratio_db(double a, double b);
double db_to_power_ratio(double db);

}  // namespace sqwva::qs
