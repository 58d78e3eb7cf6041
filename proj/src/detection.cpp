#include "sqwva/detection.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sqwva/errors.hpp"

namespace sqwva::det {

namespace {

// split_overlap(1, 0) in closed form.
const double kSplitGain = std::sqrt(2.0 / std::numbers::pi);

double snr_db_of(double linear) {
  return linear > 0.0 ? 10.0 * std::log10(linear) : -std::numeric_limits<double>::infinity();
}

// sin(theta_min) for the given config, i.e. the tilt at which SNR = 1.
double sin_min_tilt(const ifo::MeasurementConfig& c) {
  const double half = 0.5 * c.relative_phase_phi;
  const double amplitude = std::sqrt(c.photon_number()) * std::cos(half) * c.geometry.waist_w0 /
                           std::sqrt(c.effective_variance());
  return c.geometry.wavelength / (2.0 * std::numbers::pi) / (kSplitGain * amplitude);
}

}  // namespace

DifferenceStatistics difference_statistics(const ifo::MeasurementConfig& c) {
  c.validate();
  const double n = c.photon_number();
  const double n_dark = c.dark_photon_number();
  if (!(n_dark > 0.0)) throw DomainError("no photons at the dark port: degenerate measurement");
  const double half = 0.5 * c.relative_phase_phi;
  const double mean =
      kSplitGain * n * std::sin(half) * std::cos(half) * c.geometry.waist_w0 * c.transverse_k();
  const double variance = n_dark * c.effective_variance();
  if (!(variance > 0.0)) throw DomainError("zero detection noise: degenerate measurement");
  const double linear = mean * mean / variance;
  return {mean, variance, linear, snr_db_of(linear)};
}

Snr snr(const ifo::MeasurementConfig& c) {
  c.validate();
  const double half = 0.5 * c.relative_phase_phi;
  const double wk = c.geometry.waist_w0 * c.transverse_k();
  const double cos_half = std::cos(half);
  const double linear = (2.0 / std::numbers::pi) * c.photon_number() * cos_half * cos_half * wk * wk /
                        c.effective_variance();
  return {linear, snr_db_of(linear)};
}

SensitivityReport min_detectable_tilt(const ifo::MeasurementConfig& c) {
  c.validate();
  const double s = sin_min_tilt(c);
  ifo::MeasurementConfig one_second = c;
  one_second.integration_time_T = 1.0;
  const double s1 = sin_min_tilt(one_second);
  if (!(s <= 1.0 && s1 <= 1.0)) throw DomainError("no tilt reaches SNR = 1 for this configuration");
  return SensitivityReport{
      .min_tilt = std::asin(s),
      .min_displacement = c.lever_arm_l * s,
      .tilt_density = std::asin(s1),
      .displacement_density = c.lever_arm_l * s1,
  };
}

double tilt_to_displacement(double theta, double lever_arm) {
  if (!(lever_arm > 0.0)) throw DomainError("lever arm must be > 0");
  return lever_arm * std::sin(theta);
}

double displacement_to_tilt(double displacement, double lever_arm) {
  if (!(lever_arm > 0.0)) throw DomainError("lever arm must be > 0");
  const double ratio = displacement / lever_arm;
  if (!(std::abs(ratio) <= 1.0)) throw DomainError("|d / l| > 1");
  return std::asin(ratio);
}

}  // namespace sqwva::det
