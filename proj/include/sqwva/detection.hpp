#pragma once

// Split-like detection at the dark port.
//
// A D-shaped mirror splits the beam at x = 0 onto two photodiodes. The
// photon-number difference, linearized in the fluctuations, is
//
//   N- = sqrt(2/pi) N sin(phi/2) cos(phi/2) w0 k  +  sqrt(N') dX1
//
// where the first factor is split_overlap(1, 0) and the noise projection
// split_overlap of the squeezed TEM10 against the TEM00 local field is 1.
// The resulting SNR is (2/pi) N cos^2(phi/2) (w0 k)^2 / V with V the
// detected quadrature variance (exp(-2r) when locked on the squeezed one).

#include "sqwva/interferometer.hpp"

namespace sqwva::det {

struct DifferenceStatistics {
  double mean;      // photons per integration time
  double variance;  // photons^2
  double snr_linear;
  double snr_db;
};

struct Snr {
  double linear;
  double db;  // -inf when linear == 0
};

// Minimum detectable tilt/displacement at SNR = 1. The *_density values are
// the minima for a 1 s integration time, i.e. per sqrt(Hz) of bandwidth.
struct SensitivityReport {
  double min_tilt;              // rad at the configured T
  double min_displacement;      // m at the configured T
  double tilt_density;          // rad / sqrt(Hz)
  double displacement_density;  // m / sqrt(Hz)
};

DifferenceStatistics difference_statistics(const ifo::MeasurementConfig& c);

Snr snr(const ifo::MeasurementConfig& c);

SensitivityReport min_detectable_tilt(const ifo::MeasurementConfig& c);

// d = l sin(theta)
double tilt_to_displacement(double theta, double lever_arm);
// theta = asin(d / l); DomainError if |d / l| > 1
double displacement_to_tilt(double displacement, double lever_arm);

}  // namespace sqwva::det
