#include "sqwva/quantum_state.hpp"

#include <cmath>
#include <numbers>

#include "sqwva/errors.hpp"

namespace sqwva::qs {

void QuadratureState::validate() const {
  if (!std::isfinite(mean_x) || !std::isfinite(mean_y) || !std::isfinite(squeezed_quadrature_angle)) {
    throw DomainError("quadrature state has non-finite fields");
  }
  if (!(std::isfinite(r) && r >= 0.0)) throw DomainError("squeezing parameter r must be >= 0");
}

OpticalPower OpticalPower::from_watts(double w) {
  if (!(std::isfinite(w) && w >= 0.0)) throw DomainError("optical power must be >= 0");
  return OpticalPower{w};
}

double db_to_r(double squeeze_db) {
  if (!(std::isfinite(squeeze_db) && squeeze_db >= 0.0)) throw DomainError("squeezing in dB must be >= 0");
  return squeeze_db * std::numbers::ln10 / 20.0;
}

double r_to_db(double r) {
  if (!(std::isfinite(r) && r >= 0.0)) throw DomainError("squeezing parameter r must be >= 0");
  return 20.0 * r / std::numbers::ln10;
}

double quadrature_variance(const QuadratureState& s, double psi) {
  const double d = psi - s.squeezed_quadrature_angle;
  const double c = std::cos(d);
  const double sn = std::sin(d);
  return std::exp(-2.0 * s.r) * c * c + std::exp(2.0 * s.r) * sn * sn;
}

double with_efficiency(double variance, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("efficiency must lie in [0, 1]");
  return eta * variance + (1.0 - eta);
}

double photon_number_from_power(OpticalPower p, double wavelength, double integration_time) {
  if (!(p.watts > 0.0) || !(wavelength > 0.0) || !(integration_time > 0.0)) {
    throw DomainError("photon number needs positive power, wavelength and integration time");
  }
  return p.watts * wavelength * integration_time / (constants::planck_h * constants::speed_of_light);
}

double power_ratio_db(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("power ratio needs positive operands");
  return 10.0 * std::log10(a / b);
}

double db_to_power_ratio(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace sqwva::qs
