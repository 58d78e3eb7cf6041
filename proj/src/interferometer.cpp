#include "sqwva/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "quadrature.hpp"
#include "sqwva/errors.hpp"

namespace sqwva::ifo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kProbabilityTolerance = 1e-6;
}  // namespace

MeasurementConfig MeasurementConfig::from_powers(hg::BeamGeometry g, double p_in_watts, double p_out_watts) {
  MeasurementConfig c;
  c.geometry = g;
  c.input_power = qs::OpticalPower::from_watts(p_in_watts);
  c.output_power = qs::OpticalPower::from_watts(p_out_watts);
  if (!(p_in_watts > 0.0)) throw DomainError("input power must be > 0");
  if (p_out_watts > p_in_watts) throw DomainError("output power exceeds input power");
  c.relative_phase_phi = phi_for_probability(p_out_watts / p_in_watts);
  return c;
}

double MeasurementConfig::postselection_probability() const {
  if (!(input_power.watts > 0.0)) throw DomainError("input power must be > 0");
  return output_power.watts / input_power.watts;
}

double MeasurementConfig::transverse_k() const {
  return 2.0 * kPi * std::sin(tilt_theta) / geometry.wavelength;
}

double MeasurementConfig::photon_number() const {
  return qs::photon_number_from_power(input_power, geometry.wavelength, integration_time_T);
}

double MeasurementConfig::dark_photon_number() const {
  const double s = std::sin(0.5 * relative_phase_phi);
  return photon_number() * s * s;
}

double MeasurementConfig::effective_variance() const {
  double v = qs::quadrature_variance(squeeze, input_phase_psi);
  if (flipped_mode_input) {
    // Only the TEM10 projection of sign(x) u0 carries the squeezing.
    const double c1 = hg::split_overlap(1, 0, geometry);
    const double match = c1 * c1;
    v = match * v + (1.0 - match);
  }
  return qs::with_efficiency(v, efficiency);
}

void MeasurementConfig::validate() const {
  geometry.validate();
  squeeze.validate();
  if (!(input_power.watts > 0.0)) throw DomainError("input power must be > 0");
  if (!(output_power.watts > 0.0)) throw DomainError("output power must be > 0");
  if (output_power.watts > input_power.watts) throw DomainError("output power exceeds input power");
  if (!(relative_phase_phi > 0.0 && relative_phase_phi < kPi)) throw DomainError("phi must lie in (0, pi)");
  if (!std::isfinite(input_phase_psi)) throw DomainError("psi must be finite");
  if (!std::isfinite(tilt_theta)) throw DomainError("tilt must be finite");
  if (!(lever_arm_l > 0.0 && std::isfinite(lever_arm_l))) throw DomainError("lever arm must be > 0");
  if (!(integration_time_T > 0.0 && std::isfinite(integration_time_T))) {
    throw DomainError("integration time must be > 0");
  }
  if (!(efficiency >= 0.0 && efficiency <= 1.0)) throw DomainError("efficiency must lie in [0, 1]");
  const double kw = std::abs(transverse_k()) * geometry.waist_w0;
  if (!(kw < 0.1)) throw SmallAngleError("|k| w0 must stay below 0.1 for the first-order model");
  const double half_sin = std::sin(0.5 * relative_phase_phi);
  const double mismatch = std::abs(postselection_probability() - half_sin * half_sin);
  if (mismatch > kProbabilityTolerance) {
    throw DomainError("P_out / P_in inconsistent with sin^2(phi/2)");
  }
}

PortFields beamsplitter_transform(const PortFields& in) {
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i{0.0, 1.0};
  return {s * (in[0] + i * in[1]), s * (i * in[0] + in[1])};
}

PortFields interaction_transform(const PortFields& in, double k, double phi, double x) {
  const double a = k * x + 0.5 * phi;
  return {in[0] * std::polar(1.0, a), in[1] * std::polar(1.0, -a)};
}

PortFields mach_zehnder_transform(const PortFields& in, double k, double phi, double x) {
  return beamsplitter_transform(interaction_transform(beamsplitter_transform(in), k, phi, x));
}

DarkPortState dark_port_output(const MeasurementConfig& c) {
  c.validate();
  const double half = 0.5 * c.relative_phase_phi;
  const double root_n = std::sqrt(c.photon_number());
  const double baseline = std::sin(half) * root_n;
  // sin(phi/2) sqrt(N) * cot(phi/2) w0 k / 2, written without the 0 * inf hazard.
  const double signal = std::cos(half) * root_n * c.geometry.waist_w0 * c.transverse_k() / 2.0;
  return DarkPortState{
      .baseline_u0_amplitude = baseline,
      .signal_u1_amplitude = Complex{signal, 0.0},
      .noise_u1_variance = std::cos(half) * std::cos(half) * c.effective_variance(),
      .dark_photon_number_Nprime = c.dark_photon_number(),
  };
}

PortPhotonNumbers port_photon_numbers(const MeasurementConfig& c) {
  c.validate();
  const double n = c.photon_number();
  const double k = c.transverse_k();
  const double w0 = c.geometry.waist_w0;
  const double phi = c.relative_phase_phi;
  auto port = [&](int which) {
    auto f = [=](double s) {
      const double u0 = hg::mode_amplitude_unit(0, s);
      const PortFields out = mach_zehnder_transform({Complex{u0, 0.0}, Complex{}}, k, phi, s * w0);
      return std::norm(out[which]);
    };
    return detail::integrate(f, -8.0, 8.0, "port_photon_numbers");
  };
  return {n * port(0), n * port(1)};
}

double weak_value(double phi) {
  if (!(phi > 0.0 && phi <= kPi)) throw DomainError("weak value needs phi in (0, pi]");
  if (phi == kPi) return 0.0;
  return 1.0 / std::tan(0.5 * phi);
}

double postselection_probability(double phi) {
  if (!(phi > 0.0 && phi < kPi)) throw DomainError("postselection needs phi in (0, pi)");
  const double s = std::sin(0.5 * phi);
  return s * s;
}

double phi_for_probability(double p_f) {
  if (!(p_f > 0.0 && p_f < 1.0)) throw DomainError("postselection probability must lie in (0, 1)");
  return 2.0 * std::asin(std::sqrt(p_f));
}

}  // namespace sqwva::ifo
