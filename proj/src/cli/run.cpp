#include "sqwva/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sqwva/detection.hpp"
#include "sqwva/errors.hpp"
#include "sqwva/hg_modes.hpp"
#include "sqwva/spectra.hpp"

namespace sqwva::cli {

namespace {

const char* window_name(spectra::Window w) { return w == spectra::Window::hann ? "hann" : "rect"; }

void echo_config(const ExperimentConfig& c, RunResult& r) {
  const ifo::MeasurementConfig& m = c.measurement();
  r.config = {
      {"wavelength_m", m.geometry.wavelength},
      {"waist_m", m.geometry.waist_w0},
      {"input_power_w", m.input_power.watts},
      {"output_power_w", m.output_power.watts},
      {"phi_rad", m.relative_phase_phi},
      {"psi_rad", m.input_phase_psi},
      {"squeeze_db", c.squeeze_db},
      {"squeeze_r", m.squeeze.r},
      {"squeeze_angle_rad", m.squeeze.squeezed_quadrature_angle},
      {"tilt_rad", m.tilt_theta},
      {"lever_arm_m", m.lever_arm_l},
      {"integration_time_s", m.integration_time_T},
      {"efficiency", m.efficiency},
      {"signal_frequency_hz", c.trace.signal_frequency},
      {"sample_rate_hz", c.trace.sample_rate},
      {"rbw_hz", c.trace.rbw},
      {"duration_s", c.trace.duration},
  };
  r.settings = {
      {"window", window_name(c.trace.window)},
      {"flipped_mode", m.flipped_mode_input ? "true" : "false"},
      {"noise", c.trace.include_noise ? "true" : "false"},
      {"signal", c.trace.include_signal ? "true" : "false"},
      {"sweep", c.sweep == SweepKind::postselection ? "postselection" : "squeezing"},
  };
}

void run_snr(const ExperimentConfig& c, RunResult& r) {
  const ifo::MeasurementConfig& m = c.measurement();
  const det::Snr s = det::snr(m);
  const det::DifferenceStatistics d = det::difference_statistics(m);
  r.scalars = {
      {"snr_linear", s.linear},
      {"snr_db", s.db},
      {"difference_mean", d.mean},
      {"difference_variance", d.variance},
      {"weak_value", ifo::weak_value(m.relative_phase_phi)},
      {"postselection_probability", m.postselection_probability()},
      {"photon_number", m.photon_number()},
      {"dark_photon_number", m.dark_photon_number()},
      {"transverse_k_rad_per_m", m.transverse_k()},
  };
}

void run_sensitivity(const ExperimentConfig& c, RunResult& r) {
  const ifo::MeasurementConfig& m = c.measurement();
  const det::SensitivityReport rep = det::min_detectable_tilt(m);
  const det::Snr s = det::snr(m);
  // Same report at the spectrum analyzer bandwidth (T = 1 / RBW).
  const det::SensitivityReport band = det::min_detectable_tilt(c.trace.band_measurement());
  r.scalars = {
      {"snr_db", s.db},
      {"min_tilt_rad", rep.min_tilt},
      {"min_displacement_m", rep.min_displacement},
      {"tilt_density_rad_per_rthz", rep.tilt_density},
      {"displacement_density_m_per_rthz", rep.displacement_density},
      {"rbw_min_tilt_rad", band.min_tilt},
      {"rbw_min_displacement_m", band.min_displacement},
  };
}

void run_spectrum(const ExperimentConfig& c, RunResult& r) {
  const spectra::TraceModel model = spectra::trace_model(c.trace);
  const spectra::TimeSeries ts = spectra::simulate_photocurrent(c.trace);
  const spectra::SpectrumEstimate est = spectra::welch_psd(ts, c.trace.rbw, c.trace.window);
  const std::vector<double> rel = spectra::relative_to_snl_db(est, model.snl_density);
  const spectra::PeakReadout peak = spectra::peak_snr(est, c.trace.signal_frequency);
  r.scalars = {
      {"analytic_snr_db", model.analytic_snr > 0.0 ? 10.0 * std::log10(model.analytic_snr)
                                                   : -std::numeric_limits<double>::infinity()},
      {"peak_snr_db", peak.snr_db},
      {"peak_to_floor_db", peak.peak_to_floor_db},
      {"floor_density", peak.floor_density},
      {"floor_rel_snl_db", 10.0 * std::log10(peak.floor_density / model.snl_density)},
      {"snl_density", model.snl_density},
      {"n_averages", static_cast<double>(est.n_averages)},
      {"bin_width_hz", est.bin_width},
  };
  r.columns = {"frequency_hz", "psd_db_rel_snl", "psd_per_hz"};
  r.rows.reserve(est.psd.size());
  for (std::size_t k = 0; k < est.psd.size(); ++k) r.rows.push_back({est.frequencies[k], rel[k], est.psd[k]});
  if (std::fmod(c.trace.signal_frequency, est.bin_width) != 0.0) {
    r.warnings.push_back("signal frequency is not on a bin centre; peak read from a widened band");
  }
}

void run_sweep(const ExperimentConfig& c, RunResult& r) {
  if (c.sweep == SweepKind::postselection) {
    const auto rows = spectra::postselection_sweep(c.measurement(), c.probabilities);
    r.columns = {"p_f", "snr_db", "phi_rad", "input_power_w", "snr_linear"};
    for (const auto& row : rows) {
      r.rows.push_back({row.postselection_probability, row.snr_db, row.phi, row.input_power, row.snr_linear});
    }
  } else {
    const auto rows = spectra::squeezing_sweep(c.measurement(), c.squeeze_levels_db);
    r.columns = {"squeeze_db", "snr_db", "snr_linear"};
    for (const auto& row : rows) r.rows.push_back({row.squeeze_db, row.snr_db, row.snr_linear});
  }
}

void run_phasescan(const ExperimentConfig& c, RunResult& r) {
  const auto scan = spectra::local_phase_scan(c.measurement().squeeze, c.phase_points);
  r.columns = {"psi_rad", "variance", "variance_db_rel_snl"};
  double lo = scan.front().variance;
  double hi = lo;
  for (const auto& p : scan) {
    r.rows.push_back({p.psi, p.variance, 10.0 * std::log10(p.variance)});
    lo = std::min(lo, p.variance);
    hi = std::max(hi, p.variance);
  }
  const qs::QuadratureState& s = c.measurement().squeeze;
  r.scalars = {
      {"min_variance", lo},
      {"max_variance", hi},
      {"squeezed_variance", std::exp(-2.0 * s.r)},
      {"antisqueezed_variance", std::exp(2.0 * s.r)},
      {"min_max_product", lo * hi},
  };
}

void run_modes(const ExperimentConfig& c, RunResult& r) {
  const hg::BeamGeometry& g = c.measurement().geometry;
  const std::size_t top = c.modes_max;
  r.columns = {"m", "n", "overlap", "split_overlap"};
  double worst = 0.0;
  for (std::size_t m = 0; m <= top; ++m) {
    for (std::size_t n = 0; n <= top; ++n) {
      const double o = hg::overlap(m, n, g);
      worst = std::max(worst, std::abs(o - (m == n ? 1.0 : 0.0)));
      r.rows.push_back({static_cast<double>(m), static_cast<double>(n), o, hg::split_overlap(m, n, g)});
    }
  }
  const hg::ModeExpansion flipped = hg::flipped_mode(g, std::max<std::size_t>(top, 1));
  r.scalars = {
      {"split_overlap_1_0", hg::split_overlap(1, 0, g)},
      {"sqrt_2_over_pi", std::sqrt(2.0 / std::numbers::pi)},
      {"flipped_c1", flipped.coeff(1).real()},
      {"flipped_partial_norm", flipped.norm_squared()},
      {"max_orthonormality_error", worst},
  };
}

}  // namespace

double RunResult::scalar(const std::string& name) const {
  for (const auto& [k, v] : scalars) {
    if (k == name) return v;
  }
  throw std::out_of_range("no scalar '" + name + "'");
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"snr", "sensitivity", "spectrum", "sweep", "phasescan", "modes"};
  return names;
}

RunResult run(const std::string& subcommand, const ExperimentConfig& config) {
  RunResult r;
  r.subcommand = subcommand;
  r.preset = config.preset;
  r.seed = config.trace.seed;
  echo_config(config, r);
  if (subcommand == "snr") {
    run_snr(config, r);
  } else if (subcommand == "sensitivity") {
    run_sensitivity(config, r);
  } else if (subcommand == "spectrum") {
    run_spectrum(config, r);
  } else if (subcommand == "sweep") {
    run_sweep(config, r);
  } else if (subcommand == "phasescan") {
    run_phasescan(config, r);
  } else if (subcommand == "modes") {
    run_modes(config, r);
  } else {
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  }
  return r;
}

}  // namespace sqwva::cli
