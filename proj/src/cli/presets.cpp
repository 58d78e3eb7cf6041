#include "sqwva/cli/presets.hpp"

#include <string>

#include "sqwva/errors.hpp"

namespace sqwva::cli {

namespace {

// Shared optical setup: 1064 nm, w0 = 1.86 mm, 10 mW in, 260 uW out of the
// dark port, lever arm from the 0.10 pm / 7.83 prad pair.
ExperimentConfig common() {
  ExperimentConfig c;
  ifo::MeasurementConfig& m = c.trace.measurement;
  m.geometry = {1064e-9, 1.86e-3};
  m.input_power.watts = 10e-3;
  m.output_power.watts = 260e-6;
  m.input_phase_psi = 0.0;
  m.tilt_theta = 7.83e-12;
  m.lever_arm_l = 12.77e-3;
  m.integration_time_T = 1.0;
  c.probabilities = {0.26, 0.13, 0.052, 0.026};
  c.squeeze_levels_db = {0.0, 1.0, 2.0, 3.0};
  return c;
}

void low_frequency(ExperimentConfig& c) {
  c.trace.signal_frequency = 4e3;
  c.trace.rbw = 1.0;
  c.trace.sample_rate = 16e3;
  c.trace.duration = spectra::duration_for_averages(c.trace.sample_rate, c.trace.rbw, 256);
}

void high_frequency(ExperimentConfig& c) {
  c.trace.signal_frequency = 500e3;
  c.trace.rbw = 30e3;
  c.trace.sample_rate = 3e6;
  c.trace.duration = spectra::duration_for_averages(c.trace.sample_rate, c.trace.rbw, 1024);
}

}  // namespace

const std::vector<std::string_view>& preset_names() {
  static const std::vector<std::string_view> names{"fig2_postselection", "fig3b_lowfreq", "fig4b_phase_scan",
                                                   "fig5_highfreq"};
  return names;
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig c = common();
  c.preset = std::string(name);
  if (name == "fig2_postselection") {
    low_frequency(c);
    c.squeeze_db = 0.0;
    c.sweep = SweepKind::postselection;
  } else if (name == "fig3b_lowfreq") {
    low_frequency(c);
    c.squeeze_db = 2.0;
  } else if (name == "fig4b_phase_scan") {
    high_frequency(c);
    c.squeeze_db = 2.0;
    c.phase_points = 256;
  } else if (name == "fig5_highfreq") {
    high_frequency(c);
    c.squeeze_db = 2.0;
    c.trace.measurement.tilt_theta = 85e-12;
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  c.finalize();
  return c;
}

}  // namespace sqwva::cli
