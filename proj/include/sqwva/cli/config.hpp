#pragma once

// Flat `key = value` experiment documents.
//
//   # fig. 3(b) with a 3 dB squeezer
//   squeeze = 3 dB
//   tilt = 7.83 prad
//   waist = 1.86 mm
//
// Physical quantities need a unit suffix; values are stored in SI. Missing
// keys keep the preset's value (fig3b_lowfreq when no preset is chosen).
// Unknown keys, malformed lines and violated invariants raise ConfigError
// naming the line and key.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqwva/spectra.hpp"

namespace sqwva::cli {

enum class SweepKind { postselection, squeezing };

struct ExperimentConfig {
  std::string preset = "fig3b_lowfreq";
  spectra::TraceConfig trace;
  double squeeze_db = 0.0;
  std::optional<double> phi;  // explicit relative phase; otherwise from P_out / P_in
  SweepKind sweep = SweepKind::postselection;
  std::vector<double> probabilities;
  std::vector<double> squeeze_levels_db;
  std::size_t phase_points = 256;
  std::size_t modes_max = 10;

  const ifo::MeasurementConfig& measurement() const { return trace.measurement; }

  // Recomputes derived fields (r, phi) and checks every invariant.
  void finalize();
};

// Every key accepted by parse_config, in documentation order.
const std::vector<std::string_view>& config_keys();

// Applies a document on top of `base` (usually a preset) and finalizes.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base);

// Value with unit suffix to SI, e.g. "260 uW" -> 2.6e-4. `kind` is one of
// length, angle, power, frequency, time, decibel.
double parse_quantity(std::string_view value, std::string_view kind);

}  // namespace sqwva::cli
