#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqwva/cli/config.hpp"

namespace sqwva::cli {

inline constexpr const char* kVersion = "0.1.0";

struct RunResult {
  std::string subcommand;
  std::string preset;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> config;    // SI echo
  std::map<std::string, std::string> settings;           // non-numeric config
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> warnings;

  double scalar(const std::string& name) const;  // throws std::out_of_range

  bool operator==(const RunResult&) const = default;
};

// snr, sensitivity, spectrum, sweep, phasescan, modes.
const std::vector<std::string>& subcommands();

RunResult run(const std::string& subcommand, const ExperimentConfig& config);

}  // namespace sqwva::cli
