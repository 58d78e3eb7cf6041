#pragma once

#include <string_view>
#include <vector>

#include "sqwva/cli/config.hpp"

namespace sqwva::cli {

// fig2_postselection, fig3b_lowfreq, fig4b_phase_scan, fig5_highfreq.
const std::vector<std::string_view>& preset_names();

// Throws ConfigError for an unknown name.
ExperimentConfig preset(std::string_view name);

}  // namespace sqwva::cli
