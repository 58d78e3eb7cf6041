#include <exception>

#include "sqwva/detection.hpp"
#include "sqwva/errors.hpp"
#include "sqwva/spectra.hpp"

namespace sqwva::spectra {

namespace {

std::vector<SweepRow> evaluate(const std::vector<ifo::MeasurementConfig>& configs) {
  for (const auto& c : configs) c.validate();
  std::vector<SweepRow> rows(configs.size());
  const auto n = static_cast<std::ptrdiff_t>(configs.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& c = configs[static_cast<std::size_t>(i)];
    const det::Snr s = det::snr(c);
    rows[static_cast<std::size_t>(i)] = SweepRow{
        .postselection_probability = c.postselection_probability(),
        .phi = c.relative_phase_phi,
        .input_power = c.input_power.watts,
        .squeeze_db = qs::r_to_db(c.squeeze.r),
        .snr_linear = s.linear,
        .snr_db = s.db,
    };
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> postselection_sweep(const ifo::MeasurementConfig& base,
                                          const std::vector<double>& probabilities) {
  std::vector<ifo::MeasurementConfig> configs;
  configs.reserve(probabilities.size());
  for (double p : probabilities) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("postselection probability must lie in (0, 1)");
    ifo::MeasurementConfig c = base;
    c.input_power = qs::OpticalPower::from_watts(base.output_power.watts / p);
    c.relative_phase_phi = ifo::phi_for_probability(p);
    configs.push_back(c);
  }
  return evaluate(configs);
}

std::vector<SweepRow> squeezing_sweep(const ifo::MeasurementConfig& base, const std::vector<double>& levels_db) {
  std::vector<ifo::MeasurementConfig> configs;
  configs.reserve(levels_db.size());
  for (double db : levels_db) {
    ifo::MeasurementConfig c = base;
    c.squeeze.r = qs::db_to_r(db);
    configs.push_back(c);
  }
  return evaluate(configs);
}

}  // namespace sqwva::spectra
