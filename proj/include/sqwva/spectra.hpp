#pragma once

// Monte Carlo photocurrent synthesis and spectrum-analyzer style readout.
//
// The simulated record is the dark-port difference photon rate (photons/s).
// Shot noise is white with one-sided density 2 Phi' V, where Phi' is the
// dark-port photon flux and V the detected quadrature variance. The tilt is a
// tone at the signal frequency whose amplitude makes the bin power ratio
// equal the analytic count-domain SNR for an integration time T = 1/RBW:
//
//   tone power a^2/2 = SNR(T = 1/RBW) * 2 Phi' V * RBW.
//
// With this mapping a tone 3 dB above the floor is an SNR of exactly 1.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqwva/interferometer.hpp"
#include "sqwva/quantum_state.hpp"

namespace sqwva::spectra {

enum class Window { hann, rect };

struct TraceConfig {
  ifo::MeasurementConfig measurement;
  double signal_frequency = 4e3;  // Hz
  double sample_rate = 16e3;      // Hz
  double duration = 128.5;        // s
  double rbw = 1.0;               // Hz
  std::uint64_t seed = 20240601;
  Window window = Window::hann;
  bool include_noise = true;
  bool include_signal = true;

  std::size_t segment_length() const;  // round(sample_rate / rbw)
  std::size_t sample_count() const;    // round(duration * sample_rate)
  // Measurement with T replaced by 1 / RBW.
  ifo::MeasurementConfig band_measurement() const;
  // Throws ConfigError when the trace cannot be synthesized or analyzed.
  void validate() const;
};

// Duration giving exactly `averages` half-overlapping segments.
double duration_for_averages(double sample_rate, double rbw, std::size_t averages);

struct TimeSeries {
  double sample_rate = 0.0;
  std::vector<double> samples;
};

struct SpectrumEstimate {
  std::vector<double> frequencies;  // Hz, uniform from 0
  std::vector<double> psd;          // one-sided, units^2 / Hz
  double rbw = 0.0;                 // requested resolution bandwidth, Hz
  double bin_width = 0.0;           // sample_rate / segment_length
  std::size_t n_averages = 0;
  Window window = Window::hann;
};

// Synthesis blocks: stream b of the run's seed covers samples
// [b * kBlockSize, (b + 1) * kBlockSize).
inline constexpr std::size_t kBlockSize = 4096;

// Model constants for a trace (rate units).
struct TraceModel {
  double dark_flux;          // Phi', photons / s
  double variance;           // V, shot-noise units
  double noise_density;      // 2 Phi' V, one-sided
  double snl_density;        // 2 Phi'
  double sample_variance;    // Phi' V f_s
  double tone_amplitude;     // a
  double analytic_snr;       // SNR at T = 1 / RBW
};

TraceModel trace_model(const TraceConfig& t);

// OpenMP over synthesis blocks; bit-identical to serial::simulate_photocurrent.
TimeSeries simulate_photocurrent(const TraceConfig& t);

// Averaged modified periodogram, 50% overlap, segment = round(fs / rbw).
// OpenMP over segments; bit-identical to serial::welch_psd.
SpectrumEstimate welch_psd(const TimeSeries& ts, double rbw, Window window);

struct PeakReadout {
  double floor_density;       // median PSD outside the signal neighbourhood
  double peak_power;          // tone band power with the floor removed, + floor * RBW
  double peak_to_floor;       // peak_power / (floor * RBW); 1 for no signal
  double peak_to_floor_db;
  double snr_linear;          // peak_to_floor - 1
  double snr_db;
  std::size_t peak_bin;
};

// Spectrum-analyzer marker readout at f_signal. DomainError if f_signal is
// outside the frequency grid.
PeakReadout peak_snr(const SpectrumEstimate& s, double f_signal);

// psd / snl_density in dB, bin by bin.
std::vector<double> relative_to_snl_db(const SpectrumEstimate& s, double snl_density);

struct PhaseScanPoint {
  double psi;
  double variance;
};

// quadrature_variance over psi in [0, 2 pi), n_points evenly spaced.
std::vector<PhaseScanPoint> local_phase_scan(const qs::QuadratureState& squeeze, std::size_t n_points);

struct SweepRow {
  double postselection_probability;
  double phi;
  double input_power;  // W
  double squeeze_db;
  double snr_linear;
  double snr_db;
};

// Fixed output power; input power P_out / p_f and phi from p_f for each entry.
std::vector<SweepRow> postselection_sweep(const ifo::MeasurementConfig& base,
                                          const std::vector<double>& probabilities);

// Same measurement at each squeezing level (dB).
std::vector<SweepRow> squeezing_sweep(const ifo::MeasurementConfig& base, const std::vector<double>& levels_db);

namespace serial {
// Reference implementations kept for testing and benchmarking.
TimeSeries simulate_photocurrent(const TraceConfig& t);
SpectrumEstimate welch_psd(const TimeSeries& ts, double rbw, Window window);
}  // namespace serial

}  // namespace sqwva::spectra
