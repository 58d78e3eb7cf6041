#include "sqwva/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "spectra_internal.hpp"
#include "sqwva/detection.hpp"
#include "sqwva/errors.hpp"
#include "sqwva/rng.hpp"

namespace sqwva::spectra {

namespace {

constexpr std::size_t kMinSegment = 16;
constexpr std::size_t kMinAverages = 8;
constexpr double kFloorExclusionRbw = 3.0;

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::size_t TraceConfig::segment_length() const {
  return static_cast<std::size_t>(std::llround(sample_rate / rbw));
}

std::size_t TraceConfig::sample_count() const {
  return static_cast<std::size_t>(std::llround(duration * sample_rate));
}

ifo::MeasurementConfig TraceConfig::band_measurement() const {
  ifo::MeasurementConfig m = measurement;
  m.integration_time_T = 1.0 / rbw;
  return m;
}

void TraceConfig::validate() const {
  if (!(signal_frequency > 0.0 && std::isfinite(signal_frequency))) {
    throw ConfigError("signal_frequency must be > 0");
  }
  if (!(sample_rate > 2.0 * signal_frequency && std::isfinite(sample_rate))) {
    throw ConfigError("sample_rate must exceed twice signal_frequency (Nyquist)");
  }
  if (!(duration > 0.0 && std::isfinite(duration))) throw ConfigError("duration must be > 0");
  if (!(rbw > 0.0 && std::isfinite(rbw))) throw ConfigError("rbw must be > 0");
  if (rbw < 1.0 / duration) throw ConfigError("rbw must be >= 1 / duration");
  if (segment_length() < kMinSegment) throw ConfigError("segment length round(sample_rate / rbw) must be >= 16");
  const std::size_t n = segment_length();
  const std::size_t hop = n / 2;
  const std::size_t total = sample_count();
  if (total < n || (total - n) / hop + 1 < kMinAverages) {
    throw ConfigError("duration too short for 8 averaged segments at this rbw");
  }
  try {
    measurement.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("measurement: ") + e.what());
  }
}

double duration_for_averages(double sample_rate, double rbw, std::size_t averages) {
  if (!(sample_rate > 0.0 && rbw > 0.0) || averages == 0) {
    throw DomainError("duration_for_averages needs positive rate, rbw and count");
  }
  const auto n = static_cast<std::size_t>(std::llround(sample_rate / rbw));
  const std::size_t hop = n / 2;
  return static_cast<double>(n + (averages - 1) * hop) / sample_rate;
}

TraceModel trace_model(const TraceConfig& t) {
  const ifo::MeasurementConfig band = t.band_measurement();
  const det::DifferenceStatistics stats = det::difference_statistics(band);
  const double T = band.integration_time_T;
  const double flux = band.dark_photon_number() / T;
  const double v = band.effective_variance();
  TraceModel m{};
  m.dark_flux = flux;
  m.variance = v;
  m.noise_density = 2.0 * flux * v;
  m.snl_density = 2.0 * flux;
  m.sample_variance = t.include_noise ? flux * v * t.sample_rate : 0.0;
  m.tone_amplitude = t.include_signal ? 2.0 * stats.mean / T : 0.0;
  m.analytic_snr = t.include_signal ? stats.snr_linear : 0.0;
  return m;
}

PeakReadout peak_snr(const SpectrumEstimate& s, double f_signal) {
  if (s.psd.empty() || s.frequencies.size() != s.psd.size()) throw DomainError("empty spectrum");
  if (!(f_signal >= 0.0 && f_signal <= s.frequencies.back())) {
    throw DomainError("signal frequency outside the spectrum grid");
  }
  const double df = s.bin_width;
  const std::size_t bins = s.psd.size();
  const double position = f_signal / df;
  const auto center = static_cast<std::size_t>(std::llround(position));
  // A bin-centred tone puts all its power in the centre bin (rect) or the
  // centre and its two neighbours (Hann). Off-grid, the Hann main lobe spans
  // +-2 bins and rect leaks mostly into the nearest neighbour.
  const bool on_grid = std::abs(position - static_cast<double>(center)) < 1e-6;
  const std::size_t half_band = s.window == Window::hann ? (on_grid ? 1 : 2) : (on_grid ? 0 : 1);
  const std::size_t lo = center > half_band ? center - half_band : 0;
  const std::size_t hi = std::min(bins - 1, center + half_band);

  const double exclusion = std::max(kFloorExclusionRbw * s.rbw, static_cast<double>(half_band) * df);
  std::vector<double> outside;
  outside.reserve(bins);
  for (std::size_t k = 1; k + 1 < bins; ++k) {
    if (std::abs(s.frequencies[k] - f_signal) <= exclusion) continue;
    outside.push_back(s.psd[k]);
  }
  if (outside.empty()) throw NumericalError("no bins left to estimate the noise floor");
  const auto mid = outside.begin() + static_cast<std::ptrdiff_t>(outside.size() / 2);
  std::nth_element(outside.begin(), mid, outside.end());
  double floor = *mid;
  if (outside.size() % 2 == 0) {
    floor = 0.5 * (floor + *std::max_element(outside.begin(), mid));
  }

  PeakReadout r{};
  r.floor_density = floor;
  r.peak_bin = center;
  double band_power = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) band_power += s.psd[k] * df;
  const double noise_in_band = floor * df * static_cast<double>(hi - lo + 1);
  const double noise_in_rbw = floor * s.rbw;
  r.peak_power = band_power - noise_in_band + noise_in_rbw;
  if (!(noise_in_rbw > 0.0)) {
    throw NumericalError("zero noise floor: peak-to-floor ratio undefined");
  }
  r.peak_to_floor = r.peak_power / noise_in_rbw;
  r.peak_to_floor_db = r.peak_to_floor > 0.0 ? 10.0 * std::log10(r.peak_to_floor)
                                             : -std::numeric_limits<double>::infinity();
  r.snr_linear = r.peak_to_floor - 1.0;
  r.snr_db = r.snr_linear > 0.0 ? 10.0 * std::log10(r.snr_linear) : -std::numeric_limits<double>::infinity();
  return r;
}

std::vector<double> relative_to_snl_db(const SpectrumEstimate& s, double snl_density) {
  if (!(snl_density > 0.0)) throw DomainError("shot-noise density must be > 0");
  std::vector<double> out(s.psd.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = s.psd[k] > 0.0 ? 10.0 * std::log10(s.psd[k] / snl_density) : -std::numeric_limits<double>::infinity();
  }
  return out;
}

std::vector<PhaseScanPoint> local_phase_scan(const qs::QuadratureState& squeeze, std::size_t n_points) {
  if (n_points < 2) throw DomainError("phase scan needs at least 2 points");
  squeeze.validate();
  std::vector<PhaseScanPoint> out(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double psi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_points);
    out[i] = {psi, qs::quadrature_variance(squeeze, psi)};
  }
  return out;
}

namespace detail {

std::vector<double> make_window(Window w, std::size_t n) {
  std::vector<double> out(n, 1.0);
  if (w == Window::hann) {
    // Periodic Hann: exact 1/2 neighbours for a bin-centred tone, ENBW 1.5 bins.
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    }
  }
  return out;
}

void synthesize_block(const TraceModel& model, const TraceConfig& t, std::size_t block, std::span<double> out) {
  const double sigma = std::sqrt(model.sample_variance);
  const double fs = t.sample_rate;
  const double f = t.signal_frequency;
  rng::GaussianStream noise(t.seed, block);
  const std::size_t first = block * kBlockSize;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double idx = static_cast<double>(first + i);
    // Reduce the phase before scaling so long records keep full precision.
    const double cycles = std::fmod(f * idx, fs) / fs;
    double x = model.tone_amplitude * std::sin(2.0 * std::numbers::pi * cycles);
    if (sigma > 0.0) x += sigma * noise.next();
    out[i] = x;
  }
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  FftBuffers scratch(n);
  plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), scratch.in(), scratch.out(), FFTW_ESTIMATE);
  if (plan_ == nullptr) throw NumericalError("FFTW could not create a plan");
}

FftPlan::~FftPlan() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan_);
}

FftBuffers::FftBuffers(std::size_t n)
    : in_(fftw_alloc_real(n)), out_(fftw_alloc_complex(n / 2 + 1)) {
  if (in_ == nullptr || out_ == nullptr) {
    fftw_free(in_);
    fftw_free(out_);
    throw std::bad_alloc();
  }
}

FftBuffers::~FftBuffers() {
  fftw_free(in_);
  fftw_free(out_);
}

WelchLayout welch_layout(const TimeSeries& ts, double rbw) {
  if (!(ts.sample_rate > 0.0)) throw ConfigError("time series has no sample rate");
  if (!(rbw > 0.0)) throw ConfigError("rbw must be > 0");
  const auto n = static_cast<std::size_t>(std::llround(ts.sample_rate / rbw));
  if (n < kMinSegment) throw ConfigError("segment length must be >= 16 samples");
  const std::size_t hop = n / 2;
  if (ts.samples.size() < n || (ts.samples.size() - n) / hop + 1 < kMinAverages) {
    throw ConfigError("time series too short for 8 averaged segments");
  }
  return {n, hop, (ts.samples.size() - n) / hop + 1, n / 2 + 1, ts.sample_rate};
}

void segment_periodogram(const TimeSeries& ts, const WelchLayout& layout, std::size_t index,
                         std::span<const double> window, double window_power, const FftPlan& plan,
                         FftBuffers& buffers, std::span<double> psd) {
  const std::size_t n = layout.segment_length;
  const double* x = ts.samples.data() + index * layout.hop;
  double* in = buffers.in();
  for (std::size_t i = 0; i < n; ++i) in[i] = x[i] * window[i];
  fftw_execute_dft_r2c(plan.get(), in, buffers.out());
  const fftw_complex* out = buffers.out();
  const double scale = 1.0 / (layout.sample_rate * window_power);
  for (std::size_t k = 0; k < layout.bins; ++k) {
    double p = (out[k][0] * out[k][0] + out[k][1] * out[k][1]) * scale;
    const bool nyquist = (n % 2 == 0) && (k == n / 2);
    if (k != 0 && !nyquist) p *= 2.0;
    psd[k] = p;
  }
}

SpectrumEstimate finish_estimate(const WelchLayout& layout, std::vector<double> accumulated, double rbw,
                                 Window window) {
  SpectrumEstimate s;
  s.bin_width = layout.sample_rate / static_cast<double>(layout.segment_length);
  s.frequencies.resize(layout.bins);
  for (std::size_t k = 0; k < layout.bins; ++k) s.frequencies[k] = static_cast<double>(k) * s.bin_width;
  const double inv = 1.0 / static_cast<double>(layout.segments);
  for (double& p : accumulated) p *= inv;
  s.psd = std::move(accumulated);
  s.rbw = rbw;
  s.n_averages = layout.segments;
  s.window = window;
  return s;
}

}  // namespace detail

}  // namespace sqwva::spectra
