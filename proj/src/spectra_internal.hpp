#pragma once

// Per-block and per-segment work shared by the OpenMP kernels and their
// serial references. Both drivers call exactly these functions and reduce in
// segment order, so their outputs agree bit for bit.

#include <fftw3.h>

#include <cstddef>
#include <span>
#include <vector>

#include "sqwva/spectra.hpp"

namespace sqwva::spectra::detail {

std::vector<double> make_window(Window w, std::size_t n);

void synthesize_block(const TraceModel& model, const TraceConfig& t, std::size_t block, std::span<double> out);

class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const noexcept { return n_; }
  fftw_plan get() const noexcept { return plan_; }

 private:
  std::size_t n_;
  fftw_plan plan_;
};

// One thread's FFT scratch space.
class FftBuffers {
 public:
  explicit FftBuffers(std::size_t n);
  ~FftBuffers();
  FftBuffers(const FftBuffers&) = delete;
  FftBuffers& operator=(const FftBuffers&) = delete;

  double* in() noexcept { return in_; }
  fftw_complex* out() noexcept { return out_; }

 private:
  double* in_;
  fftw_complex* out_;
};

struct WelchLayout {
  std::size_t segment_length;
  std::size_t hop;
  std::size_t segments;
  std::size_t bins;  // segment_length / 2 + 1
  double sample_rate;
};

// Throws ConfigError for segments < 16 samples or fewer than 8 segments.
WelchLayout welch_layout(const TimeSeries& ts, double rbw);

// One-sided modified periodogram of segment `index`, written to `psd`.
void segment_periodogram(const TimeSeries& ts, const WelchLayout& layout, std::size_t index,
                         std::span<const double> window, double window_power, const FftPlan& plan,
                         FftBuffers& buffers, std::span<double> psd);

SpectrumEstimate finish_estimate(const WelchLayout& layout, std::vector<double> accumulated, double rbw,
                                 Window window);

}  // namespace sqwva::spectra::detail
