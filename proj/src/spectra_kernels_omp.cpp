#include <omp.h>

#include <algorithm>
#include <numeric>

#include "spectra_internal.hpp"
#include "sqwva/spectra.hpp"

namespace sqwva::spectra {

namespace {
// Segments per parallel batch; bounds the per-segment scratch matrix.
constexpr std::size_t kSegmentBatch = 64;
}  // namespace

TimeSeries simulate_photocurrent(const TraceConfig& t) {
  t.validate();
  const TraceModel model = trace_model(t);
  TimeSeries ts{t.sample_rate, std::vector<double>(t.sample_count())};
  const std::size_t total = ts.samples.size();
  const auto blocks = static_cast<std::ptrdiff_t>((total + kBlockSize - 1) / kBlockSize);
  double* data = ts.samples.data();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const std::size_t first = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t len = std::min(kBlockSize, total - first);
    detail::synthesize_block(model, t, static_cast<std::size_t>(b), std::span<double>(data + first, len));
  }
  return ts;
}

SpectrumEstimate welch_psd(const TimeSeries& ts, double rbw, Window window) {
  const detail::WelchLayout layout = detail::welch_layout(ts, rbw);
  const std::vector<double> w = detail::make_window(window, layout.segment_length);
  const double window_power = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
  const detail::FftPlan plan(layout.segment_length);

  std::vector<double> acc(layout.bins, 0.0);
  std::vector<double> batch(kSegmentBatch * layout.bins);

  for (std::size_t start = 0; start < layout.segments; start += kSegmentBatch) {
    const std::size_t count = std::min(kSegmentBatch, layout.segments - start);

#pragma omp parallel
    {
      detail::FftBuffers buffers(layout.segment_length);
#pragma omp for schedule(static)
      for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(count); ++j) {
        const auto row = static_cast<std::size_t>(j);
        detail::segment_periodogram(ts, layout, start + row, w, window_power, plan, buffers,
                                    std::span<double>(batch.data() + row * layout.bins, layout.bins));
      }
    }

    // Reduce in segment order so the sum matches the serial reference exactly.
    for (std::size_t row = 0; row < count; ++row) {
      const double* p = batch.data() + row * layout.bins;
      for (std::size_t k = 0; k < layout.bins; ++k) acc[k] += p[k];
    }
  }
  return detail::finish_estimate(layout, std::move(acc), rbw, window);
}

}  // namespace sqwva::spectra
