#include <algorithm>
#include <numeric>

#include "spectra_internal.hpp"
#include "sqwva/spectra.hpp"

namespace sqwva::spectra::serial {

TimeSeries simulate_photocurrent(const TraceConfig& t) {
  t.validate();
  const TraceModel model = trace_model(t);
  TimeSeries ts{t.sample_rate, std::vector<double>(t.sample_count())};
  const std::size_t total = ts.samples.size();
  const std::size_t blocks = (total + kBlockSize - 1) / kBlockSize;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t first = b * kBlockSize;
    const std::size_t len = std::min(kBlockSize, total - first);
    detail::synthesize_block(model, t, b, std::span<double>(ts.samples.data() + first, len));
  }
  return ts;
}

SpectrumEstimate welch_psd(const TimeSeries& ts, double rbw, Window window) {
  const detail::WelchLayout layout = detail::welch_layout(ts, rbw);
  const std::vector<double> w = detail::make_window(window, layout.segment_length);
  const double window_power = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
  const detail::FftPlan plan(layout.segment_length);
  detail::FftBuffers buffers(layout.segment_length);
  std::vector<double> acc(layout.bins, 0.0);
  std::vector<double> psd(layout.bins);
  for (std::size_t s = 0; s < layout.segments; ++s) {
    detail::segment_periodogram(ts, layout, s, w, window_power, plan, buffers, psd);
    for (std::size_t k = 0; k < layout.bins; ++k) acc[k] += psd[k];
  }
  return detail::finish_estimate(layout, std::move(acc), rbw, window);
}

}  // namespace sqwva::spectra::serial
