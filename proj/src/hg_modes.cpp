#include "sqwva/hg_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quadrature.hpp"
#include "sqwva/errors.hpp"

namespace sqwva::hg {

namespace {

// Integration window in units of w0. Tails past 8 w0 contribute < 1e-27.
constexpr double kHalfWidth = 8.0;

void check_index(std::size_t n) {
  if (n > kMaxMode) {
    throw TruncationError("mode index " + std::to_string(n) + " exceeds N_MAX = " +
                          std::to_string(kMaxMode));
  }
}

}  // namespace

void BeamGeometry::validate() const {
  if (!(std::isfinite(wavelength) && wavelength > 0.0)) throw DomainError("wavelength must be > 0");
  if (!(std::isfinite(waist_w0) && waist_w0 > 0.0)) throw DomainError("waist w0 must be > 0");
}

ModeExpansion::ModeExpansion(BeamGeometry geometry, std::size_t n_max) : geometry_(geometry) {
  check_index(n_max);
  geometry_.validate();
  coeffs_.assign(n_max + 1, Complex{});
}

ModeExpansion ModeExpansion::pure(BeamGeometry geometry, std::size_t n, std::size_t n_max) {
  check_index(n);
  if (n > n_max) throw TruncationError("pure mode index beyond expansion n_max");
  ModeExpansion e(geometry, n_max);
  e[n] = 1.0;
  return e;
}

Complex ModeExpansion::coeff(std::size_t n) const noexcept {
  return n < coeffs_.size() ? coeffs_[n] : Complex{};
}

double ModeExpansion::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

ModeExpansion& ModeExpansion::operator+=(const ModeExpansion& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

ModeExpansion& ModeExpansion::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

void mode_amplitudes_unit(double s, std::size_t n_max, std::vector<double>& out) {
  check_index(n_max);
  if (!std::isfinite(s)) throw DomainError("mode amplitude at non-finite position");
  out.resize(n_max + 1);
  // (2/pi)^(1/4)
  const double c0 = std::sqrt(std::sqrt(2.0 / std::numbers::pi));
  out[0] = c0 * std::exp(-s * s);
  if (n_max == 0) return;
  out[1] = 2.0 * s * out[0];
  for (std::size_t n = 1; n < n_max; ++n) {
    const double np1 = static_cast<double>(n + 1);
    out[n + 1] = (2.0 * s / std::sqrt(np1)) * out[n] - std::sqrt(static_cast<double>(n) / np1) * out[n - 1];
  }
}

double mode_amplitude_unit(std::size_t n, double s) {
  std::vector<double> u;
  mode_amplitudes_unit(s, n, u);
  return u[n];
}

double mode_amplitude(std::size_t n, double x, const BeamGeometry& g) {
  g.validate();
  if (!std::isfinite(x)) throw DomainError("mode amplitude at non-finite position");
  return mode_amplitude_unit(n, x / g.waist_w0) / std::sqrt(g.waist_w0);
}

double overlap(std::size_t m, std::size_t n, const BeamGeometry& g) {
  check_index(m);
  check_index(n);
  g.validate();
  const std::size_t top = std::max(m, n);
  auto f = [m, n, top](double s) {
    thread_local std::vector<double> u;
    mode_amplitudes_unit(s, top, u);
    return u[m] * u[n];
  };
  return detail::integrate(f, -kHalfWidth, kHalfWidth, "overlap");
}

double split_overlap(std::size_t m, std::size_t n, const BeamGeometry& g) {
  check_index(m);
  check_index(n);
  g.validate();
  // Even integrand: the two half-lines cancel identically.
  if ((m + n) % 2 == 0) return 0.0;
  const std::size_t top = std::max(m, n);
  auto f = [m, n, top](double s) {
    thread_local std::vector<double> u;
    mode_amplitudes_unit(s, top, u);
    return u[m] * u[n];
  };
  const double right = detail::integrate(f, 0.0, kHalfWidth, "split_overlap");
  const double left = detail::integrate(f, -kHalfWidth, 0.0, "split_overlap");
  return right - left;
}

ModeExpansion flipped_mode(const BeamGeometry& g, std::size_t n_max) {
  ModeExpansion e(g, n_max);
  for (std::size_t n = 1; n <= n_max; n += 2) e[n] = split_overlap(n, 0, g);
  return e;
}

ModeExpansion multiply_by_x(const ModeExpansion& e) {
  const std::size_t n_max = e.n_max();
  if (e.coeff(n_max) != Complex{}) {
    throw TruncationError("multiply_by_x would populate mode " + std::to_string(n_max + 1));
  }
  const double half_w0 = 0.5 * e.geometry().waist_w0;
  ModeExpansion out(e.geometry(), n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    const Complex c = e.coeff(n);
    if (c == Complex{}) continue;
    out[n + 1] += half_w0 * std::sqrt(static_cast<double>(n + 1)) * c;
    if (n > 0) out[n - 1] += half_w0 * std::sqrt(static_cast<double>(n)) * c;
  }
  return out;
}

TiltRegime tilt_regime(double k, const BeamGeometry& g) noexcept {
  const double kw = std::abs(k) * g.waist_w0;
  if (!std::isfinite(kw) || kw >= 1.0) return TiltRegime::invalid;
  if (kw > 0.1) return TiltRegime::degraded;
  return TiltRegime::first_order;
}

ModeExpansion apply_tilt(const ModeExpansion& e, double k) {
  if (tilt_regime(k, e.geometry()) == TiltRegime::invalid) {
    throw SmallAngleError("|k| w0 >= 1: first-order tilt expansion invalid");
  }
  if (k == 0.0) return e;
  ModeExpansion out = e;
  out += Complex{0.0, k} * multiply_by_x(e);
  return out;
}

ModeExpansion apply_tilt_exact(const ModeExpansion& e, double k) {
  const BeamGeometry& g = e.geometry();
  const std::size_t n_max = e.n_max();
  const double kw = k * g.waist_w0;
  if (!std::isfinite(kw)) throw DomainError("non-finite transverse momentum");
  ModeExpansion out(g, n_max);
  for (std::size_t m = 0; m <= n_max; ++m) {
    const Complex cm = e.coeff(m);
    if (cm == Complex{}) continue;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const std::size_t top = std::max(m, n);
      auto re = [m, n, top, kw](double s) {
        thread_local std::vector<double> u;
        mode_amplitudes_unit(s, top, u);
        return std::cos(kw * s) * u[m] * u[n];
      };
      auto im = [m, n, top, kw](double s) {
        thread_local std::vector<double> u;
        mode_amplitudes_unit(s, top, u);
        return std::sin(kw * s) * u[m] * u[n];
      };
      const Complex proj{detail::integrate(re, -kHalfWidth, kHalfWidth, "apply_tilt_exact"),
                         detail::integrate(im, -kHalfWidth, kHalfWidth, "apply_tilt_exact")};
      out[n] += cm * proj;
    }
  }
  return out;
}

}  // namespace sqwva::hg
