#pragma once

// One-dimensional Hermite-Gauss modes at the waist plane.
//
//   u_n(x) = (2/pi)^(1/4) / sqrt(2^n n! w0) * H_n(sqrt(2) x / w0) * exp(-x^2 / w0^2)
//
// normalized so that the integral of u_n^2 over the real line is 1. A tilt
// exp(ikx) couples neighbouring modes through the ladder relation
//
//   x u_n = (w0/2) (sqrt(n+1) u_{n+1} + sqrt(n) u_{n-1}),
//
// which is how a transverse momentum k shows up as TEM00 <-> TEM10 coupling.

#include <complex>
#include <cstddef>
#include <vector>

namespace sqwva::hg {

inline constexpr std::size_t kMaxMode = 16;

struct BeamGeometry {
  double wavelength;  // m
  double waist_w0;    // m

  // Throws DomainError unless both are finite and positive.
  void validate() const;
};

using Complex = std::complex<double>;

// Complex coefficients over u_0 .. u_n_max. Coefficients past n_max are zero.
class ModeExpansion {
 public:
  ModeExpansion(BeamGeometry geometry, std::size_t n_max);

  static ModeExpansion pure(BeamGeometry geometry, std::size_t n, std::size_t n_max = kMaxMode);

  const BeamGeometry& geometry() const noexcept { return geometry_; }
  std::size_t n_max() const noexcept { return coeffs_.size() - 1; }

  // Zero for n > n_max.
  Complex coeff(std::size_t n) const noexcept;
  Complex& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  double norm_squared() const noexcept;

  ModeExpansion& operator+=(const ModeExpansion& other);
  ModeExpansion& operator*=(Complex scale);
  friend ModeExpansion operator+(ModeExpansion a, const ModeExpansion& b) { return a += b; }
  friend ModeExpansion operator*(Complex s, ModeExpansion e) { return e *= s; }

 private:
  BeamGeometry geometry_;
  std::vector<Complex> coeffs_;
};

// u_n(x) in m^(-1/2), evaluated with the normalized three-term recurrence.
double mode_amplitude(std::size_t n, double x, const BeamGeometry& g);

// Same, for unit waist and dimensionless s = x / w0.
double mode_amplitude_unit(std::size_t n, double s);

// All of u_0 .. u_n_max at one point (unit waist).
void mode_amplitudes_unit(double s, std::size_t n_max, std::vector<double>& out);

// <u_m|u_n> by adaptive quadrature. Equals delta_mn to 1e-9.
double overlap(std::size_t m, std::size_t n, const BeamGeometry& g);

// Signed half-line overlap: int_0^inf u_m u_n - int_-inf^0 u_m u_n. This is
// what a detector split at x = 0 reads out; split_overlap(1, 0) = sqrt(2/pi).
double split_overlap(std::size_t m, std::size_t n, const BeamGeometry& g);

// Expansion of sign(x) u_0(x), the beam produced by a half-plane phase plate.
// Even coefficients are exactly zero; c_1 = split_overlap(1, 0).
ModeExpansion flipped_mode(const BeamGeometry& g, std::size_t n_max);

// Ladder relation applied coefficient-wise. Throws TruncationError if the
// input has a nonzero coefficient at n_max (result would leave the basis).
ModeExpansion multiply_by_x(const ModeExpansion& e);

enum class TiltRegime { first_order, degraded, invalid };

// first_order for |k| w0 <= 0.1, degraded below 1, invalid from 1 upwards.
TiltRegime tilt_regime(double k, const BeamGeometry& g) noexcept;

// First-order tilt: e + i k (x e). Throws SmallAngleError when |k| w0 >= 1.
ModeExpansion apply_tilt(const ModeExpansion& e, double k);

// Validation-only variant: projects exp(ikx) * field onto u_0 .. u_n_max by
// quadrature, with no small-angle truncation.
ModeExpansion apply_tilt_exact(const ModeExpansion& e, double k);

}  // namespace sqwva::hg
