#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <string>

#include "sqwva/errors.hpp"

namespace sqwva::detail {

inline constexpr double kQuadAbsTol = 1e-12;

// Adaptive 15-point Gauss-Kronrod on [a, b]; throws NumericalError when the
// error estimate stays above kQuadAbsTol.
template <class F>
double integrate(F&& f, double a, double b, const char* what) {
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 18, kQuadAbsTol, &error, &l1);
  if (!(error <= kQuadAbsTol)) throw NumericalError(std::string(what) + ": quadrature did not converge", error);
  return value;
}

}  // namespace sqwva::detail
