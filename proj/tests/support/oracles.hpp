#pragma once

// Independent reference computations. These deliberately avoid the closed-form
// paths they are used to check.

#include <complex>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rho_forge/circle_spectral.hpp"

namespace rho_forge::testing {

/// (1/2pi) int_0^{2pi} sgn(B(e^{i theta})) e^{-i n theta} d theta by adaptive Gauss-Kronrod
/// on each arc between consecutive breakpoints, with the integrand's signature taken
/// pointwise from a fresh inertia count at every node (not from the step function values).
inline std::complex<double> quadrature_fourier(const HermitianLaurentMatrix& b, const std::vector<double>& breakpoints,
                                               int n) {
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 21>;
  std::vector<double> knots = breakpoints;
  if (knots.empty()) knots.push_back(0.0);
  knots.push_back(knots.front() + kTwoPi);
  double re = 0.0;
  double im = 0.0;
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    auto f_re = [&](double t) { return sample_signature(b, t) * std::cos(n * t); };
    auto f_im = [&](double t) { return -sample_signature(b, t) * std::sin(n * t); };
    re += Quadrature::integrate(f_re, knots[i], knots[i + 1], 10, 1e-14);
    im += Quadrature::integrate(f_im, knots[i], knots[i + 1], 10, 1e-14);
  }
  return {re / kTwoPi, im / kTwoPi};
}

}  // namespace rho_forge::testing
