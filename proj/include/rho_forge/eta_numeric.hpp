#pragma once

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "rho_forge/circle_spectral.hpp"

namespace rho_forge {

/// How tr(H e^{-tH^2}) is evaluated inside the heat integral.
enum class TracePath {
  /// Dense matrix exponential at every quadrature node; no diagonalization.
  kMatrixExponential,
  /// Closed sum over the eigenvalues computed once up front.
  kSpectral,
};

struct EtaOptions {
  double tolerance = 1e-6;
  /// Eigenvalues with |lambda| <= kernel_rel * ||H|| are treated as kernel.
  double kernel_rel = 1e-12;
  TracePath path = TracePath::kMatrixExponential;
};

struct EtaResult {
  double value = 0.0;
  /// Upper limit T of the t-integral.
  double truncation_T = 0.0;
  /// Analytic bound on the neglected integral over [T, infinity).
  double tail_bound = 0.0;
  /// (t, t^{-1/2} tr(H e^{-tH^2}) / sqrt(pi)) at the quadrature segment boundaries.
  std::vector<std::pair<double, double>> integrand_samples;
};

/// eta(H) = (1/sqrt(pi)) int_0^infinity t^{-1/2} tr(H e^{-tH^2}) dt for a finite Hermitian matrix.
/// Integrated in s = sqrt(t), which removes the endpoint singularity, over [0, sqrt(T)] with
/// T large enough that the erfc tail from the smallest nonzero |eigenvalue| is below
/// tolerance / 4. Throws NotHermitian.
EtaResult eta_heat_integral(const ComplexMatrix& h, const EtaOptions& options = {});

/// Spectral sign function: +1 on positive, -1 on negative, 0 on eigenvalues within zero_tol.
ComplexMatrix q_of(const ComplexMatrix& h, double zero_tol);

struct EtaSample {
  double theta;
  double eta;
  int signature;
  double error() const { return std::abs(eta - signature); }
};

/// theta -> eta(B(e^{i theta})) on a grid of grid_size angles offset by half a step,
/// paired with the step-function value at the same angle. grid_size must be >= 8.
std::vector<EtaSample> eta_field_on_circle(const HermitianLaurentMatrix& b, int grid_size,
                                           const EtaOptions& options = {}, const SpectralTolerances& tol = {});

/// Random Hermitian matrix Q D Q^* with Haar-like unitary Q and real spectrum D whose
/// magnitudes lie in [min_rel, 1] with random signs, so min|lambda| >= min_rel * ||H||.
ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng, double min_rel = 1e-3);

}  // namespace rho_forge
