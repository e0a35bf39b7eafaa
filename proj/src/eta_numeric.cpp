#include "rho_forge/eta_numeric.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace rho_forge {

namespace {

// Smallest s with count * erfc(s * lambda_min) <= bound.
double truncation_point(double lambda_min, Eigen::Index count, double bound) {
  double lo = 0.0;
  double hi = 1.0;
  auto tail = [&](double x) { return static_cast<double>(count) * std::erfc(x); };
  while (tail(hi) > bound) hi *= 2.0;
  for (int i = 0; i < 100 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) > bound ? lo : hi) = mid;
  }
  return hi / lambda_min;
}

}  // namespace

EtaResult eta_heat_integral(const ComplexMatrix& h, const EtaOptions& options) {
  require_hermitian(h);
  EtaResult result;
  if (h.size() == 0) return result;
  const ComplexMatrix sym = (h + h.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& spectrum = solver.eigenvalues();
  const double norm = spectrum.cwiseAbs().maxCoeff();
  const double kernel_tol = options.kernel_rel * norm;

  std::vector<double> nonzero;
  for (double lambda : spectrum)
    if (std::abs(lambda) > kernel_tol) nonzero.push_back(lambda);
  if (nonzero.empty()) return result;

  double lambda_min = std::abs(nonzero.front());
  for (double lambda : nonzero) lambda_min = std::min(lambda_min, std::abs(lambda));
  const auto count = static_cast<Eigen::Index>(nonzero.size());
  const double s_max = truncation_point(lambda_min, count, options.tolerance / 4);
  result.truncation_T = s_max * s_max;
  result.tail_bound = static_cast<double>(count) * std::erfc(s_max * lambda_min);

  const ComplexMatrix h2 = sym * sym;
  auto trace_heat = [&](double s) -> double {
    if (options.path == TracePath::kSpectral) {
      double sum = 0.0;
      for (double lambda : nonzero) sum += lambda * std::exp(-s * s * lambda * lambda);
      return sum;
    }
    const ComplexMatrix heat = (-(s * s) * h2).exp();
    return (sym * heat).trace().real();
  };

  // Geometric segments: the integrand varies on the scale 1/|lambda| for every
  // eigenvalue, from 1/lambda_max near the origin to 1/lambda_min in the tail.
  std::vector<double> knots{0.0};
  for (double s = 0.25 / norm; s < s_max; s *= 2.0) knots.push_back(s);
  knots.push_back(s_max);

  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;
  double integral = 0.0;
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    integral += Quadrature::integrate(trace_heat, knots[i], knots[i + 1], 6, 1e-11);
    const double s = knots[i + 1];
    result.integrand_samples.emplace_back(s * s, trace_heat(s) / (s * std::sqrt(std::numbers::pi)));
  }
  result.value = 2.0 / std::sqrt(std::numbers::pi) * integral;
  return result;
}

ComplexMatrix q_of(const ComplexMatrix& h, double zero_tol) {
  require_hermitian(h);
  if (h.size() == 0) return h;
  const ComplexMatrix sym = (h + h.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  Eigen::VectorXd signs = solver.eigenvalues().unaryExpr(
      [zero_tol](double lambda) { return lambda > zero_tol ? 1.0 : (lambda < -zero_tol ? -1.0 : 0.0); });
  const ComplexMatrix& v = solver.eigenvectors();
  return v * signs.cast<std::complex<double>>().asDiagonal() * v.adjoint();
}

std::vector<EtaSample> eta_field_on_circle(const HermitianLaurentMatrix& b, int grid_size, const EtaOptions& options,
                                           const SpectralTolerances& tol) {
  if (grid_size < 8) throw InvalidArgument("eta field grid needs at least 8 points");
  const SignatureStepFunction f = signature_step_function(b, tol);
  const double step = kTwoPi / grid_size;
  std::vector<EtaSample> out;
  out.reserve(static_cast<size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) {
    double theta = (k + 0.5) * step;
    for (double bp : f.breakpoints())
      if (std::abs(theta - bp) < 1e-6) theta += 0.25 * step;
    const EtaResult eta = eta_heat_integral(evaluate(b.matrix(), theta), options);
    out.push_back({theta, eta.value, f.value_at(theta)});
  }
  return out;
}

ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng, double min_rel) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> magnitude(min_rel, 1.0);
  std::bernoulli_distribution negative;
  ComplexMatrix g(dim, dim);
  for (Eigen::Index k = 0; k < g.size(); ++k) g.data()[k] = {gauss(rng), gauss(rng)};
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
  Eigen::VectorXd d(dim);
  for (Eigen::Index i = 0; i < dim; ++i) d(i) = (negative(rng) ? -1.0 : 1.0) * magnitude(rng);
  ComplexMatrix h = q * d.cast<std::complex<double>>().asDiagonal() * q.adjoint();
  return (h + h.adjoint()) / 2;
}

}  // namespace rho_forge
