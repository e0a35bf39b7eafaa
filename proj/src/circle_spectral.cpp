#include "rho_forge/circle_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace rho_forge {

using Eigen::Index;

SignatureStepFunction::SignatureStepFunction(int dim, std::vector<double> breakpoints, std::vector<int> values)
    : dim_(dim), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (dim_ < 0) throw InvalidArgument("negative dimension");
  if (values_.size() != std::max<size_t>(1, breakpoints_.size()))
    throw InvalidArgument("step function needs one value per arc");
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    const double b = breakpoints_[i];
    if (!(b >= 0.0 && b < kTwoPi)) throw InvalidArgument("breakpoint outside [0, 2pi)");
    if (i > 0 && !(b > breakpoints_[i - 1])) throw InvalidArgument("breakpoints not strictly increasing");
  }
  for (int v : values_)
    if (std::abs(v) > dim_) throw InvalidArgument("signature value exceeds the dimension");
}

std::vector<SignatureStepFunction::Arc> SignatureStepFunction::arcs() const {
  if (breakpoints_.empty()) return {{0.0, kTwoPi, values_.front()}};
  std::vector<Arc> out;
  const size_t k = breakpoints_.size();
  for (size_t i = 0; i + 1 < k; ++i) out.push_back({breakpoints_[i], breakpoints_[i + 1], values_[i]});
  out.push_back({breakpoints_[k - 1], breakpoints_[0] + kTwoPi, values_[k - 1]});
  return out;
}

int SignatureStepFunction::value_at(double theta) const {
  if (breakpoints_.empty()) return values_.front();
  theta = wrap_angle(theta);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), theta);
  if (it == breakpoints_.begin()) return values_.back();
  return values_[static_cast<size_t>(it - breakpoints_.begin() - 1)];
}

SignatureStepFunction SignatureStepFunction::negated() const {
  std::vector<int> v = values_;
  for (int& x : v) x = -x;
  return {dim_, breakpoints_, std::move(v)};
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double coefficient_scale(const LaurentMatrix& m) {
  double scale = 0.0;
  for (Index k = 0; k < m.size(); ++k) {
    double s = 0.0;
    for (const auto& [e, c] : m.data()[k].terms()) s += std::abs(c.to_complex());
    scale = std::max(scale, s);
  }
  return scale;
}

namespace {

constexpr double kUnitModulusTol = 1e-8;

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs) {
  // coeffs[k] multiplies z^k, coeffs.back() = 1.
  const Index deg = static_cast<Index>(coeffs.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<size_t>(i)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::complex<double> newton_polish(const std::vector<std::complex<double>>& coeffs, std::complex<double> r) {
  for (int iter = 0; iter < 8; ++iter) {
    std::complex<double> f = 0;
    std::complex<double> df = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      df = df * r + f;
      f = f * r + *it;
    }
    if (std::abs(df) == 0.0) break;
    const std::complex<double> step = f / df;
    r -= step;
    if (std::abs(step) <= 1e-16 * std::abs(r)) break;
  }
  return r;
}

}  // namespace

std::vector<double> circle_roots(const LaurentPoly& p, double merge_tol) {
  if (p.is_zero()) throw ZeroPolynomial("circle_roots of the zero polynomial");
  // The squarefree part has only simple roots, so the companion eigenvalues are
  // well conditioned even where p has a double root on the circle.
  const LaurentPoly q = squarefree_part(p);
  const int deg = q.high_exponent();
  if (deg == 0) return {};
  std::vector<std::complex<double>> coeffs(static_cast<size_t>(deg) + 1);
  for (const auto& [e, c] : q.terms()) coeffs[static_cast<size_t>(e)] = c.to_complex();

  std::vector<double> angles;
  for (auto r : polynomial_roots(coeffs)) {
    r = newton_polish(coeffs, r);
    if (std::abs(std::abs(r) - 1.0) > kUnitModulusTol) continue;
    angles.push_back(wrap_angle(std::arg(r)));
  }
  std::sort(angles.begin(), angles.end());

  std::vector<double> merged;
  for (double a : angles)
    if (merged.empty() || a - merged.back() > merge_tol) merged.push_back(a);
  // A root just below 2*pi coincides with one at 0.
  while (merged.size() > 1 && merged.back() - kTwoPi + merge_tol >= merged.front()) merged.pop_back();
  if (merged.size() == 1 && kTwoPi - merged.front() <= merge_tol) merged.front() = 0.0;
  return merged;
}

SignatureStepFunction signature_step_function(const HermitianLaurentMatrix& b, const SpectralTolerances& tol) {
  const int n = static_cast<int>(b.size());
  if (n == 0) return SignatureStepFunction::constant(0, 0);
  const LaurentPoly det = det_laurent(b.matrix());
  if (det.is_zero()) throw IdenticallySingular("det B vanishes identically on the circle");

  const std::vector<double> breakpoints = circle_roots(det, tol.root_merge);
  const double zero_tol = tol.zero_rel * coefficient_scale(b.matrix());

  auto arc_value = [&](double mid) {
    const Inertia in = inertia(evaluate(b.matrix(), mid), zero_tol);
    if (in.n_zero > 0) throw MidpointDegenerate("kernel at arc midpoint theta = " + std::to_string(mid));
    return static_cast<int>(in.signature());
  };

  if (breakpoints.empty()) return {n, {}, {arc_value(0.0)}};
  SignatureStepFunction skeleton(n, breakpoints, std::vector<int>(breakpoints.size(), 0));
  std::vector<int> values;
  for (const auto& arc : skeleton.arcs()) values.push_back(arc_value(0.5 * (arc.start + arc.end)));
  return {n, breakpoints, std::move(values)};
}

int sample_signature(const HermitianLaurentMatrix& b, double theta, const SpectralTolerances& tol) {
  const double zero_tol = tol.zero_rel * coefficient_scale(b.matrix());
  return static_cast<int>(inertia(evaluate(b.matrix(), theta), zero_tol).signature());
}

}  // namespace rho_forge
