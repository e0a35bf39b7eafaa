#pragma once

#include <numbers>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "rho_forge/errors.hpp"
#include "rho_forge/laurent_matrix.hpp"

namespace rho_forge {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerances shared by the circle computations.
struct SpectralTolerances {
  /// Unit-circle roots closer than this (radians) are one breakpoint.
  double root_merge = 1e-9;
  /// Eigenvalues with |lambda| <= zero_rel * scale count as zero; the scale is
  /// coefficient_scale() of the matrix being evaluated.
  double zero_rel = 1e-9;
};

struct Inertia {
  Eigen::Index n_plus = 0;
  Eigen::Index n_minus = 0;
  Eigen::Index n_zero = 0;

  Eigen::Index dim() const { return n_plus + n_minus + n_zero; }
  Eigen::Index signature() const { return n_plus - n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& h, double tol = 1e-10) {
  if (h.rows() != h.cols()) throw NotHermitian("matrix is not square");
  if (h.size() == 0) return;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol * scale) throw NotHermitian("matrix is not Hermitian");
}

/// Eigenvalue counts of a Hermitian matrix split at +-zero_tol.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& h, double zero_tol) {
  require_hermitian(h);
  using Plain = typename Derived::PlainObject;
  Inertia out;
  if (h.size() == 0) return out;
  const Plain sym = (h + h.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<Plain> solver(sym, Eigen::EigenvaluesOnly);
  for (const auto lambda : solver.eigenvalues()) {
    if (lambda > zero_tol)
      ++out.n_plus;
    else if (lambda < -zero_tol)
      ++out.n_minus;
    else
      ++out.n_zero;
  }
  return out;
}

/// Integer-valued step function on the circle. values[i] holds on the open arc
/// (breakpoints[i], breakpoints[i+1]); the last arc wraps through 2*pi.
class SignatureStepFunction {
 public:
  struct Arc {
    double start;
    double end;  // may exceed 2*pi on the wrapping arc
    int value;
  };

  /// Validates the invariants; throws InvalidArgument.
  SignatureStepFunction(int dim, std::vector<double> breakpoints, std::vector<int> values);
  static SignatureStepFunction constant(int dim, int value) { return {dim, {}, {value}}; }

  int dim() const { return dim_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<int>& values() const { return values_; }

  /// Arcs in breakpoint order. With no breakpoints, one arc [0, 2*pi).
  std::vector<Arc> arcs() const;
  /// Value of the arc containing theta (any real angle). A breakpoint belongs to the arc it starts.
  int value_at(double theta) const;
  /// Same function with every value negated.
  SignatureStepFunction negated() const;

  friend bool operator==(const SignatureStepFunction&, const SignatureStepFunction&) = default;

 private:
  int dim_;
  std::vector<double> breakpoints_;
  std::vector<int> values_;
};

/// Reduces an angle into [0, 2*pi).
double wrap_angle(double theta);

/// Upper bound for ||M(z)|| on the unit circle: max over entries of the sum of |coefficients|.
double coefficient_scale(const LaurentMatrix& m);

/// Angles in [0, 2*pi) where p(e^{i theta}) = 0, ascending, roots within merge_tol merged.
/// Throws ZeroPolynomial for p = 0.
std::vector<double> circle_roots(const LaurentPoly& p, double merge_tol = 1e-9);

/// Pointwise signature of B(e^{i theta}) on every arc between rank-drop angles.
/// Throws IdenticallySingular when det B = 0 and MidpointDegenerate when an arc
/// midpoint still has a kernel.
SignatureStepFunction signature_step_function(const HermitianLaurentMatrix& b, const SpectralTolerances& tol = {});

/// n_plus - n_minus of B(e^{i theta}); zero eigenvalues are ignored at rank-drop angles.
int sample_signature(const HermitianLaurentMatrix& b, double theta, const SpectralTolerances& tol = {});

}  // namespace rho_forge
