#pragma once

#include <complex>
#include <string>

#include "rho_forge/circle_spectral.hpp"

namespace rho_forge {

/// Unitary representation of Z, fixed by the image of the generator z.
class UnitaryRep {
 public:
  /// Throws NotUnitary when max|U^*U - I| > 1e-10.
  UnitaryRep(std::string label, ComplexMatrix generator_image);
  /// One-dimensional representation z -> e^{i theta}.
  static UnitaryRep character(double theta, std::string label = {});
  static UnitaryRep trivial() { return character(0.0, "trivial"); }

  const std::string& label() const { return label_; }
  Eigen::Index dimension() const { return image_.rows(); }
  const ComplexMatrix& generator_image() const { return image_; }

 private:
  std::string label_;
  ComplexMatrix image_;
};

/// Conjugacy class <z^n> in Z. Power 0 is the identity class, whose trace is the L2-trace.
struct DelocalizedClass {
  int power = 1;
  std::string label() const;
};

/// Integral of the step function against the normalized Haar measure d theta / 2 pi.
double l2_signature(const SignatureStepFunction& f);

/// Signature of B evaluated at the representation, sgn(lambda(B)).
int twisted_signature(const HermitianLaurentMatrix& b, const UnitaryRep& rep, const SpectralTolerances& tol = {});

/// Fourier coefficient c_n = (1/2 pi) int f(theta) e^{-i n theta} d theta, in closed form
/// from the arc endpoints. c_0 is the L2-signature.
std::complex<double> fourier_coefficient(const SignatureStepFunction& f, int n);

inline std::complex<double> delocalized_signature(const SignatureStepFunction& f, DelocalizedClass cls) {
  return fourier_coefficient(f, cls.power);
}

/// The center-valued signature. Z is abelian, so the center of its von Neumann
/// algebra is all of L-infinity(S^1) and this is the pointwise step function itself.
inline SignatureStepFunction center_valued_signature(const HermitianLaurentMatrix& b,
                                                     const SpectralTolerances& tol = {}) {
  return signature_step_function(b, tol);
}

}  // namespace rho_forge
