#include "rho_forge/trace_functionals.hpp"

#include <cmath>

namespace rho_forge {

UnitaryRep::UnitaryRep(std::string label, ComplexMatrix generator_image)
    : label_(std::move(label)), image_(std::move(generator_image)) {
  if (image_.rows() != image_.cols() || image_.rows() == 0) throw NotUnitary("representation matrix must be square and nonempty");
  const ComplexMatrix id = ComplexMatrix::Identity(image_.rows(), image_.cols());
  if ((image_.adjoint() * image_ - id).cwiseAbs().maxCoeff() > 1e-10)
    throw NotUnitary("representation '" + label_ + "' is not unitary");
}

UnitaryRep UnitaryRep::character(double theta, std::string label) {
  if (label.empty()) label = "exp(i*" + std::to_string(theta) + ")";
  ComplexMatrix u(1, 1);
  u(0, 0) = std::polar(1.0, theta);
  return {std::move(label), std::move(u)};
}

std::string DelocalizedClass::label() const {
  if (power == 0) return "<e>";
  if (power == 1) return "<z>";
  return "<z^" + std::to_string(power) + ">";
}

double l2_signature(const SignatureStepFunction& f) {
  if (f.breakpoints().empty()) return f.values().front();
  double sum = 0.0;
  for (const auto& arc : f.arcs()) sum += arc.value * (arc.end - arc.start);
  return sum / kTwoPi;
}

int twisted_signature(const HermitianLaurentMatrix& b, const UnitaryRep& rep, const SpectralTolerances& tol) {
  const ComplexMatrix m = substitute_unitary(b.matrix(), rep.generator_image());
  const double zero_tol = tol.zero_rel * coefficient_scale(b.matrix());
  return static_cast<int>(inertia(m, zero_tol).signature());
}

std::complex<double> fourier_coefficient(const SignatureStepFunction& f, int n) {
  if (n == 0) return l2_signature(f);
  if (f.breakpoints().empty()) return 0.0;
  // int_a^b e^{-i n t} dt = (e^{-i n b} - e^{-i n a}) / (-i n)
  const std::complex<double> denom(0.0, -kTwoPi * n);
  std::complex<double> sum = 0.0;
  for (const auto& arc : f.arcs())
    sum += static_cast<double>(arc.value) * (std::polar(1.0, -n * arc.end) - std::polar(1.0, -n * arc.start));
  return sum / denom;
}

}  // namespace rho_forge
