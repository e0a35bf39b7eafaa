#include "rho_forge/induction.hpp"

#include <cstdlib>

namespace rho_forge {

ClassIntersection::ClassIntersection(std::string label, std::set<int> powers)
    : label_(std::move(label)), powers_(std::move(powers)) {
  if (powers_.contains(0) && powers_.size() != 1)
    throw InvalidArgument("the identity class meets Z only in the identity");
  if (!powers_.empty() && std::abs(*powers_.begin()) != std::abs(*powers_.rbegin()))
    throw InvalidArgument("a finite class can meet Z only in {z^n, z^-n}");
}

ClassIntersection ClassIntersection::central(int power) {
  return {DelocalizedClass{power}.label(), {power}};
}

std::complex<double> induced_delocalized_signature(const SignatureStepFunction& f, const ClassIntersection& ci) {
  std::complex<double> sum = 0.0;
  for (int n : ci.powers()) sum += fourier_coefficient(f, n);
  return sum;
}

}  // namespace rho_forge
