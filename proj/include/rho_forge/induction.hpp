#pragma once

#include <complex>
#include <set>
#include <string>

#include "rho_forge/trace_functionals.hpp"

namespace rho_forge {

/// Which elements of a conjugacy class <g> of an ambient group lie in the image of Z,
/// recorded as the set of powers n with z^n in <g>.
class ClassIntersection {
 public:
  /// Throws InvalidArgument if 0 appears with other powers, or if the powers
  /// are not contained in {n, -n} for a single n.
  ClassIntersection(std::string label, std::set<int> powers);

  /// Z embedded centrally: the class of z^n is {z^n}.
  static ClassIntersection central(int power);

  const std::string& label() const { return label_; }
  const std::set<int>& powers() const { return powers_; }

 private:
  std::string label_;
  std::set<int> powers_;
};

/// Delocalized trace over <g> in the ambient group of the signature, as the sum of the
/// Z-traces over <g> intersected with Z. Power 0 contributes the L2-signature.
std::complex<double> induced_delocalized_signature(const SignatureStepFunction& f, const ClassIntersection& ci);

}  // namespace rho_forge
