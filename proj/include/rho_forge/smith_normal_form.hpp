#pragma once

#include <string>
#include <vector>

#include "rho_forge/laurent_matrix.hpp"

namespace rho_forge {

/// Module-theoretic summary of a Laurent matrix over the PID Q(i)[z, z^-1]:
/// rank of the kernel and the nonunit invariant factors of the cokernel,
/// each normalized (lowest exponent 0, monic) and dividing the next.
struct InvariantFactors {
  Eigen::Index kernel_rank = 0;
  std::vector<LaurentPoly> factors;

  std::string to_string() const;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// U * M * V = D with U, V invertible over the Laurent ring and D diagonal
/// (nonzero entries normalized, each dividing the next).
struct SmithDecomposition {
  LaurentMatrix u;
  LaurentMatrix d;
  LaurentMatrix v;
  InvariantFactors invariants;
};

SmithDecomposition snf(const LaurentMatrix& m);

inline InvariantFactors invariant_factors(const LaurentMatrix& m) { return snf(m).invariants; }

/// Equal kernel rank and equal normalized invariant factors: ker B and coker B
/// agree as Q(i)[z, z^-1]-modules.
bool homology_compare(const HermitianLaurentMatrix& b1, const HermitianLaurentMatrix& b2);

}  // namespace rho_forge
