#pragma once

#include <vector>

#include <Eigen/Core>

#include "rho_forge/errors.hpp"
#include "rho_forge/laurent_poly.hpp"

namespace Eigen {

template <>
struct NumTraits<rho_forge::LaurentPoly> : GenericNumTraits<rho_forge::LaurentPoly> {
  using Real = rho_forge::LaurentPoly;
  using NonInteger = rho_forge::LaurentPoly;
  using Literal = rho_forge::LaurentPoly;
  using Nested = rho_forge::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  // Used only by Eigen's stream output; entries print exactly.
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

namespace rho_forge {

using LaurentMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMatrix = Eigen::MatrixXcd;

LaurentMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);
LaurentMatrix identity_matrix(Eigen::Index n);
LaurentMatrix diagonal_matrix(const std::vector<LaurentPoly>& entries);

/// Exact matrix product over the Laurent ring.
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);

/// Conjugate transpose with the group-ring involution applied entrywise.
LaurentMatrix star(const LaurentMatrix& m);

bool is_hermitian(const LaurentMatrix& m);

/// Square Laurent matrix with B = star(B), checked on construction.
class HermitianLaurentMatrix {
 public:
  /// Throws NonSquare or NotHermitian.
  explicit HermitianLaurentMatrix(LaurentMatrix m);

  const LaurentMatrix& matrix() const { return m_; }
  Eigen::Index size() const { return m_.rows(); }
  bool has_real_coefficients() const;
  bool is_zero() const;

  HermitianLaurentMatrix operator-() const;
  /// Multiplication by a real rational.
  HermitianLaurentMatrix scaled(const mpq_class& c) const;

 private:
  LaurentMatrix m_;
};

/// B = A + star(A). Throws NonSquare.
HermitianLaurentMatrix hermitianize(const LaurentMatrix& a);

/// Block-diagonal sum B1 (+) B2.
HermitianLaurentMatrix direct_sum(const HermitianLaurentMatrix& b1, const HermitianLaurentMatrix& b2);

/// Entrywise substitution z = e^{i theta}.
ComplexMatrix evaluate(const LaurentMatrix& m, double theta);

/// Entrywise substitution z = U for a unitary U, negative powers taken as powers of U^*.
/// The (i, j) block of the nd x nd result is m(i, j)(U). Throws NotUnitary when
/// max|U^*U - I| exceeds `unitary_tol`.
ComplexMatrix substitute_unitary(const LaurentMatrix& m, const ComplexMatrix& u, double unitary_tol = 1e-10);

/// Exact determinant. Cofactor expansion up to 4x4, fraction-free elimination above.
LaurentPoly det_laurent(const LaurentMatrix& m);
LaurentPoly det_cofactor(const LaurentMatrix& m);
LaurentPoly det_bareiss(LaurentMatrix m);

/// star(T) B T. Throws NotInvertible unless det(T) is a unit of the Laurent ring.
HermitianLaurentMatrix congruence(const HermitianLaurentMatrix& b, const LaurentMatrix& t);

}  // namespace rho_forge
