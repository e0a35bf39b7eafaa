#include "rho_forge/laurent_matrix.hpp"

#include <algorithm>
#include <vector>

namespace rho_forge {

using Eigen::Index;

LaurentMatrix zero_matrix(Index rows, Index cols) {
  return LaurentMatrix::Constant(rows, cols, LaurentPoly{});
}

LaurentMatrix identity_matrix(Index n) {
  LaurentMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix diagonal_matrix(const std::vector<LaurentPoly>& entries) {
  const auto n = static_cast<Index>(entries.size());
  LaurentMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<size_t>(i)];
  return m;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  LaurentMatrix out = zero_matrix(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LaurentMatrix star(const LaurentMatrix& m) {
  return m.transpose().unaryExpr([](const LaurentPoly& p) { return involute(p); });
}

bool is_hermitian(const LaurentMatrix& m) { return m.rows() == m.cols() && m == star(m); }

HermitianLaurentMatrix::HermitianLaurentMatrix(LaurentMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw NonSquare("Hermitian matrix must be square");
  if (m_ != star(m_)) throw NotHermitian("Laurent matrix is not equal to its involuted transpose");
}

bool HermitianLaurentMatrix::has_real_coefficients() const {
  return std::all_of(m_.data(), m_.data() + m_.size(), [](const LaurentPoly& p) { return p.has_real_coefficients(); });
}

bool HermitianLaurentMatrix::is_zero() const {
  return std::all_of(m_.data(), m_.data() + m_.size(), [](const LaurentPoly& p) { return p.is_zero(); });
}

HermitianLaurentMatrix HermitianLaurentMatrix::operator-() const {
  return HermitianLaurentMatrix(m_.unaryExpr([](const LaurentPoly& p) { return -p; }));
}

HermitianLaurentMatrix HermitianLaurentMatrix::scaled(const mpq_class& c) const {
  GaussianRational s(c);
  return HermitianLaurentMatrix(m_.unaryExpr([&](const LaurentPoly& p) { return p * s; }));
}

HermitianLaurentMatrix hermitianize(const LaurentMatrix& a) {
  if (a.rows() != a.cols()) throw NonSquare("hermitianize needs a square matrix");
  return HermitianLaurentMatrix(a + star(a));
}

HermitianLaurentMatrix direct_sum(const HermitianLaurentMatrix& b1, const HermitianLaurentMatrix& b2) {
  const Index n1 = b1.size();
  const Index n2 = b2.size();
  LaurentMatrix m = zero_matrix(n1 + n2, n1 + n2);
  m.topLeftCorner(n1, n1) = b1.matrix();
  m.bottomRightCorner(n2, n2) = b2.matrix();
  return HermitianLaurentMatrix(std::move(m));
}

ComplexMatrix evaluate(const LaurentMatrix& m, double theta) {
  return m.unaryExpr([theta](const LaurentPoly& p) { return p.on_circle(theta); });
}

ComplexMatrix substitute_unitary(const LaurentMatrix& m, const ComplexMatrix& u, double unitary_tol) {
  const Index d = u.rows();
  if (u.cols() != d) throw NotUnitary("representation matrix is not square");
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  if ((u.adjoint() * u - id).cwiseAbs().maxCoeff() > unitary_tol)
    throw NotUnitary("representation matrix fails the unitarity check");

  int lo = 0;
  int hi = 0;
  for (Index k = 0; k < m.size(); ++k) {
    const LaurentPoly& p = m.data()[k];
    if (p.is_zero()) continue;
    lo = std::min(lo, p.low_exponent());
    hi = std::max(hi, p.high_exponent());
  }
  // powers[e - lo] = U^e
  std::vector<ComplexMatrix> powers(static_cast<size_t>(hi - lo + 1));
  powers[static_cast<size_t>(-lo)] = id;
  for (int e = 1; e <= hi; ++e) powers[static_cast<size_t>(e - lo)] = powers[static_cast<size_t>(e - 1 - lo)] * u;
  const ComplexMatrix u_inv = u.adjoint();
  for (int e = -1; e >= lo; --e) powers[static_cast<size_t>(e - lo)] = powers[static_cast<size_t>(e + 1 - lo)] * u_inv;

  ComplexMatrix out = ComplexMatrix::Zero(m.rows() * d, m.cols() * d);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      for (const auto& [e, c] : m(i, j).terms())
        out.block(i * d, j * d, d, d) += c.to_complex() * powers[static_cast<size_t>(e - lo)];
  return out;
}

namespace {

LaurentPoly cofactor_rec(const LaurentMatrix& m, std::vector<Index>& cols, Index row) {
  const Index n = m.rows();
  if (row == n) return 1;
  LaurentPoly sum;
  bool negative = false;
  for (size_t k = 0; k < cols.size(); ++k) {
    const Index c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      LaurentPoly term = m(row, c) * cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (negative) sum -= term; else sum += term;
    }
    negative = !negative;
  }
  return sum;
}

}  // namespace

LaurentPoly det_cofactor(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
  std::vector<Index> cols(static_cast<size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) cols[static_cast<size_t>(j)] = j;
  return cofactor_rec(m, cols, 0);
}

LaurentPoly det_bareiss(LaurentMatrix m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  bool negate = false;
  LaurentPoly prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot in column k keeps intermediate entries small.
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (pivot < 0 || m(i, k).terms().size() < m(pivot, k).terms().size())) pivot = i;
    if (pivot < 0) return {};
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = LaurentPoly{};
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

LaurentPoly det_laurent(const LaurentMatrix& m) {
  if (m.rows() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

HermitianLaurentMatrix congruence(const HermitianLaurentMatrix& b, const LaurentMatrix& t) {
  if (t.rows() != t.cols() || t.rows() != b.size()) throw NonSquare("congruence transform has the wrong shape");
  if (!det_laurent(t).is_unit()) throw NotInvertible("congruence transform is not invertible over the Laurent ring");
  return HermitianLaurentMatrix(multiply(star(t), multiply(b.matrix(), t)));
}

}  // namespace rho_forge
