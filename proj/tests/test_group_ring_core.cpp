#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include <Eigen/QR>

#include "rho_forge/laurent_matrix.hpp"
#include "support/generators.hpp"

using namespace rho_forge;

namespace {

const LaurentPoly z = LaurentPoly::z();
const LaurentPoly z_inv = LaurentPoly::monomial(-1);
const GaussianRational i_unit(0, 1);

// 2(z + z^-1 + 1)
LaurentPoly worked_b() { return LaurentPoly{{1, 2}, {0, 2}, {-1, 2}}; }

LaurentMatrix one_by_one(const LaurentPoly& p) {
  LaurentMatrix m = zero_matrix(1, 1);
  m(0, 0) = p;
  return m;
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("Gaussian rationals are exact") {
  GaussianRational a(mpq_class(1, 3), mpq_class(2, 5));
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK((a - a).is_zero());
  CHECK(a.conj().conj() == a);
  CHECK_THROWS_AS(GaussianRational::from_fractions(1, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("Laurent polynomials keep a canonical form") {
  LaurentPoly p = z + z_inv;
  p -= z;
  CHECK(p == z_inv);
  CHECK(p.terms().size() == 1);
  CHECK((z - z).is_zero());
  CHECK((z * z_inv) == LaurentPoly(1));
  CHECK(worked_b().span() == 2);
  CHECK(worked_b().to_string() == "2z + 2 + 2z^-1");
}

TEST_CASE("involute") {
  CHECK(involute(z) == z_inv);
  CHECK(involute(LaurentPoly(GaussianRational(3, 1))) == LaurentPoly(GaussianRational(3, -1)));
  CHECK(involute(worked_b()) == worked_b());

  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = testing::random_laurent(rng, 4, false);
    CHECK(involute(involute(p)) == p);
    // Coefficient at k is the conjugate of the coefficient at -k.
    const LaurentPoly q = involute(p);
    for (const auto& [e, c] : q.terms()) CHECK(c == p.coeff(-e).conj());
  }
}

TEST_CASE("star") {
  CHECK(star(one_by_one(z))(0, 0) == z_inv);

  LaurentMatrix m = zero_matrix(2, 2);
  m(0, 1) = z;
  const LaurentMatrix s = star(m);
  CHECK(s(0, 0).is_zero());
  CHECK(s(0, 1).is_zero());
  CHECK(s(1, 0) == z_inv);
  CHECK(s(1, 1).is_zero());

  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    const LaurentMatrix a = testing::random_laurent_matrix(rng, 3, 2, 3, false);
    CHECK(star(star(a)) == a);
    const LaurentMatrix sq = testing::random_laurent_matrix(rng, 3, 3, 3, false);
    const LaurentMatrix b = sq + star(sq);
    CHECK(star(b) == b);
  }
}

TEST_CASE("hermitianize") {
  const HermitianLaurentMatrix b = hermitianize(one_by_one(z + z_inv + LaurentPoly(1)));
  CHECK(b.matrix()(0, 0) == worked_b());

  CHECK(hermitianize(zero_matrix(2, 2)).is_zero());

  const HermitianLaurentMatrix ib = hermitianize(one_by_one(i_unit * z));
  CHECK(ib.matrix()(0, 0) == i_unit * z - i_unit * z_inv);

  CHECK_THROWS_AS(hermitianize(zero_matrix(2, 3)), NonSquare);
  CHECK_THROWS_AS(HermitianLaurentMatrix(one_by_one(z)), NotHermitian);
}

TEST_CASE("evaluate") {
  const LaurentMatrix b = one_by_one(worked_b());
  CHECK(evaluate(b, 0.0)(0, 0).real() == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(std::abs(evaluate(b, 2 * std::numbers::pi / 3)(0, 0)) < 1e-14);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int k = 0; k < 100; ++k) {
    const HermitianLaurentMatrix h = testing::random_hermitian_laurent(rng, 3, 3, false);
    const double theta = angle(rng);
    const ComplexMatrix e = evaluate(h.matrix(), theta);
    const double scale = std::max(1.0, max_abs(e));
    CHECK(max_abs(e - e.adjoint()) <= 1e-12 * scale);
    CHECK(max_abs(e - evaluate(h.matrix(), theta + kTwoPi)) <= 1e-12 * scale);
  }
}

TEST_CASE("substitute_unitary") {
  const LaurentMatrix b = one_by_one(worked_b());
  ComplexMatrix one = ComplexMatrix::Identity(1, 1);
  CHECK(max_abs(substitute_unitary(b, one) - evaluate(b, 0.0)) < 1e-14);

  const double alpha = 0.7;
  const double beta = 2.9;
  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, alpha);
  u(1, 1) = std::polar(1.0, beta);
  const ComplexMatrix s = substitute_unitary(b, u);
  CHECK(s(0, 0).real() == doctest::Approx(2 * (2 * std::cos(alpha) + 1)).epsilon(1e-14));
  CHECK(s(1, 1).real() == doctest::Approx(2 * (2 * std::cos(beta) + 1)).epsilon(1e-14));
  CHECK(std::abs(s(0, 1)) < 1e-15);

  ComplexMatrix not_unitary = ComplexMatrix::Identity(2, 2) * 1.1;
  CHECK_THROWS_AS(substitute_unitary(b, not_unitary), NotUnitary);

  // Similarity covariance: M(V D V^*) = (I (x) V) M(D) (I (x) V)^*.
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 50; ++k) {
    const HermitianLaurentMatrix h = testing::random_hermitian_laurent(rng, 2, 3, false);
    const Eigen::Index d = 3;
    ComplexMatrix g(d, d);
    for (Eigen::Index t = 0; t < g.size(); ++t) g.data()[t] = {gauss(rng), gauss(rng)};
    const ComplexMatrix v = Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (Eigen::Index t = 0; t < d; ++t) diag(t, t) = std::polar(1.0, angle(rng));
    const ComplexMatrix conj_u = v * diag * v.adjoint();

    ComplexMatrix block_v = ComplexMatrix::Zero(2 * d, 2 * d);
    block_v.topLeftCorner(d, d) = v;
    block_v.bottomRightCorner(d, d) = v;
    const ComplexMatrix lhs = substitute_unitary(h.matrix(), conj_u);
    const ComplexMatrix rhs = block_v * substitute_unitary(h.matrix(), diag) * block_v.adjoint();
    CHECK(max_abs(lhs - rhs) <= 1e-9 * std::max(1.0, max_abs(lhs)));
    CHECK(max_abs(lhs - lhs.adjoint()) <= 1e-10 * std::max(1.0, max_abs(lhs)));

    // d = 1 with U = [e^{i theta}] is evaluation at theta.
    const double theta = angle(rng);
    ComplexMatrix u1(1, 1);
    u1(0, 0) = std::polar(1.0, theta);
    CHECK(max_abs(substitute_unitary(h.matrix(), u1) - evaluate(h.matrix(), theta)) <= 1e-12 * std::max(1.0, max_abs(lhs)));
  }
}

TEST_CASE("det_laurent") {
  CHECK(det_laurent(one_by_one(worked_b())) == worked_b());
  CHECK(det_laurent(identity_matrix(3)) == LaurentPoly(1));
  CHECK(det_laurent(zero_matrix(2, 2)).is_zero());

  std::mt19937_64 rng(15);
  for (int k = 0; k < 100; ++k) {
    const LaurentMatrix m = testing::random_laurent_matrix(rng, 2, 2, 3, false);
    const LaurentPoly brute = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    CHECK(det_laurent(m) == brute);
    CHECK(det_bareiss(m) == brute);
  }
  for (int k = 0; k < 30; ++k) {
    const LaurentMatrix m = testing::random_laurent_matrix(rng, 4, 4, 2, false);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
  for (int k = 0; k < 30; ++k) {
    const LaurentMatrix a = testing::random_laurent_matrix(rng, 3, 3, 2, false);
    const LaurentMatrix b = testing::random_laurent_matrix(rng, 3, 3, 2, false);
    CHECK(det_laurent(multiply(a, b)) == det_laurent(a) * det_laurent(b));
    const HermitianLaurentMatrix h = hermitianize(a);
    const LaurentPoly d = det_laurent(h.matrix());
    CHECK(involute(d) == d);
  }
  // Bareiss path for n > 4 against a block-triangular product of determinants.
  const LaurentMatrix a = testing::random_laurent_matrix(rng, 3, 3, 2, false);
  const LaurentMatrix c = testing::random_laurent_matrix(rng, 3, 3, 2, false);
  LaurentMatrix big = zero_matrix(6, 6);
  big.topLeftCorner(3, 3) = a;
  big.bottomRightCorner(3, 3) = c;
  big.topRightCorner(3, 3) = testing::random_laurent_matrix(rng, 3, 3, 2, false);
  CHECK(det_laurent(big) == det_cofactor(a) * det_cofactor(c));
}

TEST_CASE("congruence") {
  std::mt19937_64 rng(16);
  const HermitianLaurentMatrix b = testing::random_hermitian_laurent(rng, 3, 2, false);
  CHECK(congruence(b, identity_matrix(3)).matrix() == b.matrix());

  const HermitianLaurentMatrix b1 = hermitianize(one_by_one(z + LaurentPoly(1)));
  CHECK(congruence(b1, one_by_one(z)).matrix() == b1.matrix());

  CHECK_THROWS_AS(congruence(b1, one_by_one(z + LaurentPoly(1))), NotInvertible);
  for (int k = 0; k < 50; ++k) {
    const LaurentMatrix t = testing::random_unimodular(rng, 3, 2, false);
    CHECK(det_laurent(t).is_unit());
    CHECK(is_hermitian(congruence(b, t).matrix()));
  }
}
