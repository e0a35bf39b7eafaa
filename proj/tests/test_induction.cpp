#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rho_forge/induction.hpp"
#include "support/generators.hpp"

using namespace rho_forge;

TEST_CASE("induced delocalized signature") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    const bool real = k % 2 == 0;
    const auto [b, f] = testing::random_regular_hermitian(rng, 3, 3, real);
    CHECK(induced_delocalized_signature(f, ClassIntersection("e", {0})) == std::complex<double>(l2_signature(f), 0.0));
    CHECK(induced_delocalized_signature(f, ClassIntersection("none", {})) == std::complex<double>(0.0, 0.0));
    const auto pm = induced_delocalized_signature(f, ClassIntersection("g", {1, -1}));
    CHECK(std::abs(pm - fourier_coefficient(f, 1) - fourier_coefficient(f, -1)) <= 1e-12);
    if (real) {
      CHECK(std::abs(pm.imag()) <= 1e-12);
      CHECK(std::abs(pm.real() - 2 * fourier_coefficient(f, 1).real()) <= 1e-12);
    }
    CHECK(induced_delocalized_signature(f, ClassIntersection::central(2)) == fourier_coefficient(f, 2));
  }
}

TEST_CASE("ClassIntersection validation") {
  CHECK_THROWS_AS(ClassIntersection("bad", {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(ClassIntersection("bad", {1, 2}), InvalidArgument);
  CHECK_NOTHROW(ClassIntersection("ok", {-3, 3}));
  CHECK(ClassIntersection::central(0).powers() == std::set<int>{0});
  CHECK(ClassIntersection::central(-2).powers() == std::set<int>{-2});
}
