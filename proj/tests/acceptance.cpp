// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "rho_forge/eta_numeric.hpp"
#include "rho_forge/induction.hpp"
#include "rho_forge/rho_report.hpp"
#include "rho_forge/smith_normal_form.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rho_forge;
using std::numbers::pi;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const LaurentPoly kA{{1, 1}, {0, 1}, {-1, 1}};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check worked_example() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const LaurentMatrix a = diagonal_matrix({kA});
  const SignatureStepFunction f = signature_step_function(hermitianize(a));
  c.require(f.breakpoints().size() == 2, "two breakpoints");
  if (f.breakpoints().size() == 2) {
    c.require(std::abs(f.breakpoints()[0] - 2 * pi / 3) <= 1e-8, "breakpoint 2pi/3");
    c.require(std::abs(f.breakpoints()[1] - 4 * pi / 3) <= 1e-8, "breakpoint 4pi/3");
  }
  c.require(f.value_at(0.0) == 1 && f.value_at(pi) == -1, "+1 on the arc through 0, -1 opposite");
  const RhoReport r = build_rho_report(a, {}, {});
  c.require(std::abs(r.l2_signature - 1.0 / 3.0) <= 1e-9, "sgn_(2) = 1/3");
  c.require(r.trivial_signature == 1, "sgn_1 = 1");
  c.require(std::abs(r.l2_rho_diff + 2.0 / 3.0) <= 1e-9, "rho diff = -2/3");
  const double t = seconds_since(t0);
  c.require(t < 1.0, "runtime < 1 s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "sgn_(2)=%.12f rho_diff=%.12f t=%.4fs", r.l2_signature, r.l2_rho_diff, t);
  c.detail += (c.detail.empty() ? "" : "; ") + std::string(buf);
  return c;
}

Check eta_identity() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index dim = 1 + k % 8;
    const ComplexMatrix h = random_hermitian(dim, rng, 1e-3);
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
    c.require(es.eigenvalues().cwiseAbs().minCoeff() >= 1e-3 * norm * (1 - 1e-9), "spectral gap of the sample");
    const double err = std::abs(eta_heat_integral(h).value - inertia(h, 1e-12 * norm).signature());
    worst = std::max(worst, err);
  }
  c.require(worst <= 1e-6, "max error <= 1e-6");
  const double t = seconds_since(t0);
  c.require(t < 30.0, "runtime < 30 s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "max|eta-sgn|=%.3g t=%.2fs", worst, t);
  c.detail += (c.detail.empty() ? "" : "; ") + std::string(buf);
  return c;
}

Check delocalized_oracle() {
  Check c;
  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto [b, f] = testing::random_regular_hermitian(rng, 3, 3, false);
    for (int n = -3; n <= 3; ++n)
      worst = std::max(worst, std::abs(delocalized_signature(f, {n}) - testing::quadrature_fourier(b, f.breakpoints(), n)));
  }
  c.require(worst <= 1e-9, "closed form vs quadrature");
  const SignatureStepFunction w = signature_step_function(hermitianize(diagonal_matrix({kA})));
  const double c1_err = std::abs(delocalized_signature(w, {1}) - std::sqrt(3.0) / pi);
  c.require(c1_err <= 1e-9, "c_1 = sqrt(3)/pi");
  char buf[96];
  std::snprintf(buf, sizeof buf, "max oracle diff=%.3g |c_1-sqrt3/pi|=%.3g", worst, c1_err);
  c.detail += (c.detail.empty() ? "" : "; ") + std::string(buf);
  return c;
}

double cyclic_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

bool near_any(double theta, const std::vector<double>& points, double eps) {
  for (double p : points)
    if (cyclic_distance(theta, p) < eps) return true;
  return false;
}

Check property_suite() {
  Check c;
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  int failures = 0;
  const int cases = 100;
  auto expect = [&](bool cond) { failures += cond ? 0 : 1; };
  for (int k = 0; k < cases; ++k) {
    const auto [b, f] = testing::random_regular_hermitian(rng, 3, 3, false);
    const int n = static_cast<int>(b.size());

    // congruence invariance
    const SignatureStepFunction g = signature_step_function(congruence(b, testing::random_unimodular(rng, b.size(), 2, false)));
    bool same = g.values() == f.values() && g.breakpoints().size() == f.breakpoints().size();
    for (size_t i = 0; same && i < f.breakpoints().size(); ++i)
      same = std::abs(g.breakpoints()[i] - f.breakpoints()[i]) <= 1e-6;
    expect(same);

    // parity
    for (int v : f.values()) expect(((v - n) % 2 + 2) % 2 == 0);

    // negation
    expect(signature_step_function(-b) == f.negated());

    // positive scaling
    expect(signature_step_function(b.scaled(mpq_class(7, 3))) == f);

    // direct sum
    const auto [b2, f2] = testing::random_regular_hermitian(rng, 2, 2, false);
    const SignatureStepFunction sum = signature_step_function(direct_sum(b, b2));
    for (int s = 0; s < 8; ++s) {
      const double theta = angle(rng);
      expect(sum.value_at(theta) == f.value_at(theta) + f2.value_at(theta));
    }

    // c_{-n} = conj(c_n)
    for (int m = 1; m <= 3; ++m)
      expect(std::abs(fourier_coefficient(f, -m) - std::conj(fourier_coefficient(f, m))) <= 1e-12);

    // real-coefficient evenness
    const auto [r, fr] = testing::random_regular_hermitian(rng, 3, 3, true);
    for (int s = 0; s < 8; ++s) {
      const double theta = angle(rng);
      if (near_any(theta, fr.breakpoints(), 1e-6) || near_any(kTwoPi - theta, fr.breakpoints(), 1e-6)) continue;
      expect(fr.value_at(theta) == fr.value_at(kTwoPi - theta));
    }
  }
  c.require(failures == 0, std::to_string(failures) + " property failures");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(cases) + " cases x 7 properties, " +
              std::to_string(failures) + " failures";
  return c;
}

Check sign_flip() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const SignFlipComparison cmp = compare_sign_flip_family({kA}, {-1});
  c.require(cmp.homology_equal, "homology_equal");
  c.require(cmp.distinguishable, "distinguishable");
  c.require(cmp.conclusion == kNoHomotopyEquivalence, "conclusion");
  const double t = seconds_since(t0);
  c.require(t < 1.0, "runtime < 1 s");
  c.detail += (c.detail.empty() ? "" : "; ") + std::string("homology_equal=") + (cmp.homology_equal ? "true" : "false") +
               " distinguishable=" + (cmp.distinguishable ? "true" : "false") + " t=" + std::to_string(t).substr(0, 6) + "s";
  return c;
}

Check snf_correctness() {
  Check c;
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<Eigen::Index> dim(1, 4);
  int checked_det = 0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index rows = dim(rng);
    const Eigen::Index cols = k % 2 == 0 ? rows : dim(rng);
    const LaurentMatrix m = testing::random_laurent_matrix(rng, rows, cols, 2, k % 3 == 0);
    const SmithDecomposition s = snf(m);
    c.require(multiply(multiply(s.u, m), s.v) == s.d, "U M V = D");
    c.require(det_laurent(s.u).is_unit() && det_laurent(s.v).is_unit(), "U, V unimodular");
    if (rows == cols) {
      const LaurentPoly d = det_laurent(m);
      if (!d.is_zero()) {
        LaurentPoly prod(1);
        for (const auto& f : s.invariants.factors) prod *= f;
        c.require(normalize_unit(d) == prod, "det = unit x product of factors");
        ++checked_det;
      }
      const HermitianLaurentMatrix h = hermitianize(m);
      const LaurentMatrix t = testing::random_unimodular(rng, rows, 1, false);
      c.require(invariant_factors(congruence(h, t).matrix()) == invariant_factors(h.matrix()),
                "unimodular congruence invariance");
    }
  }
  c.detail += (c.detail.empty() ? "" : "; ") + std::string("100 matrices, ") + std::to_string(checked_det) +
              " determinant identities";
  return c;
}

Check induction_consistency() {
  Check c;
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto [b, f] = testing::random_regular_hermitian(rng, 3, 3, true);
    c.require(induced_delocalized_signature(f, ClassIntersection("e", {0})) == std::complex<double>(l2_signature(f), 0.0),
              "powers {0} reproduce l2 exactly");
    const auto pm = induced_delocalized_signature(f, ClassIntersection("g", {1, -1}));
    worst = std::max({worst, std::abs(pm.imag()), std::abs(pm.real() - 2 * fourier_coefficient(f, 1).real())});
  }
  c.require(worst <= 1e-12, "powers {1,-1} = 2 Re c_1");
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation=%.3g", worst);
  c.detail += (c.detail.empty() ? "" : "; ") + std::string(buf);
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"worked example", worked_example},
      {"eta/signature identity", eta_identity},
      {"delocalized coefficient oracle", delocalized_oracle},
      {"property suite", property_suite},
      {"sign-flip family", sign_flip},
      {"SNF correctness", snf_correctness},
      {"induction consistency", induction_consistency},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s (%s)\n", c.ok ? "PASS" : "FAIL", index++, name, c.detail.c_str());
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
