#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rho_forge/smith_normal_form.hpp"
#include "rho_forge/trace_functionals.hpp"

namespace rho_forge {

/// Caveat attached to every report: the manifold pair is only asserted to exist.
extern const char* const kSurgeryCaveat;
/// Conclusion recorded when two reports have equal homology but differing rho-invariants.
extern const char* const kNoHomotopyEquivalence;

/// Threshold above which two rho-invariant differences count as distinct.
inline constexpr double kDistinguishThreshold = 1e-8;

struct RepPair {
  UnitaryRep first;
  UnitaryRep second;
  std::string label() const { return first.label() + " - " + second.label(); }
};

/// Differences rho(X) - rho(Y) of the manifold pair obtained by surgery along B = A + A^*.
/// Only differences are computable from B; absolute rho-invariants are not.
struct RhoReport {
  std::string matrix_label;
  /// sgn_(2)(B) - sgn(B(1)).
  double l2_rho_diff = 0.0;
  double l2_signature = 0.0;
  int trivial_signature = 0;
  /// sgn(lambda_1(B)) - sgn(lambda_2(B)), keyed by RepPair::label().
  std::map<std::string, int> twisted_rho_diffs;
  /// sgn_<g>(B), keyed by DelocalizedClass::label().
  std::map<std::string, std::complex<double>> delocalized_rho_diffs;
  std::optional<InvariantFactors> homology_note;
  SignatureStepFunction step_function = SignatureStepFunction::constant(0, 0);
  std::string caveat = kSurgeryCaveat;
};

/// Throws NonSquare, InvalidArgument (class power 0) and whatever the signature
/// computation throws. A zero matrix yields the zero report.
RhoReport build_rho_report(const LaurentMatrix& a, const std::vector<RepPair>& reps,
                           const std::vector<DelocalizedClass>& classes, const SpectralTolerances& tol = {},
                           std::string label = "A");

/// Largest absolute difference between matching fields of two reports.
double max_report_difference(const RhoReport& r1, const RhoReport& r2);

struct SignFlipComparison {
  RhoReport original;
  RhoReport flipped;
  bool homology_equal = false;
  bool distinguishable = false;
  /// kNoHomotopyEquivalence when homology agrees and some rho difference does not; empty otherwise.
  std::string conclusion;
};

/// Compares A = diag(entries) with A' = diag(flips[i] * entries[i]).
/// Throws InvalidArgument on length mismatch or a flip outside {-1, +1}.
SignFlipComparison compare_sign_flip_family(const std::vector<LaurentPoly>& entries, const std::vector<int>& flips,
                                            const std::vector<RepPair>& reps = {},
                                            const std::vector<DelocalizedClass>& classes = {DelocalizedClass{1}},
                                            const SpectralTolerances& tol = {});

}  // namespace rho_forge
