#include "rho_forge/rho_report.hpp"

#include <algorithm>
#include <cmath>

namespace rho_forge {

const char* const kSurgeryCaveat =
    "differences rho(X) - rho(Y) for a manifold pair assumed to come from surgery along B = A + A^*; "
    "the topological hypotheses of that construction (dimension 4k >= 6, handle decomposition) are not checked";

const char* const kNoHomotopyEquivalence =
    "homology agrees in all degrees but rho-invariants differ: there is no homotopy equivalence between Y and Y'";

RhoReport build_rho_report(const LaurentMatrix& a, const std::vector<RepPair>& reps,
                           const std::vector<DelocalizedClass>& classes, const SpectralTolerances& tol,
                           std::string label) {
  const HermitianLaurentMatrix b = hermitianize(a);
  const int n = static_cast<int>(b.size());
  RhoReport report;
  report.matrix_label = std::move(label);
  // B = 0 has only zero eigenvalues, which the signature ignores.
  report.step_function = b.is_zero() ? SignatureStepFunction::constant(n, 0) : signature_step_function(b, tol);
  report.l2_signature = l2_signature(report.step_function);
  report.trivial_signature = twisted_signature(b, UnitaryRep::trivial(), tol);
  report.l2_rho_diff = report.l2_signature - report.trivial_signature;
  for (const auto& pair : reps)
    report.twisted_rho_diffs[pair.label()] = twisted_signature(b, pair.first, tol) - twisted_signature(b, pair.second, tol);
  for (const auto& cls : classes) {
    if (cls.power == 0) throw InvalidArgument("delocalized classes need a nonzero power");
    report.delocalized_rho_diffs[cls.label()] = fourier_coefficient(report.step_function, cls.power);
  }
  report.homology_note = invariant_factors(b.matrix());
  return report;
}

double max_report_difference(const RhoReport& r1, const RhoReport& r2) {
  double diff = std::abs(r1.l2_rho_diff - r2.l2_rho_diff);
  for (const auto& [key, value] : r1.twisted_rho_diffs)
    if (auto it = r2.twisted_rho_diffs.find(key); it != r2.twisted_rho_diffs.end())
      diff = std::max(diff, std::abs(static_cast<double>(value - it->second)));
  for (const auto& [key, value] : r1.delocalized_rho_diffs)
    if (auto it = r2.delocalized_rho_diffs.find(key); it != r2.delocalized_rho_diffs.end())
      diff = std::max(diff, std::abs(value - it->second));
  return diff;
}

SignFlipComparison compare_sign_flip_family(const std::vector<LaurentPoly>& entries, const std::vector<int>& flips,
                                            const std::vector<RepPair>& reps,
                                            const std::vector<DelocalizedClass>& classes,
                                            const SpectralTolerances& tol) {
  if (entries.size() != flips.size()) throw InvalidArgument("one flip per diagonal entry is required");
  std::vector<LaurentPoly> flipped;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (flips[i] != 1 && flips[i] != -1) throw InvalidArgument("flips must be +1 or -1");
    flipped.push_back(flips[i] == 1 ? entries[i] : -entries[i]);
  }
  const LaurentMatrix a = diagonal_matrix(entries);
  const LaurentMatrix a_flipped = diagonal_matrix(flipped);

  SignFlipComparison out{build_rho_report(a, reps, classes, tol, "A"),
                         build_rho_report(a_flipped, reps, classes, tol, "A'"), false, false, {}};
  out.homology_equal = homology_compare(hermitianize(a), hermitianize(a_flipped));
  out.distinguishable = max_report_difference(out.original, out.flipped) > kDistinguishThreshold;
  if (out.homology_equal && out.distinguishable) out.conclusion = kNoHomotopyEquivalence;
  return out;
}

}  // namespace rho_forge
