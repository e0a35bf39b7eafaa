#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rho_forge/eta_numeric.hpp"
#include "rho_forge/induction.hpp"
#include "rho_forge/rho_report.hpp"

namespace rho_forge {

/// Malformed input file or literal. Kept apart from RhoError so callers can tell
/// bad input from a failed computation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix literal:
///   {"rows": n, "cols": m,
///    "entries": [[ [[exp, re_num, re_den, im_num, im_den], ...], ... ], ...]}
/// Each entry is a list of monomials; repeated exponents are summed.
LaurentMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const LaurentMatrix& m);
LaurentMatrix read_matrix_file(const std::string& path);

/// {"label": str, "matrix": [[[re, im], ...], ...]} with the generator's image.
UnitaryRep rep_from_json(const nlohmann::json& j);

/// {"label": str, "powers": [int, ...]}
ClassIntersection class_intersection_from_json(const nlohmann::json& j);

/// Fixed significant-digit rendering used for every printed number.
std::string format_number(double x, int significant = 10);
/// "2.094395102 (~ 2pi/3)"; the pi-multiple suffix appears only when it matches to 1e-9.
std::string format_angle(double theta);

/// Arcs of f covering [0, 2pi) in increasing order, the wrapping arc split at 0.
std::vector<SignatureStepFunction::Arc> covering_arcs(const SignatureStepFunction& f);

/// "theta_start,theta_end,value" rows covering [0, 2pi), the wrapping arc split at 0.
std::string step_function_csv(const SignatureStepFunction& f);
std::string step_function_svg(const SignatureStepFunction& f);
nlohmann::json step_function_json(const SignatureStepFunction& f);

nlohmann::json complex_json(std::complex<double> c);
nlohmann::json invariant_factors_json(const InvariantFactors& inv);
nlohmann::json report_json(const RhoReport& r);
nlohmann::json sign_flip_json(const SignFlipComparison& c);

/// {"l2": float, "twisted": {label: int}, "delocalized": {"n": [re, im]}}
nlohmann::json trace_fragment_json(double l2, const std::map<std::string, int>& twisted,
                                   const std::map<int, std::complex<double>>& delocalized);

}  // namespace rho_forge
