#include "rho_forge/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace rho_forge {

using nlohmann::json;

namespace {

long require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
  if (j.is_number_unsigned() && j.get<unsigned long>() > static_cast<unsigned long>(std::numeric_limits<long>::max()))
    throw ParseError(std::string("integer out of range for ") + what);
  return j.get<long>();
}

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

LaurentMatrix matrix_from_json(const json& j) {
  const long rows = require_int(require_field(j, "rows"), "rows");
  const long cols = require_int(require_field(j, "cols"), "cols");
  if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
  const json& entries = require_field(j, "entries");
  if (!entries.is_array() || static_cast<long>(entries.size()) != rows) throw ParseError("entries must have 'rows' rows");
  LaurentMatrix m = zero_matrix(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols) throw ParseError("every row must have 'cols' entries");
    for (long k = 0; k < cols; ++k) {
      const json& entry = row[static_cast<size_t>(k)];
      if (!entry.is_array()) throw ParseError("an entry must be a list of monomials");
      LaurentPoly p;
      for (const json& mono : entry) {
        if (!mono.is_array() || mono.size() != 5) throw ParseError("a monomial is [exp, re_num, re_den, im_num, im_den]");
        const long e = require_int(mono[0], "exponent");
        if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max()) throw ParseError("exponent out of range");
        const long re_den = require_int(mono[2], "re_den");
        const long im_den = require_int(mono[4], "im_den");
        if (re_den == 0 || im_den == 0) throw ParseError("zero denominator in monomial");
        p += LaurentPoly::monomial(static_cast<int>(e), GaussianRational::from_fractions(
                                                             require_int(mono[1], "re_num"), re_den,
                                                             require_int(mono[3], "im_num"), im_den));
      }
      m(i, k) = std::move(p);
    }
  }
  return m;
}

json matrix_to_json(const LaurentMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      json entry = json::array();
      for (const auto& [e, c] : m(i, k).terms()) {
        if (!c.re().get_num().fits_slong_p() || !c.re().get_den().fits_slong_p() || !c.im().get_num().fits_slong_p() ||
            !c.im().get_den().fits_slong_p())
          throw ParseError("coefficient too large for the matrix literal format");
        entry.push_back({e, c.re().get_num().get_si(), c.re().get_den().get_si(), c.im().get_num().get_si(),
                         c.im().get_den().get_si()});
      }
      row.push_back(std::move(entry));
    }
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

LaurentMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

UnitaryRep rep_from_json(const json& j) {
  const json& label = require_field(j, "label");
  const json& mat = require_field(j, "matrix");
  if (!label.is_string()) throw ParseError("rep label must be a string");
  if (!mat.is_array() || mat.empty()) throw ParseError("rep matrix must be a nonempty list of rows");
  const auto d = static_cast<Eigen::Index>(mat.size());
  ComplexMatrix u(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = mat[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) throw ParseError("rep matrix must be square");
    for (Eigen::Index k = 0; k < d; ++k) {
      const json& z = row[static_cast<size_t>(k)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ParseError("rep matrix entries are [re, im]");
      u(i, k) = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  return {label.get<std::string>(), std::move(u)};
}

ClassIntersection class_intersection_from_json(const json& j) {
  const json& label = require_field(j, "label");
  const json& powers = require_field(j, "powers");
  if (!label.is_string() || !powers.is_array()) throw ParseError("class intersection is {label: str, powers: [int]}");
  std::set<int> set;
  for (const json& p : powers) set.insert(static_cast<int>(require_int(p, "power")));
  return {label.get<std::string>(), std::move(set)};
}

std::string format_number(double x, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << x;
  return os.str();
}

std::string format_angle(double theta) {
  std::string out = format_number(theta);
  const double ratio = theta / std::numbers::pi;
  for (int den = 1; den <= 12; ++den) {
    const double num = std::round(ratio * den);
    if (std::abs(ratio * den - num) > 1e-9 * den) continue;
    const long n = std::lround(num);
    std::string frac;
    if (n == 0) {
      frac = "0";
    } else {
      frac = (n == 1 ? "" : (n == -1 ? "-" : std::to_string(n))) + "pi";
      if (den != 1) frac += "/" + std::to_string(den);
    }
    return out + " (~ " + frac + ")";
  }
  return out;
}

std::vector<SignatureStepFunction::Arc> covering_arcs(const SignatureStepFunction& f) {
  auto arcs = f.arcs();
  if (f.breakpoints().empty()) return arcs;
  std::vector<SignatureStepFunction::Arc> out;
  const auto wrap = arcs.back();
  arcs.pop_back();
  if (wrap.end - kTwoPi > 0.0) out.push_back({0.0, wrap.end - kTwoPi, wrap.value});
  out.insert(out.end(), arcs.begin(), arcs.end());
  out.push_back({wrap.start, kTwoPi, wrap.value});
  return out;
}

std::string step_function_csv(const SignatureStepFunction& f) {
  std::ostringstream os;
  os << "theta_start,theta_end,value\n";
  for (const auto& arc : covering_arcs(f))
    os << format_number(arc.start, 12) << ',' << format_number(arc.end, 12) << ',' << arc.value << '\n';
  return os.str();
}

std::string step_function_svg(const SignatureStepFunction& f) {
  constexpr double width = 640;
  constexpr double height = 240;
  constexpr double margin = 20;
  const double dim = std::max(1, f.dim());
  auto x = [&](double theta) { return margin + (width - 2 * margin) * theta / kTwoPi; };
  auto y = [&](double v) { return height / 2 - (height / 2 - margin) * v / dim; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "  <line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(kTwoPi) << "\" y2=\"" << y(0)
     << "\" stroke=\"#999\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"#c00\" stroke-width=\"2\" points=\"";
  for (const auto& arc : covering_arcs(f))
    os << x(arc.start) << ',' << y(arc.value) << ' ' << x(arc.end) << ',' << y(arc.value) << ' ';
  os << "\"/>\n";
  for (double bp : f.breakpoints())
    os << "  <line x1=\"" << x(bp) << "\" y1=\"" << margin << "\" x2=\"" << x(bp) << "\" y2=\"" << height - margin
       << "\" stroke=\"#36c\" stroke-dasharray=\"4 3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

json step_function_json(const SignatureStepFunction& f) {
  return {{"dim", f.dim()}, {"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

json complex_json(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

json invariant_factors_json(const InvariantFactors& inv) {
  json factors = json::array();
  for (const auto& p : inv.factors) factors.push_back(p.to_string());
  return {{"kernel_rank", inv.kernel_rank}, {"factors", std::move(factors)}};
}

json report_json(const RhoReport& r) {
  json twisted = json::object();
  for (const auto& [k, v] : r.twisted_rho_diffs) twisted[k] = v;
  json deloc = json::object();
  for (const auto& [k, v] : r.delocalized_rho_diffs) deloc[k] = complex_json(v);
  json out = {{"matrix_label", r.matrix_label},
              {"quantity", "rho(X) - rho(Y) differences only; absolute rho-invariants are not determined by B"},
              {"normalization", "normalized Haar measure dtheta/(2pi)"},
              {"l2_rho_diff", r.l2_rho_diff},
              {"l2_signature", r.l2_signature},
              {"trivial_signature", r.trivial_signature},
              {"twisted_rho_diffs", std::move(twisted)},
              {"delocalized_rho_diffs", std::move(deloc)},
              {"step_function", step_function_json(r.step_function)},
              {"caveat", r.caveat}};
  if (r.homology_note) out["homology"] = invariant_factors_json(*r.homology_note);
  return out;
}

json sign_flip_json(const SignFlipComparison& c) {
  return {{"original", report_json(c.original)},
          {"flipped", report_json(c.flipped)},
          {"homology_equal", c.homology_equal},
          {"distinguishable", c.distinguishable},
          {"conclusion", c.conclusion}};
}

json trace_fragment_json(double l2, const std::map<std::string, int>& twisted,
                         const std::map<int, std::complex<double>>& delocalized) {
  json tw = json::object();
  for (const auto& [k, v] : twisted) tw[k] = v;
  json dl = json::object();
  for (const auto& [n, c] : delocalized) dl[std::to_string(n)] = complex_json(c);
  return {{"l2", l2}, {"twisted", std::move(tw)}, {"delocalized", std::move(dl)}};
}

}  // namespace rho_forge
