#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "rho_forge/io.hpp"

namespace rho_forge::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text output only: parts below 1e-14 are rounding noise from the closed-form sums.
std::string format_complex(std::complex<double> c) {
  if (std::abs(c.real()) < 1e-14) c.real(0.0);
  if (std::abs(c.imag()) < 1e-14) c.imag(0.0);
  const std::string im = format_number(std::abs(c.imag()));
  return format_number(c.real()) + (c.imag() < 0 ? " - " : " + ") + im + "i";
}

json parse_inline_or_file(const std::string& text) {
  try {
    if (!text.empty() && text.front() == '{') return json::parse(text);
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open " + text);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

SpectralTolerances spectral_tolerances(const CliConfig& c) { return {c.root_tol, c.zero_tol}; }

LaurentMatrix load_input(const CliConfig& c) {
  if (c.input_path.empty()) throw UsageError("an input matrix file is required");
  return read_matrix_file(c.input_path);
}

HermitianLaurentMatrix load_hermitian(const CliConfig& c) {
  LaurentMatrix m = load_input(c);
  if (c.hermitianize) return hermitianize(m);
  return HermitianLaurentMatrix(std::move(m));
}

void require_format(const CliConfig& c, std::initializer_list<Format> allowed) {
  for (Format f : allowed)
    if (c.format == f) return;
  throw UsageError("output format not supported by this command");
}

void emit_step_function(const SignatureStepFunction& f, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv:
      out << step_function_csv(f);
      return;
    case Format::kSvg:
      out << step_function_svg(f);
      return;
    case Format::kJson:
      out << step_function_json(f).dump(2) << '\n';
      return;
    case Format::kText:
      break;
  }
  out << "dim = " << f.dim() << '\n';
  out << "breakpoints:";
  if (f.breakpoints().empty()) out << " none";
  for (double b : f.breakpoints()) out << "\n  " << format_angle(b);
  out << "\narcs (theta_start, theta_end): value\n";
  for (const auto& arc : covering_arcs(f))
    out << "  (" << format_angle(arc.start) << ", " << format_angle(arc.end) << "): " << arc.value << '\n';
}

void print_report_text(const RhoReport& r, std::ostream& out) {
  out << "report for " << r.matrix_label << " (rho(X) - rho(Y) differences; normalized Haar measure)\n";
  out << "  sgn_(2)(B)              = " << format_number(r.l2_signature) << '\n';
  out << "  sgn(B(1))               = " << r.trivial_signature << '\n';
  out << "  rho_(2) difference      = " << format_number(r.l2_rho_diff) << '\n';
  for (const auto& [k, v] : r.twisted_rho_diffs) out << "  rho twisted [" << k << "] = " << v << '\n';
  for (const auto& [k, v] : r.delocalized_rho_diffs) out << "  rho_" << k << " difference = " << format_complex(v) << '\n';
  if (r.homology_note) out << "  homology: " << r.homology_note->to_string() << '\n';
  out << "  caveat: " << r.caveat << '\n';
}

std::vector<RepPair> parse_pairs(const std::vector<std::string>& pairs) {
  std::vector<RepPair> out;
  for (const auto& p : pairs) {
    std::istringstream is(p);
    double a = 0;
    double b = 0;
    char comma = 0;
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) throw UsageError("--pair expects 'theta1,theta2'");
    out.push_back({UnitaryRep::character(a, "exp(i*" + format_number(a) + ")"),
                   UnitaryRep::character(b, "exp(i*" + format_number(b) + ")")});
  }
  return out;
}

std::vector<DelocalizedClass> parse_classes(const std::vector<int>& ns) {
  std::vector<DelocalizedClass> out;
  for (int n : ns) out.push_back({n});
  return out;
}

int cmd_sig_function(const CliConfig& c, std::ostream& out) {
  emit_step_function(signature_step_function(load_hermitian(c), spectral_tolerances(c)), c.format, out);
  return 0;
}

int cmd_l2_sig(const CliConfig& c, std::ostream& out) {
  require_format(c, {Format::kText, Format::kJson});
  const double l2 = l2_signature(center_valued_signature(load_hermitian(c), spectral_tolerances(c)));
  if (c.format == Format::kJson)
    out << trace_fragment_json(l2, {}, {}).dump(2) << '\n';
  else
    out << "sgn_(2) = " << format_number(l2) << " (normalized Haar)\n";
  return 0;
}

int cmd_twisted_sig(const CliConfig& c, std::ostream& out) {
  require_format(c, {Format::kText, Format::kJson});
  if (c.lambda.has_value() == !c.rep.empty()) throw UsageError("twisted-sig needs exactly one of --lambda or --rep");
  const UnitaryRep rep = c.lambda ? UnitaryRep::character(*c.lambda, "exp(i*" + format_number(*c.lambda) + ")")
                                  : rep_from_json(parse_inline_or_file(c.rep));
  const int sgn = twisted_signature(load_hermitian(c), rep, spectral_tolerances(c));
  if (c.format == Format::kJson)
    out << json{{"twisted", {{rep.label(), sgn}}}}.dump(2) << '\n';
  else
    out << "sgn_lambda(B) = " << sgn << " (rep " << rep.label() << ", dimension " << rep.dimension() << ")\n";
  return 0;
}

int cmd_deloc_sig(const CliConfig& c, std::ostream& out) {
  require_format(c, {Format::kText, Format::kJson});
  const SignatureStepFunction f = center_valued_signature(load_hermitian(c), spectral_tolerances(c));
  std::map<int, std::complex<double>> values;
  for (int n : c.n) values[n] = delocalized_signature(f, {n});
  if (c.format == Format::kJson) {
    out << trace_fragment_json(l2_signature(f), {}, values).dump(2) << '\n';
    return 0;
  }
  for (const auto& [n, v] : values)
    out << "sgn_" << DelocalizedClass{n}.label() << "(B) = " << format_complex(v) << " (normalized Haar)\n";
  return 0;
}

int cmd_rho_diff(const CliConfig& c, std::ostream& out) {
  const RhoReport r = build_rho_report(load_input(c), parse_pairs(c.pairs), parse_classes(c.n),
                                       spectral_tolerances(c), c.input_path);
  switch (c.format) {
    case Format::kJson:
      out << report_json(r).dump(2) << '\n';
      break;
    case Format::kCsv:
    case Format::kSvg:
      emit_step_function(r.step_function, c.format, out);
      break;
    case Format::kText:
      print_report_text(r, out);
      break;
  }
  return 0;
}

int cmd_sign_flip(const CliConfig& c, std::ostream& out) {
  const LaurentMatrix a = load_input(c);
  if (a.rows() != a.cols()) throw NonSquare("sign-flip needs a square diagonal matrix");
  std::vector<LaurentPoly> entries;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j)
        entries.push_back(a(i, i));
      else if (!a(i, j).is_zero())
        throw UsageError("sign-flip needs a diagonal matrix");
    }
  std::vector<int> flips = c.flips;
  if (flips.empty()) flips.assign(entries.size(), -1);
  const SignFlipComparison cmp =
      compare_sign_flip_family(entries, flips, parse_pairs(c.pairs), parse_classes(c.n), spectral_tolerances(c));
  switch (c.format) {
    case Format::kJson:
      out << sign_flip_json(cmp).dump(2) << '\n';
      break;
    case Format::kCsv:
    case Format::kSvg:
      emit_step_function(cmp.original.step_function, c.format, out);
      emit_step_function(cmp.flipped.step_function, c.format, out);
      break;
    case Format::kText:
      print_report_text(cmp.original, out);
      print_report_text(cmp.flipped, out);
      out << "homology_equal = " << std::boolalpha << cmp.homology_equal << '\n';
      out << "distinguishable = " << cmp.distinguishable << '\n';
      if (!cmp.conclusion.empty()) out << "conclusion: " << cmp.conclusion << '\n';
      break;
  }
  return 0;
}

int cmd_eta_check(const CliConfig& c, std::ostream& out) {
  require_format(c, {Format::kText, Format::kJson, Format::kCsv});
  EtaOptions options;
  options.tolerance = c.eta_tol;
  options.path = c.spectral_path ? TracePath::kSpectral : TracePath::kMatrixExponential;

  struct Row {
    std::string key;
    double eta;
    long sgn;
  };
  std::vector<Row> rows;
  std::string key_name;
  if (!c.input_path.empty()) {
    key_name = "theta";
    for (const auto& s : eta_field_on_circle(load_hermitian(c), c.grid, options, spectral_tolerances(c)))
      rows.push_back({format_number(s.theta), s.eta, s.signature});
  } else {
    if (c.dim < 1 || c.count < 1) throw UsageError("--dim and --count must be positive");
    key_name = "index";
    std::mt19937_64 rng(c.seed);
    for (int k = 0; k < c.count; ++k) {
      const ComplexMatrix h = random_hermitian(c.dim, rng);
      const double norm = h.cwiseAbs().maxCoeff();
      rows.push_back({std::to_string(k), eta_heat_integral(h, options).value,
                      static_cast<long>(inertia(h, c.zero_tol * norm).signature())});
    }
  }
  double max_err = 0.0;
  for (const auto& r : rows) max_err = std::max(max_err, std::abs(r.eta - static_cast<double>(r.sgn)));

  if (c.format == Format::kJson) {
    json table = json::array();
    for (const auto& r : rows)
      table.push_back({{key_name, r.key}, {"eta", r.eta}, {"sgn", r.sgn}, {"error", std::abs(r.eta - r.sgn)}});
    out << json{{"samples", table}, {"max_error", max_err}, {"tolerance", c.eta_tol}}.dump(2) << '\n';
    return 0;
  }
  const char* sep = c.format == Format::kCsv ? "," : "\t";
  out << key_name << sep << "eta" << sep << "sgn" << sep << "|eta-sgn|\n";
  for (const auto& r : rows)
    out << r.key << sep << format_number(r.eta, 12) << sep << r.sgn << sep
        << format_number(std::abs(r.eta - static_cast<double>(r.sgn)), 10) << '\n';
  if (c.format == Format::kText)
    out << "max |eta - sgn| = " << format_number(max_err) << (max_err < c.eta_tol ? " < " : " >= ")
        << format_number(c.eta_tol) << '\n';
  return 0;
}

int cmd_snf(const CliConfig& c, std::ostream& out) {
  require_format(c, {Format::kText, Format::kJson});
  const InvariantFactors inv = invariant_factors(load_input(c));
  if (c.format == Format::kJson) {
    out << invariant_factors_json(inv).dump(2) << '\n';
    return 0;
  }
  out << "kernel_rank = " << inv.kernel_rank << '\n';
  out << "factors:";
  if (inv.factors.empty()) out << " none";
  for (const auto& p : inv.factors) out << "\n  " << p;
  out << '\n';
  return 0;
}

int cmd_induce(const CliConfig& c, std::ostream& out) {
  require_format(c, {Format::kText, Format::kJson});
  const int sources = (c.central ? 1 : 0) + (c.class_json.empty() ? 0 : 1) + (c.powers.empty() ? 0 : 1);
  if (sources > 1) throw UsageError("induce takes one of --powers, --central or --class");
  ClassIntersection ci = c.central ? ClassIntersection::central(*c.central)
                         : !c.class_json.empty()
                             ? class_intersection_from_json(parse_inline_or_file(c.class_json))
                             : ClassIntersection(c.label, {c.powers.begin(), c.powers.end()});
  const SignatureStepFunction f = center_valued_signature(load_hermitian(c), spectral_tolerances(c));
  const std::complex<double> value = induced_delocalized_signature(f, ci);
  if (c.format == Format::kJson) {
    out << json{{"label", ci.label()}, {"powers", ci.powers()}, {"value", complex_json(value)}}.dump(2) << '\n';
    return 0;
  }
  out << "tau_" << ci.label() << "(sgn B) = " << format_complex(value) << " (normalized Haar)\n";
  return 0;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  static const std::map<std::string, Command> names = {
      {"sig-function", Command::kSigFunction}, {"l2-sig", Command::kL2Sig},     {"twisted-sig", Command::kTwistedSig},
      {"deloc-sig", Command::kDelocSig},       {"rho-diff", Command::kRhoDiff}, {"sign-flip", Command::kSignFlip},
      {"eta-check", Command::kEtaCheck},       {"snf", Command::kSnf},          {"induce", Command::kInduce}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "svg") return Format::kSvg;
  return std::nullopt;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.root_tol > 0) || !(config.zero_tol > 0) || !(config.eta_tol > 0))
      throw UsageError("tolerances must be positive");
    std::ostringstream buffer;
    int status = 0;
    switch (config.command) {
      case Command::kSigFunction: status = cmd_sig_function(config, buffer); break;
      case Command::kL2Sig: status = cmd_l2_sig(config, buffer); break;
      case Command::kTwistedSig: status = cmd_twisted_sig(config, buffer); break;
      case Command::kDelocSig: status = cmd_deloc_sig(config, buffer); break;
      case Command::kRhoDiff: status = cmd_rho_diff(config, buffer); break;
      case Command::kSignFlip: status = cmd_sign_flip(config, buffer); break;
      case Command::kEtaCheck: status = cmd_eta_check(config, buffer); break;
      case Command::kSnf: status = cmd_snf(config, buffer); break;
      case Command::kInduce: status = cmd_induce(config, buffer); break;
    }
    out << buffer.str();
    return status;
  } catch (const RhoError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rho_forge::cli
