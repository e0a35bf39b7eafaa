#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rho_forge::cli {

enum class Command { kSigFunction, kL2Sig, kTwistedSig, kDelocSig, kRhoDiff, kSignFlip, kEtaCheck, kSnf, kInduce };
enum class Format { kText, kJson, kCsv, kSvg };

struct CliConfig {
  Command command = Command::kSigFunction;
  std::string input_path;
  double root_tol = 1e-9;
  double zero_tol = 1e-9;
  double eta_tol = 1e-6;
  Format format = Format::kText;
  std::uint64_t seed = 7;
  /// Treat the input as A and use A + A^* (commands that take B).
  bool hermitianize = false;

  std::optional<double> lambda;      // twisted-sig, d = 1
  std::string rep;                   // twisted-sig: inline JSON or a path
  std::vector<int> n = {1};          // deloc-sig, rho-diff
  std::vector<std::string> pairs;    // rho-diff: "theta1,theta2"
  std::vector<int> flips;            // sign-flip
  std::vector<int> powers;           // induce
  std::string label = "<g>";         // induce
  std::optional<int> central;        // induce
  std::string class_json;            // induce: inline JSON or a path
  int dim = 5;                       // eta-check without input
  int count = 20;                    // eta-check without input
  int grid = 12;                     // eta-check with input
  bool spectral_path = false;        // eta-check
};

/// Exit codes: 0 success, 1 malformed input or flags, 2 domain error (the
/// diagnostic line names the error kind).
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

std::optional<Command> parse_command(const std::string& name);
std::optional<Format> parse_format(const std::string& name);

}  // namespace rho_forge::cli
