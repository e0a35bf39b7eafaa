#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using rho_forge::cli::CliConfig;
  CLI::App app{"rho-forge: signature and rho-invariant differences for Hermitian matrices over Z[Z]"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", config.input_path, "matrix JSON file");
    if (needs_input) in->required();
    sub->add_option("--root-tol", config.root_tol, "merge tolerance for circle roots (radians)");
    sub->add_option("--zero-tol", config.zero_tol, "relative zero threshold for eigenvalues");
    sub->add_option("--eta-tol", config.eta_tol, "tolerance of the heat integral");
    sub->add_option("--format", format, "text | json | csv | svg");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_flag("--hermitianize", config.hermitianize, "use A + A^* instead of the input itself");
  };

  auto* sig = app.add_subcommand("sig-function", "pointwise signature step function");
  add_common(sig, true);
  auto* l2 = app.add_subcommand("l2-sig", "L2-signature");
  add_common(l2, true);
  auto* twisted = app.add_subcommand("twisted-sig", "signature twisted by a unitary representation");
  add_common(twisted, true);
  twisted->add_option("--lambda", config.lambda, "angle of a one-dimensional representation");
  twisted->add_option("--rep", config.rep, "representation JSON, inline or a file path");
  auto* deloc = app.add_subcommand("deloc-sig", "delocalized signatures (Fourier coefficients)");
  add_common(deloc, true);
  deloc->add_option("--n", config.n, "class powers");
  auto* rho = app.add_subcommand("rho-diff", "rho-invariant difference report for A");
  add_common(rho, true);
  rho->add_option("--n", config.n, "delocalized class powers");
  rho->add_option("--pair", config.pairs, "pair of one-dimensional representations 'theta1,theta2'");
  auto* flip = app.add_subcommand("sign-flip", "compare diag(A_i) with diag(eps_i A_i)");
  add_common(flip, true);
  flip->add_option("--flips", config.flips, "signs eps_i (default all -1)");
  flip->add_option("--n", config.n, "delocalized class powers");
  flip->add_option("--pair", config.pairs, "pair of one-dimensional representations 'theta1,theta2'");
  auto* eta = app.add_subcommand("eta-check", "heat-integral eta against the signature");
  add_common(eta, false);
  eta->add_option("--dim", config.dim, "dimension of random matrices");
  eta->add_option("--count", config.count, "number of random matrices");
  eta->add_option("--grid", config.grid, "grid size on the circle (with an input matrix)");
  eta->add_flag("--spectral", config.spectral_path, "evaluate the heat trace from eigenvalues");
  auto* snf = app.add_subcommand("snf", "invariant factors over Q(i)[z, z^-1]");
  add_common(snf, true);
  auto* induce = app.add_subcommand("induce", "delocalized signature induced to a supergroup");
  add_common(induce, true);
  induce->add_option("--powers", config.powers, "powers n with z^n in <g>");
  induce->add_option("--label", config.label, "name of the class <g>");
  induce->add_option("--central", config.central, "central embedding, class of z^n");
  induce->add_option("--class", config.class_json, "class intersection JSON, inline or a file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  config.command = *rho_forge::cli::parse_command(app.get_subcommands().front()->get_name());
  auto parsed = rho_forge::cli::parse_format(format);
  if (!parsed) {
    std::cerr << "error: Usage: unknown format '" << format << "'\n";
    return 1;
  }
  config.format = *parsed;
  return rho_forge::cli::run(config, std::cout, std::cerr);
}
