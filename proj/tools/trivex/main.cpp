#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "app/commands.hpp"
#include "trivex/error.hpp"
#include "trivex/version.hpp"

using namespace trivex;

int main(int argc, char** argv) {
  app::RunConfig cfg;
  CLI::App cli{"Expander Cayley graphs of 2-quotients, their Delta-Y tessellations and hyperbolic surfaces", "trivex"};
  cli.set_version_flag("--version", kVersion);
  cli.set_config("--config", "", "TOML file with option defaults; command-line flags take precedence");
  cli.fallthrough();
  cli.require_subcommand(1);

  cli.add_option("--k", cfg.k, "Class k of the quotient G_k")->capture_default_str();
  cli.add_option("--k-max", cfg.k_max, "Largest class used by verify-all")->capture_default_str();
  cli.add_option("--enum-cap", cfg.enum_cap, "Cap on enumerated group elements")->capture_default_str();
  cli.add_option("--dense-cap", cfg.dense_cap, "Largest graph handled by the dense eigensolver")->capture_default_str();
  cli.add_option("--iter-cap", cfg.iter_cap, "Lanczos restart cap")->capture_default_str();
  cli.add_option("--tol", cfg.tol, "Eigenpair residual tolerance")->capture_default_str();
  cli.add_option("--out", cfg.out_dir, "Output directory, or - for stdout")->capture_default_str();
  cli.add_option("--cache", cfg.cache_dir, "Cache directory (empty disables)")->envname("TRIVEX_CACHE");
  cli.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  cli.add_option("--seed", cfg.seed, "Seed for Lanczos start vectors and random checks")->capture_default_str();
  cli.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "graph6", "edgelist", "svg"}));

  std::string which = "X";
  int modulus = 8;
  int radius = 3;

  auto* group = cli.add_subcommand("group", "Power-commutator presentation of G_k (json)");
  auto* graph = cli.add_subcommand("graph", "Cayley graph X_k, tessellation graph T_k or its dual (edgelist, graph6, dot, csv)");
  graph->add_option("--which", which, "X, T or dual")->check(CLI::IsMember({"X", "T", "dual"}))->capture_default_str();
  auto* spectrum = cli.add_subcommand("spectrum", "Spectrum report for X_k or T_k (json, csv)");
  spectrum->add_option("--which", which, "X or T")->check(CLI::IsMember({"X", "T"}))->capture_default_str();
  auto* faces = cli.add_subcommand("faces", "Face structure and genus of the surface S_k (json, csv)");
  auto* platonic = cli.add_subcommand("platonic", "Platonic graph Pi_N; with --duality also the verdict for T_k*");
  platonic->add_option("--N", modulus, "Modulus N >= 2")->capture_default_str();
  auto* duality = platonic->add_flag("--duality", "Compare the dual of T_k with Pi_{2^{n_k+1}}");
  auto* render = cli.add_subcommand("render", "Poincare disk picture of the tessellation of S_k (svg)");
  render->add_option("--radius", radius, "Combinatorial radius around the seed face")->capture_default_str();
  auto* verify = cli.add_subcommand("verify-all", "Run every acceptance check for k = 1..k-max and write ledger.json");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? app::kExitPass : app::kExitUsage;
  }

  try {
    app::Pipeline pipe(cfg);
    if (group->parsed()) return app::cmd_group(pipe, std::cout);
    if (graph->parsed()) return app::cmd_graph(pipe, which, std::cout);
    if (spectrum->parsed()) return app::cmd_spectrum(pipe, which, std::cout);
    if (faces->parsed()) return app::cmd_faces(pipe, std::cout);
    if (platonic->parsed()) return app::cmd_platonic(pipe, modulus, duality->count() > 0, std::cout);
    if (render->parsed()) return app::cmd_render(pipe, radius, std::cout);
    if (verify->parsed()) return app::cmd_verify_all(pipe, std::cout);
  } catch (const CapExceeded& e) {
    std::cerr << "trivex: resource cap: " << e.what() << '\n';
    return app::kExitCap;
  } catch (const NotConverged& e) {
    std::cerr << "trivex: iteration cap: " << e.what() << '\n';
    return app::kExitCap;
  } catch (const InvalidArgument& e) {
    std::cerr << "trivex: " << e.what() << '\n';
    return app::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "trivex: " << e.what() << '\n';
    return app::kExitVerification;
  }
  return app::kExitUsage;
}
