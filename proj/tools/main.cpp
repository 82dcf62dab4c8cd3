#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "scf/errors.hpp"
#include "scf/version.hpp"

namespace {

using scf::cli::Command;
using scf::cli::RunConfig;

void add_common_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_flag("--json", config.json_output, "emit the report as JSON on stdout");
  cmd->add_option("--workers", config.workers, "worker threads for the scans")
      ->envname("SCF_WORKERS")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", config.out_path, "also write the JSON report to this file");
}

int emit(const scf::cli::Report& report, const RunConfig& config) {
  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out) {
      std::cerr << "error: cannot open " << config.out_path << " for writing\n";
      return scf::cli::kExitUsage;
    }
    out << report.to_json().dump(2) << "\n";
  }
  if (config.json_output)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.text;
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic SCF (strong fusion control) decision tools"};
  app.set_version_flag("--version", scf::kVersion);
  app.require_subcommand(1);

  RunConfig config;

  CLI::App* circle = app.add_subcommand(
      "circle", "decide SCF for the circle subgroup diag(z^a1..z^an) of U(n)");
  circle->add_option("--weights", config.weights, "weight sequence a1,a2,...")
      ->required()
      ->delimiter(',');
  circle->add_option("--m-max", config.m_max, "modulus search bound (default n*max(a)^2)");
  add_common_flags(circle, config);

  CLI::App* so3 = app.add_subcommand(
      "so3", "decide SCF for a sum of irreducible rotation representations");
  so3->add_option("--spins", config.spins, "spin sequence a1,a2,...")->required()->delimiter(',');
  so3->add_option("--q-max", config.q_max, "angle order search bound")->check(CLI::PositiveNumber);
  add_common_flags(so3, config);

  CLI::App* search = app.add_subcommand(
      "so3-search", "classify all spin sequences with bounded sum");
  search->add_option("--sum-max", config.sum_max, "largest spin sum to enumerate")->required();
  search->add_option("--q-max", config.q_max, "angle order search bound per sequence")
      ->check(CLI::PositiveNumber);
  add_common_flags(search, config);

  CLI::App* conj = app.add_subcommand(
      "weyl-conj", "canonical forms and torus conjugacy of two elements");
  conj->add_option("--x", config.x_text, "first element: JSON or comma turns")->required();
  conj->add_option("--y", config.y_text, "second element")->required();
  conj->add_option("--group", config.group_text,
                   "group for bare turn lists: 'u 3', 'so 8', 'sp 2', 'o 7' or JSON");
  add_common_flags(conj, config);

  CLI::App* fusion = app.add_subcommand(
      "fusion", "exhaustive elementwise fusion control at torsion level q");
  fusion->add_option("--sub", config.sub_text, "subgroup, e.g. 'so 7'")->required();
  fusion->add_option("--amb", config.amb_text, "ambient group, e.g. 'so 8'")->required();
  fusion->add_option("--q", config.torsion_q, "torsion order bound")->check(CLI::PositiveNumber);
  add_common_flags(fusion, config);

  CLI::App* sympair = app.add_subcommand(
      "sympair", "symmetric-pair SCF catalog and machine-checked witnesses");
  sympair->add_flag("--list", config.list_catalog, "dump the full catalog");
  sympair->add_option("--family", config.pair_family,
                      "family token (see --list); equal-rank-{so,sp,u} build witnesses");
  sympair->add_option("--n", config.n, "family parameter n");
  sympair->add_option("--p", config.p, "family parameter p");
  sympair->add_option("--q", config.q, "family parameter q");
  sympair->add_option("--theta", config.theta, "witness rotation turn, e.g. 1/5");
  add_common_flags(sympair, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : scf::cli::kExitUsage;
  }

  if (circle->parsed()) config.command = Command::Circle;
  else if (so3->parsed()) config.command = Command::So3;
  else if (search->parsed()) config.command = Command::So3Search;
  else if (conj->parsed()) config.command = Command::WeylConj;
  else if (fusion->parsed()) config.command = Command::Fusion;
  else config.command = Command::Sympair;

  if (sympair->parsed() && !config.list_catalog && config.pair_family.empty()) {
    std::cerr << "error: sympair needs --family or --list\n";
    return scf::cli::kExitUsage;
  }

  try {
    return emit(scf::cli::run(config), config);
  } catch (const scf::invalid_input& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
    return scf::cli::kExitUsage;
  } catch (const scf::refusal& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "refusal"}}.dump() << "\n";
    return scf::cli::kExitRefusal;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return 1;
  }
}
