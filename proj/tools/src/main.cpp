#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fobce_cli/cli.hpp"

int main(int argc, char** argv) {
  using namespace fobce;
  cli::RunConfig cfg;
  std::string mode = "auto", strategy = "exact";
  double time_limit = 0;

  CLI::App app{"Blocked-clause elimination for first-order CNF problems in TPTP syntax"};
  app.add_option("inputs", cfg.inputs, "TPTP CNF problem files")->required();
  app.add_option("-o,--output", cfg.output, "Write the reduced problem here (a directory for several inputs)");
  app.add_option("--mode", mode, "Blocking notion: auto picks eq iff the problem uses equality")
      ->check(CLI::IsMember({"auto", "noeq", "eq"}));
  app.add_option("--strategy", strategy, "exact: all L-resolvents; approx: binary resolvents only")
      ->check(CLI::IsMember({"exact", "approx"}));
  app.add_flag("--verify", cfg.verify, "Check every elimination with the ground redundancy oracle");
  app.add_option("--verify-depth", cfg.verify_depth, "Term depth of the oracle's Herbrand universe");
  app.add_option("--verify-cap", cfg.verify_cap, "Maximum number of ground clauses per oracle check");
  app.add_flag("--pure-only", cfg.pure_only, "Only remove clauses with pure predicates");
  app.add_flag("--delete-tautologies", cfg.delete_tautologies, "Remove valid input clauses first");
  app.add_flag("--stats", cfg.stats, "Print statistics to standard error");
  app.add_option("--report", cfg.report, "Write an elimination report (JSON if the name ends in .json)");
  app.add_option("-I,--include-dir", cfg.include_dirs, "Directory searched for include files");
  app.add_option("--time-limit", time_limit, "Stop eliminating after this many seconds")->check(CLI::PositiveNumber);
  app.add_flag("--unsafe-noeq", cfg.unsafe_noeq, "Allow noeq mode on problems with equality (unsound)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::exit_code::kInputError;
  }

  static const std::map<std::string, ModeChoice> modes{
      {"auto", ModeChoice::Auto}, {"noeq", ModeChoice::NoEq}, {"eq", ModeChoice::Eq}};
  cfg.mode = modes.at(mode);
  cfg.strategy = strategy == "approx" ? Strategy::Approx : Strategy::Exact;
  if (time_limit > 0) cfg.time_limit = time_limit;

  return cli::run(cfg, std::cout, std::cerr);
}
