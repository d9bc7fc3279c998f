#include "fobce_cli/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fobce/oracle.hpp"
#include "fobce/report.hpp"
#include "fobce/tptp.hpp"

namespace fobce::cli {

namespace fs = std::filesystem;

namespace {

struct FileResult {
  int code = exit_code::kOk;
  std::string report;
};

bool write_file(const fs::path& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (f) f << text;
  if (!f) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  return true;
}

// Replays the eliminations in order, checking each clause against the
// formula it was removed from.
int verify(const tptp::ProblemFile& problem, const BlockReport& report, const RunConfig& cfg, std::ostream& err) {
  Formula current = problem.formula;
  oracle::Limits limits{cfg.verify_depth, cfg.verify_cap};
  std::size_t inconclusive = 0;
  for (const auto& e : report.eliminated) {
    auto check = oracle::check_redundancy(current, e.clause, limits);
    if (check.verdict == oracle::Verdict::Refuted) {
      err << "verification failed: eliminating clause " << problem.clause_name(e.clause.id)
          << " changes satisfiability at depth " << check.depth << "\n";
      return exit_code::kVerificationFailed;
    }
    if (check.verdict == oracle::Verdict::Inconclusive) ++inconclusive;
    current.erase(e.clause.id);
  }
  if (inconclusive)
    err << "warning: " << inconclusive << " elimination(s) too large to verify at depth " << cfg.verify_depth << "\n";
  return exit_code::kOk;
}

FileResult process(const fs::path& input, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FileResult res;
  tptp::ProblemFile problem;
  try {
    problem = tptp::parse_file(input, cfg.include_dirs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    res.code = exit_code::kInputError;
    return res;
  }

  EliminationResult result;
  try {
    if (cfg.pure_only) {
      result = eliminate_pure(problem.formula);
    } else {
      EngineOptions opt;
      opt.mode = cfg.mode;
      opt.strategy = cfg.strategy;
      opt.delete_tautologies = cfg.delete_tautologies;
      opt.unsafe_noeq = cfg.unsafe_noeq;
      opt.time_limit_seconds = cfg.time_limit;
      result = eliminate(problem.formula, opt);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << input.string() << ": " << e.what() << "\n";
    res.code = exit_code::kInputError;
    return res;
  }
  const BlockReport& rep = result.report;

  if (cfg.verify) res.code = verify(problem, rep, cfg, err);

  auto reduced = tptp::with_formula(problem, result.formula);
  std::string text = tptp::print_problem(reduced);
  if (cfg.output) {
    fs::path target = *cfg.output;
    if (cfg.inputs.size() > 1) target = target / input.filename();
    if (!write_file(target, text, err)) {
      res.code = exit_code::kInputError;
      return res;
    }
  } else {
    out << text;
  }
  if (result.formula.empty()) out << "% Satisfiable (formula fully eliminated)\n";

  if (cfg.stats) {
    double pct = rep.clauses_in ? 100.0 * static_cast<double>(rep.eliminated.size()) / rep.clauses_in : 0.0;
    std::ostringstream s;
    s << std::fixed << std::setprecision(2);
    s << "% " << input.string() << ": mode " << to_string(rep.mode_used) << ", strategy "
      << (cfg.pure_only ? std::string("pure") : to_string(rep.strategy_used)) << "\n";
    s << "%   clauses in " << rep.clauses_in << ", out " << rep.clauses_out << ", eliminated "
      << rep.eliminated.size() << " (" << pct << "%)\n";
    s << "%   candidates " << rep.candidates_processed << ", validity tests " << rep.validity_tests << "\n";
    s << std::setprecision(6) << "%   time " << rep.seconds << " s" << (rep.timed_out ? " (time limit reached)" : "")
      << "\n";
    err << s.str();
  }

  if (cfg.report) {
    bool json = cfg.report->extension() == ".json";
    std::string source = cfg.inputs.size() > 1 ? input.string() : std::string();
    res.report = json ? report_json(rep, problem, source) : report_text(rep, problem, source);
  }
  return res;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputs.empty()) {
    err << "error: no input files\n";
    return exit_code::kInputError;
  }
  if (cfg.output && cfg.inputs.size() > 1 && !fs::is_directory(*cfg.output)) {
    err << "error: --output must be an existing directory when several inputs are given\n";
    return exit_code::kInputError;
  }

  int code = exit_code::kOk;
  std::vector<std::string> reports;
  for (const auto& input : cfg.inputs) {
    auto r = process(input, cfg, out, err);
    code = std::max(code, r.code);
    if (!r.report.empty()) reports.push_back(std::move(r.report));
  }

  if (cfg.report) {
    std::string text;
    if (cfg.report->extension() == ".json") {
      if (reports.size() == 1) {
        text = reports[0] + "\n";
      } else {
        text = "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) text += reports[i] + (i + 1 < reports.size() ? ",\n" : "\n");
        text += "]\n";
      }
    } else {
      for (const auto& r : reports) text += r;
    }
    if (!write_file(*cfg.report, text, err)) code = std::max(code, exit_code::kInputError);
  }
  return code;
}

}  // namespace fobce::cli
