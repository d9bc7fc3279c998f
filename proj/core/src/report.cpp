#include "fobce/report.hpp"

#include <map>
#include <sstream>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace fobce {

std::string to_string(Mode m) { return m == Mode::Eq ? "eq" : "noeq"; }

std::string to_string(Strategy s) { return s == Strategy::Exact ? "exact" : "approx"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::Blocked:
      return "blocked";
    case Reason::Tautology:
      return "tautology";
    case Reason::Pure:
      return "pure";
  }
  return "?";
}

namespace {

std::string blocking_literal(const Elimination& e, const SymbolTable& symbols) {
  if (e.literal_pos == Elimination::kNoLiteral) return "-";
  // Name variables as in the printed clause.
  std::map<VarId, std::string> names;
  for (const auto& l : e.clause.literals) tptp::format_literal(symbols, l, names);
  return tptp::format_literal(symbols, e.clause[e.literal_pos], names);
}

}  // namespace

std::string report_text(const BlockReport& r, const tptp::ProblemFile& problem, const std::string& source) {
  std::ostringstream out;
  if (!source.empty()) out << "# file " << source << "\n";
  out << "# mode " << to_string(r.mode_used) << " strategy " << to_string(r.strategy_used) << "\n";
  out << "# clauses_in " << r.clauses_in << " clauses_out " << r.clauses_out << " eliminated "
      << r.eliminated.size() << "\n";
  out << "# candidates " << r.candidates_processed << " validity_tests " << r.validity_tests
      << (r.timed_out ? " timed_out" : "") << "\n";
  for (const auto& e : r.eliminated)
    out << problem.clause_name(e.clause.id) << "\t" << to_string(e.reason) << "\t"
        << blocking_literal(e, problem.formula.symbols()) << "\t" << e.partners_tested << "\n";
  return out.str();
}

std::string report_json(const BlockReport& r, const tptp::ProblemFile& problem, const std::string& source) {
  nlohmann::ordered_json j;
  if (!source.empty()) j["file"] = source;
  j["mode"] = to_string(r.mode_used);
  j["strategy"] = to_string(r.strategy_used);
  j["clauses_in"] = r.clauses_in;
  j["clauses_out"] = r.clauses_out;
  j["candidates_processed"] = r.candidates_processed;
  j["validity_tests"] = r.validity_tests;
  j["timed_out"] = r.timed_out;
  auto& list = j["eliminated"] = nlohmann::ordered_json::array();
  for (const auto& e : r.eliminated) {
    nlohmann::ordered_json rec;
    rec["clause"] = problem.clause_name(e.clause.id);
    rec["reason"] = to_string(e.reason);
    rec["literal"] = blocking_literal(e, problem.formula.symbols());
    rec["partners_tested"] = e.partners_tested;
    list.push_back(std::move(rec));
  }
  return j.dump(2);
}

}  // namespace fobce
