#include "doctest.h"
#include "fobce/report.hpp"

using namespace fobce;

namespace {

const std::string kProblem =
    "cnf(c, axiom, p(X,Y) | ~p(Y,X) | q(b)).\ncnf(d1, axiom, ~p(a,b) | p(b,a)).\ncnf(d2, axiom, ~q(b)).\n";

}  // namespace

TEST_CASE("names of enumerations") {
  CHECK(to_string(Mode::NoEq) == "noeq");
  CHECK(to_string(Mode::Eq) == "eq");
  CHECK(to_string(Strategy::Exact) == "exact");
  CHECK(to_string(Strategy::Approx) == "approx");
  CHECK(to_string(Reason::Blocked) == "blocked");
  CHECK(to_string(Reason::Pure) == "pure");
  CHECK(to_string(Reason::Tautology) == "tautology");
}

TEST_CASE("text report") {
  auto p = tptp::parse_problem(kProblem);
  auto r = eliminate(p.formula);
  auto text = report_text(r.report, p);
  CHECK(text.rfind("# mode noeq strategy exact\n", 0) == 0);
  CHECK(text.find("# clauses_in 3 clauses_out 0 eliminated 3\n") != std::string::npos);
  CHECK(text.find("c\tblocked\tp(X,Y)\t1\n") != std::string::npos);
  CHECK(text.find("# file") == std::string::npos);
  CHECK(report_text(r.report, p, "x.p").find("# file x.p\n") != std::string::npos);
  // No timing, so equal runs give equal reports.
  CHECK(report_text(eliminate(p.formula).report, p) == text);
}

TEST_CASE("json report") {
  auto p = tptp::parse_problem(kProblem);
  auto r = eliminate(p.formula);
  auto json = report_json(r.report, p, "x.p");
  CHECK(json.front() == '{');
  CHECK(json.back() == '}');
  CHECK(json.find("\"file\": \"x.p\"") != std::string::npos);
  CHECK(json.find("\"mode\": \"noeq\"") != std::string::npos);
  CHECK(json.find("\"clause\": \"c\"") != std::string::npos);
  CHECK(json.find("\"literal\": \"p(X,Y)\"") != std::string::npos);
  CHECK(json.find("\"partners_tested\": 1") != std::string::npos);
  CHECK(json.find("seconds") == std::string::npos);
}
