// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "fobce/bce.hpp"
#include "fobce/blocked.hpp"
#include "fobce/oracle.hpp"
#include "fobce/tptp.hpp"
#include "gen.hpp"
#include "lemmas.hpp"

using namespace fobce;
namespace fs = std::filesystem;
using fobce::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

tptp::ProblemFile load(const std::string& file) { return tptp::parse_file(fs::path(FOBCE_DATA_DIR) / file); }

ClauseId id_of(const tptp::ProblemFile& p, const std::string& name) {
  for (const auto& s : p.statements)
    if (s.name == name) return s.id;
  throw std::runtime_error("no clause named " + name);
}

std::vector<Term> two_constants(Formula& f) {
  auto& s = f.symbols();
  return {Term::app(s.intern("a", SymbolKind::Constant, 0)), Term::app(s.intern("b", SymbolKind::Constant, 0))};
}

// Formulas shared by the redundancy and approximation criteria.
std::vector<Formula> small_formulas(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<Formula> out;
  for (int i = 0; i < n; ++i) out.push_back(fobce::testing::random_small_formula(rng, i % 2));
  return out;
}

Outcome golden() {
  Outcome o;
  auto start = Clock::now();
  auto ex4 = load("ex4.p");
  for (const auto& [id, c] : ex4.formula.clauses())
    for (std::size_t i = 0; i < c.size(); ++i)
      if (is_blocked(ex4.formula, id, i, Mode::NoEq)) o.fail("ex4: a literal is blocked");
  if (!eliminate(ex4.formula).report.eliminated.empty()) o.fail("ex4: something was eliminated");

  auto ex5 = load("ex5.p");
  if (!is_blocked(ex5.formula, id_of(ex5, "c"), 0, Mode::NoEq)) o.fail("ex5: c not blocked by p(X,Y)");

  auto ex6 = load("ex6.p");
  ClauseId c6 = id_of(ex6, "c");
  if (!is_blocked(ex6.formula, c6, 0, Mode::NoEq)) o.fail("ex6: c not blocked when equality is ignored");
  if (is_blocked(ex6.formula, c6, 0, Mode::Eq)) o.fail("ex6: c equality-blocked");

  auto agatha = load("agatha.p");
  if (eliminate(agatha.formula).formula.size() != 0) o.fail("agatha: formula not emptied");

  double t = since(start);
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "4 examples in " + std::to_string(t) + " s";
  return o;
}

Outcome pairs(Mode mode, int n, unsigned max_partners, std::uint64_t seed, double budget) {
  Outcome o;
  Rng rng(seed);
  auto start = Clock::now();
  int blocked = 0;
  for (int i = 0; i < n && o.pass; ++i) {
    auto inst = fobce::testing::random_pair(rng, mode, max_partners);
    bool expected = fobce::testing::brute_all_resolvents_valid(inst.c(), inst.l_pos, inst.d(), mode);
    bool got = partner_check(inst.c(), inst.l_pos, inst.d(), mode, Strategy::Exact);
    blocked += expected;
    if (got != expected) o.fail("pair " + std::to_string(i) + " disagrees with brute force");
  }
  double t = since(start);
  if (t >= budget) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(n) + " pairs, " + std::to_string(blocked) + " blocked, " + std::to_string(t) + " s";
  return o;
}

Outcome redundancy(Strategy strategy) {
  Outcome o;
  int replayed = 0, inconclusive = 0;
  for (auto& f : small_formulas(400, 500)) {
    auto constants = two_constants(f);
    auto r = eliminate(f, ModeChoice::Auto, strategy);
    Formula current = f;
    for (const auto& e : r.report.eliminated) {
      auto check = oracle::check_redundancy(current, e.clause, {1, 20000}, constants);
      if (check.verdict == oracle::Verdict::Refuted) o.fail("refuted: " + check.note);
      inconclusive += check.verdict == oracle::Verdict::Inconclusive;
      current.erase(e.clause.id);
      ++replayed;
    }
  }
  if (o.pass)
    o.detail = std::to_string(replayed) + " eliminations replayed, " + std::to_string(inconclusive) + " inconclusive";
  return o;
}

Outcome confluence() {
  Outcome o;
  Rng rng(500);
  for (int i = 0; i < 200 && o.pass; ++i) {
    Formula f = fobce::testing::random_small_formula(rng, i % 2);
    auto base = canonical_keys(eliminate(f).formula);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      EngineOptions opt;
      opt.random_order_seed = seed;
      if (canonical_keys(eliminate(f, opt).formula) != base) o.fail("formula " + std::to_string(i) + " order-dependent");
    }
  }
  if (o.pass) o.detail = "200 formulas x 5 orders";
  return o;
}

Outcome worked_repair() {
  Outcome o;
  auto p = load("ex5.p");
  auto& f = p.formula;
  auto& s = f.symbols();
  auto P = *s.find("p", SymbolKind::Predicate, 2), Q = *s.find("q", SymbolKind::Predicate, 1);
  auto a = Term::app(*s.find("a", SymbolKind::Constant, 0)), b = Term::app(*s.find("b", SymbolKind::Constant, 0));
  Literal pab(true, P, {a, b}), pba(true, P, {b, a}), qb(true, Q, {b});
  oracle::GroundAssignment alpha;
  alpha.set(pab, false);
  alpha.set(pba, true);
  alpha.set(qb, false);
  Formula rest = f;
  rest.erase(id_of(p, "c"));
  std::vector<Term> ab{a, b};
  auto side = oracle::ground_instances(rest, ab);
  std::vector<oracle::BlockedInstance> instances{{Clause{0, {pab, pba.complement(), qb}}, pab},
                                                 {Clause{0, {pba, pab.complement(), qb}}, pba}};
  auto r = oracle::repair_by_flipping(alpha, instances, oracle::FlipMode::Flip, &side);
  if (!r.ok) o.fail("repair failed: " + r.error);
  else if (!r.assignment.value(pab) || !r.assignment.value(pba) || r.assignment.value(qb))
    o.fail("unexpected repaired assignment");
  return o;
}

Outcome flipping() {
  Outcome o = worked_repair();
  Rng rng(600);
  auto plain = fobce::testing::run_flip_lemma(rng, 300, false);
  auto eq = fobce::testing::run_flip_lemma(rng, 300, true);
  if (plain.failures) o.fail("flip: " + plain.first_failure);
  if (eq.failures) o.fail("equivalence flip: " + eq.first_failure);
  if (plain.instances < 300 || eq.instances < 300) o.fail("too few instances generated");
  if (o.pass)
    o.detail = std::to_string(plain.instances) + " flip and " + std::to_string(eq.instances) +
               " equivalence flip instances, worked example ok";
  return o;
}

Outcome pure_subsumed() {
  Outcome o;
  Rng rng(700);
  for (int i = 0; i < 200 && o.pass; ++i) {
    Formula f = fobce::testing::random_small_formula(rng, i % 2);
    auto bce = fobce::testing::clause_ids(eliminate(f).formula);
    auto ppe = fobce::testing::clause_ids(eliminate_pure(f).formula);
    for (auto id : bce)
      if (!ppe.count(id)) o.fail("formula " + std::to_string(i) + ": pure elimination removed a survivor");
    auto index = build_index(f);
    for (const auto& [id, c] : f.clauses())
      for (const auto& l : c.literals)
        if (!l.is_equality() && !index.find(l.predicate(), !l.positive()) && bce.count(id))
          o.fail("formula " + std::to_string(i) + ": clause with a pure literal survived");
  }
  if (o.pass) o.detail = "200 formulas";
  return o;
}

Outcome approx() {
  Outcome o = redundancy(Strategy::Approx);
  std::size_t approx_total = 0, exact_total = 0;
  for (const auto& f : small_formulas(400, 500)) {
    auto exact = fobce::testing::clause_ids(eliminate(f, ModeChoice::Auto, Strategy::Exact).formula);
    auto appr = fobce::testing::clause_ids(eliminate(f, ModeChoice::Auto, Strategy::Approx).formula);
    for (auto id : exact)
      if (!appr.count(id)) o.fail("approx eliminated a clause exact kept");
    approx_total += f.size() - appr.size();
    exact_total += f.size() - exact.size();
  }
  if (o.pass)
    o.detail += "; approx removed " + std::to_string(approx_total) + " of exact's " + std::to_string(exact_total);
  return o;
}

// Random TPTP text with quoted names, equations and empty clauses.
std::string fuzz_problem(Rng& rng) {
  const std::vector<std::string> constants{"a", "b", "'it\\'s'", "'Big'", "'with space'", "c1"};
  const std::vector<std::string> vars{"X", "Y", "Z1"};
  const std::vector<std::pair<std::string, int>> functions{{"f", 1}, {"'g h'", 2}};
  const std::vector<std::pair<std::string, int>> predicates{{"p", 1}, {"q", 2}, {"'P r'", 1}, {"r", 0}};
  const std::vector<std::string> names{"c", "ax_1", "'odd name'", "'n\\\\x'"};
  std::function<std::string(int)> term = [&](int depth) -> std::string {
    auto k = rng() % 4;
    if (k == 0) return vars[rng() % vars.size()];
    if (k == 1 || depth == 0) return constants[rng() % constants.size()];
    const auto& [fn, arity] = functions[rng() % functions.size()];
    std::string out = fn + "(";
    for (int i = 0; i < arity; ++i) out += (i ? "," : "") + term(depth - 1);
    return out + ")";
  };
  std::ostringstream out;
  int clauses = 1 + int(rng() % 5);
  for (int c = 0; c < clauses; ++c) {
    out << "cnf(" << names[rng() % names.size()] << ", " << (rng() % 2 ? "axiom" : "negated_conjecture") << ", ";
    int lits = int(rng() % 4);
    if (lits == 0) out << "$false";
    for (int l = 0; l < lits; ++l) {
      if (l) out << " | ";
      if (rng() % 4 == 0) {
        out << term(2) << (rng() % 2 ? " = " : " != ") << term(2);
        continue;
      }
      if (rng() % 2) out << "~";
      const auto& [pred, arity] = predicates[rng() % predicates.size()];
      out << pred;
      if (arity) {
        out << "(";
        for (int i = 0; i < arity; ++i) out << (i ? "," : "") << term(2);
        out << ")";
      }
    }
    out << ").\n";
  }
  return out.str();
}

Outcome round_trip() {
  Outcome o;
  Rng rng(900);
  int quoted = 0;
  for (int i = 0; i < 1000 && o.pass; ++i) {
    std::string text = fuzz_problem(rng);
    auto p = tptp::parse_problem(text);
    auto printed = tptp::print_problem(p);
    quoted += printed.find('\'') != std::string::npos;
    auto q = tptp::parse_problem(printed);
    if (canonical_keys(p.formula, true) != canonical_keys(q.formula, true))
      o.fail("fuzz case " + std::to_string(i) + " changed:\n" + text);
    else if (tptp::print_problem(q) != printed)
      o.fail("fuzz case " + std::to_string(i) + " prints differently the second time");
  }
  int files = 0;
  for (const auto& entry : fs::directory_iterator(FOBCE_DATA_DIR)) {
    if (entry.path().extension() != ".p") continue;
    auto p = tptp::parse_file(entry.path());
    auto q = tptp::parse_problem(tptp::print_problem(p));
    if (canonical_keys(p.formula, true) != canonical_keys(q.formula, true))
      o.fail(entry.path().filename().string() + " changed");
    ++files;
  }
  if (o.pass)
    o.detail = "1000 fuzzed (" + std::to_string(quoted) + " with quoting) and " + std::to_string(files) + " bundled";
  return o;
}

Outcome bundled() {
  Outcome o;
  std::size_t in = 0, removed = 0;
  double slowest = 0;
  for (const auto& entry : fs::directory_iterator(FOBCE_DATA_DIR)) {
    if (entry.path().extension() != ".p") continue;
    auto p = tptp::parse_file(entry.path());
    auto start = Clock::now();
    auto r = eliminate(p.formula);
    double t = since(start);
    slowest = std::max(slowest, t);
    if (t >= 0.1) o.fail(entry.path().filename().string() + " took " + std::to_string(t) + " s");
    in += r.report.clauses_in;
    removed += r.report.eliminated.size();
  }
  if (removed == 0) o.fail("nothing eliminated");
  if (o.pass) {
    std::ostringstream d;
    d << removed << " of " << in << " clauses eliminated (" << 100.0 * double(removed) / double(in)
      << "%), slowest " << slowest * 1000 << " ms";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden examples", golden},
      {"plain blocking vs brute force", [] { return pairs(Mode::NoEq, 1000, 8, 200, 60); }},
      {"equality blocking vs brute force", [] { return pairs(Mode::Eq, 500, 6, 300, 60); }},
      {"eliminated clauses are redundant", [] { return redundancy(Strategy::Exact); }},
      {"order independence", confluence},
      {"flipping lemmas", flipping},
      {"pure elimination subsumed", pure_subsumed},
      {"approximation sound and weaker", approx},
      {"TPTP round trip", round_trip},
      {"bundled problems", bundled},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
