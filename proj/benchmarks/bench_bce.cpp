#include <benchmark/benchmark.h>

#include <random>

#include "fobce/bce.hpp"
#include "fobce/blocked.hpp"
#include "fobce/congruence.hpp"
#include "fobce/resolve.hpp"

using namespace fobce;

namespace {

// Clauses of up to three literals over a handful of predicates, constants
// and one unary function. `equations` is the chance of an equation literal.
Formula random_formula(std::size_t clauses, double equations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Formula f;
  auto& s = f.symbols();
  std::vector<SymbolId> preds;
  for (int i = 0; i < 8; ++i) preds.push_back(s.intern("p" + std::to_string(i), SymbolKind::Predicate, 2));
  std::vector<Term> constants;
  for (int i = 0; i < 4; ++i) constants.push_back(Term::app(s.intern("c" + std::to_string(i), SymbolKind::Constant, 0)));
  SymbolId fn = s.intern("f", SymbolKind::Function, 1);
  std::bernoulli_distribution eq(equations);
  auto term = [&]() {
    switch (rng() % 4) {
      case 0:
      case 1: return Term::var(VarId(rng() % 3));
      case 2: return constants[rng() % constants.size()];
      default: return Term::app(fn, {Term::var(VarId(rng() % 3))});
    }
  };
  for (std::size_t i = 0; i < clauses; ++i) {
    std::vector<Literal> lits;
    for (int k = 1 + int(rng() % 3); k > 0; --k) {
      if (eq(rng)) lits.push_back(Literal::equality(rng() % 2, term(), term()));
      else lits.emplace_back(rng() % 2, preds[rng() % preds.size()], std::vector<Term>{term(), term()});
    }
    f.add(std::move(lits));
  }
  return f;
}

void BM_EliminatePlain(benchmark::State& state) {
  Formula f = random_formula(std::size_t(state.range(0)), 0.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(f).report.eliminated.size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EliminatePlain)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_EliminateEq(benchmark::State& state) {
  Formula f = random_formula(std::size_t(state.range(0)), 0.15, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(f).report.eliminated.size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EliminateEq)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_EliminateEqApprox(benchmark::State& state) {
  Formula f = random_formula(std::size_t(state.range(0)), 0.15, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(eliminate(f, ModeChoice::Auto, Strategy::Approx).report.eliminated.size());
}
BENCHMARK(BM_EliminateEqApprox)->RangeMultiplier(4)->Range(64, 1024);

void BM_EliminatePure(benchmark::State& state) {
  Formula f = random_formula(std::size_t(state.range(0)), 0.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_pure(f).report.eliminated.size());
}
BENCHMARK(BM_EliminatePure)->RangeMultiplier(4)->Range(64, 4096);

// One candidate against a partner with n opposing literals: the exact check
// walks all 2^n - 1 partner subsets.
Formula partner_pair(int n) {
  Formula f;
  auto& s = f.symbols();
  SymbolId p = s.intern("p", SymbolKind::Predicate, 2);
  SymbolId q = s.intern("q", SymbolKind::Predicate, 1);
  Term a = Term::app(s.intern("a", SymbolKind::Constant, 0));
  Term x = Term::var(0), y = Term::var(1);
  f.add({Literal(true, p, {x, y}), Literal(false, p, {y, x}), Literal(true, q, {x})});
  std::vector<Literal> d;
  for (int i = 0; i < n; ++i) d.emplace_back(false, p, std::vector<Term>{Term::var(VarId(10 + i)), i % 2 ? a : Term::var(VarId(10 + i))});
  d.emplace_back(false, q, std::vector<Term>{a});
  f.add(std::move(d));
  return f;
}

void BM_PartnerCheck(benchmark::State& state, Mode mode, Strategy strategy) {
  Formula f = partner_pair(int(state.range(0)));
  const Clause& c = f.at(0);
  const Clause& d = f.at(1);
  for (auto _ : state) benchmark::DoNotOptimize(partner_check(c, 0, d, mode, strategy));
}
BENCHMARK_CAPTURE(BM_PartnerCheck, plain, Mode::NoEq, Strategy::Exact)->DenseRange(1, 8);
BENCHMARK_CAPTURE(BM_PartnerCheck, eq, Mode::Eq, Strategy::Exact)->DenseRange(1, 8);
BENCHMARK_CAPTURE(BM_PartnerCheck, eq_approx, Mode::Eq, Strategy::Approx)->DenseRange(1, 8);

// a = f(a), f^n(a) != a: refuted after merging the whole chain.
void BM_Congruence(benchmark::State& state) {
  SymbolTable s;
  SymbolId fn = s.intern("f", SymbolKind::Function, 1);
  Term a = Term::app(s.intern("a", SymbolKind::Constant, 0));
  Term t = a;
  for (int i = 0; i < state.range(0); ++i) t = Term::app(fn, {t});
  std::vector<std::pair<Term, Term>> eqs{{a, Term::app(fn, {a})}}, diseqs{{t, a}};
  for (auto _ : state) benchmark::DoNotOptimize(congruence_decide(eqs, diseqs, {}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Congruence)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}  // namespace
BENCHMARK_MAIN();
