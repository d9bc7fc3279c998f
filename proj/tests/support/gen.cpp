#include "gen.hpp"

#include <algorithm>

#include "brute.hpp"

namespace fobce::testing {

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Vocabulary {
  std::vector<std::pair<SymbolId, unsigned>> predicates;
  std::vector<SymbolId> constants;
  std::vector<SymbolId> functions;
};

Term random_term(Rng& rng, const Vocabulary& voc, const std::vector<VarId>& vars, unsigned depth) {
  if (depth > 0 && !voc.functions.empty() && chance(rng, 0.3))
    return Term::app(pick(rng, voc.functions), {random_term(rng, voc, vars, depth - 1)});
  if (!vars.empty() && (voc.constants.empty() || chance(rng, 0.55))) return Term::var(pick(rng, vars));
  return Term::app(pick(rng, voc.constants));
}

Literal random_atom_literal(Rng& rng, const Vocabulary& voc, const std::vector<VarId>& vars, unsigned depth,
                            SymbolId pred, unsigned arity, bool positive) {
  std::vector<Term> args;
  for (unsigned i = 0; i < arity; ++i) args.push_back(random_term(rng, voc, vars, depth));
  return Literal(positive, pred, std::move(args));
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaParams& p) {
  Formula f;
  auto& sym = f.symbols();
  static const std::vector<std::string> pred_names{"p", "q", "r", "s"};
  Vocabulary voc;
  for (unsigned i = 0; i < p.predicates; ++i) {
    unsigned arity = uniform(rng, 0, p.max_arity);
    std::string name = i < pred_names.size() ? pred_names[i] : "p" + std::to_string(i);
    voc.predicates.emplace_back(sym.intern(name, SymbolKind::Predicate, arity), arity);
  }
  for (const auto& c : p.constants) voc.constants.push_back(sym.intern(c, SymbolKind::Constant, 0));
  for (const auto& fn : p.functions) voc.functions.push_back(sym.intern(fn, SymbolKind::Function, 1));

  std::vector<VarId> vars;
  for (unsigned i = 0; i < p.vars_per_clause; ++i) vars.push_back(i);

  unsigned n = uniform(rng, p.min_clauses, p.max_clauses);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Literal> lits;
    unsigned k = uniform(rng, 1, p.max_literals);
    for (unsigned j = 0; j < k; ++j) {
      bool positive = chance(rng, 0.5);
      if ((p.equality && chance(rng, p.equality_rate)) || voc.predicates.empty()) {
        lits.push_back(Literal::equality(positive, random_term(rng, voc, vars, p.max_depth),
                                         random_term(rng, voc, vars, p.max_depth)));
      } else {
        auto [pred, arity] = pick(rng, voc.predicates);
        lits.push_back(random_atom_literal(rng, voc, vars, p.max_depth, pred, arity, positive));
      }
    }
    f.add(std::move(lits));
  }
  return f;
}

Formula random_small_formula(Rng& rng, bool with_equality) {
  FormulaParams p;
  p.equality = with_equality;
  return random_formula(rng, p);
}

PairInstance random_pair(Rng& rng, Mode mode, unsigned max_partners) {
  while (true) {
    Formula f;
    auto& sym = f.symbols();
    unsigned arity = uniform(rng, 1, 2);
    SymbolId P = sym.intern("p", SymbolKind::Predicate, arity);
    SymbolId Q = sym.intern("q", SymbolKind::Predicate, 1);
    SymbolId R = sym.intern("r", SymbolKind::Predicate, 0);
    Vocabulary voc;
    voc.predicates = {{P, arity}, {P, arity}, {Q, 1}, {R, 0}};
    voc.constants = {sym.intern("a", SymbolKind::Constant, 0), sym.intern("b", SymbolKind::Constant, 0)};
    voc.functions = {sym.intern("f", SymbolKind::Function, 1)};
    std::vector<VarId> cvars{0, 1}, dvars{10, 11, 12};
    unsigned depth = chance(rng, 0.3) ? 1 : 0;

    auto extra = [&](const std::vector<VarId>& vars) {
      if (mode == Mode::Eq && chance(rng, 0.3))
        return Literal::equality(chance(rng, 0.5), random_term(rng, voc, vars, depth),
                                 random_term(rng, voc, vars, depth));
      auto [pred, ar] = pick(rng, voc.predicates);
      return random_atom_literal(rng, voc, vars, depth, pred, ar, chance(rng, 0.5));
    };

    bool l_positive = chance(rng, 0.5);
    std::vector<Literal> c{random_atom_literal(rng, voc, cvars, depth, P, arity, l_positive)};
    for (unsigned i = uniform(rng, 0, 2); i > 0; --i) c.push_back(extra(cvars));
    std::shuffle(c.begin(), c.end(), rng);
    std::size_t l_pos = 0;
    while (!(c[l_pos].predicate() == P && c[l_pos].positive() == l_positive)) ++l_pos;

    std::vector<Literal> d;
    unsigned partners = uniform(rng, 1, max_partners);
    for (unsigned i = 0; i < partners; ++i) d.push_back(random_atom_literal(rng, voc, dvars, depth, P, arity, !l_positive));
    for (unsigned i = uniform(rng, 0, 2); i > 0; --i) {
      Literal l = extra(dvars);
      if (l.predicate() == P && l.positive() != l_positive) continue;
      d.push_back(l);
    }
    std::shuffle(d.begin(), d.end(), rng);

    f.add(std::move(c));
    f.add(std::move(d));
    if (mode == Mode::NoEq) {
      const Clause& cc = f.at(0);
      const Clause& dd = f.at(1);
      std::size_t unifying = 0;
      for (const auto& n : dd.literals)
        if (n.opposes(cc[l_pos]) && naive_unify_literals(cc[l_pos], {n.complement()})) ++unifying;
      if (unifying == 0) continue;
    }
    return {std::move(f), l_pos};
  }
}

oracle::GroundFormula random_ground_formula(Rng& rng, SymbolTable& symbols, unsigned atoms, unsigned clauses,
                                            unsigned max_literals) {
  std::vector<SymbolId> ids;
  for (unsigned i = 0; i < atoms; ++i) ids.push_back(symbols.intern("p" + std::to_string(i), SymbolKind::Predicate, 0));
  oracle::GroundFormula g;
  for (unsigned i = 0; i < clauses; ++i) {
    Clause c;
    c.id = i;
    for (unsigned j = uniform(rng, 1, max_literals); j > 0; --j) c.literals.emplace_back(chance(rng, 0.5), pick(rng, ids), std::vector<Term>{});
    g.clauses.push_back(std::move(c));
  }
  return g;
}

}  // namespace fobce::testing
