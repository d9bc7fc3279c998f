#include "lemmas.hpp"

#include <map>

#include "fobce/blocked.hpp"
#include "fobce/oracle.hpp"

namespace fobce::testing {

namespace {

using oracle::GroundAssignment;
using oracle::GroundFormula;

std::vector<Term> two_constants(Formula& f) {
  auto& s = f.symbols();
  return {Term::app(s.intern("a", SymbolKind::Constant, 0)), Term::app(s.intern("b", SymbolKind::Constant, 0))};
}

// Truth values respecting a random partition of the universe: equations
// hold within a block, and atoms with blockwise equal arguments agree.
GroundAssignment congruent_assignment(Rng& rng, const std::vector<Literal>& atoms, const std::vector<Term>& universe) {
  std::map<Term, int> block;
  for (const auto& t : universe) block[t] = int(rng() % 2);
  std::map<std::pair<SymbolId, std::vector<int>>, bool> value;
  GroundAssignment a;
  for (const auto& atom : atoms) {
    std::vector<int> key;
    for (const auto& t : atom.args()) key.push_back(block.at(t));
    if (atom.is_equality()) {
      a.set(atom, key[0] == key[1]);
      continue;
    }
    auto [it, fresh] = value.emplace(std::make_pair(atom.predicate(), key), false);
    if (fresh) it->second = rng() % 2;
    a.set(atom, it->second);
  }
  return a;
}

}  // namespace

LemmaStats run_flip_lemma(Rng& rng, int instances, bool equality) {
  LemmaStats stats;
  Mode mode = equality ? Mode::Eq : Mode::NoEq;
  for (int attempt = 0; stats.instances < instances && attempt < instances * 200; ++attempt) {
    Formula f = random_small_formula(rng, equality);
    if (f.contains_equality() != equality) continue;
    std::vector<std::pair<ClauseId, std::size_t>> blocked;
    for (const auto& [id, c] : f.clauses())
      for (std::size_t i = 0; i < c.size(); ++i)
        if (is_blocked(f, id, i, mode)) blocked.emplace_back(id, i);
    if (blocked.empty()) continue;
    auto [cid, pos] = blocked[rng() % blocked.size()];

    auto universe = two_constants(f);
    Formula rest = f;
    rest.erase(cid);
    GroundFormula g_rest = oracle::ground_instances(rest, universe);
    GroundFormula g_c = oracle::ground_instances(f.at(cid), universe);
    GroundFormula all = g_rest;
    all.append(g_c);
    if (equality) {
      auto sig = f.signature();
      auto axioms = oracle::equality_axiom_instances(f.symbols(), sig, universe);
      g_rest.append(axioms);
      all.append(axioms);
    }
    auto atoms = all.atoms();

    GroundAssignment alpha;
    if (equality) {
      alpha = congruent_assignment(rng, atoms, universe);
    } else {
      for (const auto& atom : atoms) alpha.set(atom, rng() % 2);
    }
    std::vector<const Clause*> falsified;
    for (const auto& inst : g_c.clauses)
      if (!alpha.satisfies(inst)) falsified.push_back(&inst);
    if (falsified.empty()) continue;
    const Clause& inst = *falsified[rng() % falsified.size()];
    const Literal& l = inst[pos];

    auto flipped = equality ? oracle::equivalence_flip(alpha, l) : oracle::flip(alpha, l);
    ++stats.instances;
    bool ok = flipped.satisfies(inst);
    for (const auto& d : g_rest.clauses)
      if (alpha.satisfies(d) && !flipped.satisfies(d)) ok = false;
    if (!ok && stats.failures++ == 0)
      stats.first_failure = "clause " + std::to_string(cid) + " literal " + std::to_string(pos);
  }
  return stats;
}

}  // namespace fobce::testing
