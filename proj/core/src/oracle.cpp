#include "fobce/oracle.hpp"

#include <algorithm>
#include <functional>

#include "fobce/substitution.hpp"

namespace fobce::oracle {

std::vector<Literal> GroundFormula::atoms() const {
  std::vector<Literal> out;
  for (const auto& c : clauses)
    for (const auto& l : c.literals) out.push_back(l.atom());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void GroundFormula::append(const GroundFormula& other) {
  clauses.insert(clauses.end(), other.clauses.begin(), other.clauses.end());
}

GroundAssignment::GroundAssignment(const std::vector<Literal>& atoms, bool value) {
  for (const auto& a : atoms) values_[a.atom()] = value;
}

void GroundAssignment::set(const Literal& atom, bool value) { values_[atom.atom()] = value; }

bool GroundAssignment::contains(const Literal& atom) const { return values_.count(atom.atom()) != 0; }

bool GroundAssignment::value(const Literal& atom) const {
  auto it = values_.find(atom.atom());
  if (it == values_.end()) throw std::invalid_argument("atom outside the assignment's universe");
  return it->second;
}

bool GroundAssignment::value_or(const Literal& atom, bool fallback) const {
  auto it = values_.find(atom.atom());
  return it == values_.end() ? fallback : it->second;
}

bool GroundAssignment::satisfies(const Clause& c) const {
  return std::any_of(c.literals.begin(), c.literals.end(), [this](const Literal& l) { return satisfies(l); });
}

bool GroundAssignment::satisfies(const GroundFormula& g) const {
  return std::all_of(g.clauses.begin(), g.clauses.end(), [this](const Clause& c) { return satisfies(c); });
}

void GroundAssignment::extend(const std::vector<Literal>& atoms, bool value) {
  for (const auto& a : atoms) values_.emplace(a.atom(), value);
}

std::vector<Term> herbrand_universe(const SymbolTable& symbols, const std::set<SymbolId>& signature,
                                    std::span<const Term> extra_constants, const Limits& limits) {
  std::vector<Term> level;
  std::vector<SymbolId> functions;
  for (auto s : signature) {
    if (SymbolTable::is_reserved(s)) continue;
    auto kind = symbols.kind(s);
    if (kind == SymbolKind::Constant) level.push_back(Term::app(s));
    if (kind == SymbolKind::Function) functions.push_back(s);
  }
  for (const auto& c : extra_constants) {
    if (!c.ground()) throw std::invalid_argument("universe seeds must be ground");
    if (std::find(level.begin(), level.end(), c) == level.end()) level.push_back(c);
  }
  if (level.empty()) level.push_back(Term::app(SymbolTable::kSeedConstant));

  std::vector<Term> universe = level;
  for (unsigned d = 0; d < limits.depth && !functions.empty(); ++d) {
    std::vector<Term> next;
    std::vector<Term> known = universe;
    for (auto f : functions) {
      unsigned n = symbols.arity(f);
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(known[i]);
        Term t = Term::app(f, std::move(args));
        if (std::find(universe.begin(), universe.end(), t) == universe.end() &&
            std::find(next.begin(), next.end(), t) == next.end()) {
          next.push_back(std::move(t));
          if (universe.size() + next.size() > limits.cap) throw CapacityError("Herbrand universe exceeds the cap");
        }
        std::size_t k = 0;
        for (; k < n; ++k) {
          if (++idx[k] < known.size()) break;
          idx[k] = 0;
        }
        if (k == n) break;
      }
    }
    if (next.empty()) break;
    universe.insert(universe.end(), next.begin(), next.end());
  }
  return universe;
}

GroundFormula ground_instances(const Clause& c, std::span<const Term> universe, std::size_t cap) {
  GroundFormula out;
  auto vars = variables(c);
  if (vars.empty()) {
    out.clauses.push_back(c);
    return out;
  }
  if (universe.empty()) throw std::invalid_argument("empty universe");
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    if (out.clauses.size() >= cap) throw CapacityError("ground instances exceed the cap");
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], universe[idx[i]]);
    out.clauses.push_back(s.apply(c));
    // The last variable varies fastest.
    std::size_t k = vars.size();
    while (k-- > 0) {
      if (++idx[k] < universe.size()) break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

GroundFormula ground_instances(const Formula& f, std::span<const Term> universe, std::size_t cap) {
  GroundFormula out;
  for (const auto& [id, c] : f.clauses()) {
    std::size_t room = cap - std::min(cap, out.clauses.size());
    out.append(ground_instances(c, universe, room));
  }
  return out;
}

GroundFormula ground_instances(const Formula& f, const Limits& limits, std::span<const Term> constants) {
  auto universe = herbrand_universe(f.symbols(), f.signature(), constants, limits);
  return ground_instances(f, universe, limits.cap);
}

GroundFormula equality_axiom_instances(const SymbolTable& symbols, const std::set<SymbolId>& signature,
                                       std::span<const Term> universe, std::size_t cap) {
  if (universe.empty()) throw std::invalid_argument("empty universe");
  GroundFormula out;
  auto push = [&](std::vector<Literal> lits) {
    if (out.clauses.size() >= cap) throw CapacityError("equality axiom instances exceed the cap");
    out.clauses.push_back(Clause{0, std::move(lits)});
  };
  for (const auto& t : universe) push({Literal::equality(true, t, t)});

  // All pairs of argument tuples (x, y) over the universe.
  auto for_tuples = [&](unsigned n, const std::function<void(const std::vector<Term>&, const std::vector<Term>&)>& fn) {
    std::vector<std::size_t> idx(2 * n, 0);
    while (true) {
      std::vector<Term> xs, ys;
      for (unsigned i = 0; i < n; ++i) {
        xs.push_back(universe[idx[i]]);
        ys.push_back(universe[idx[n + i]]);
      }
      fn(xs, ys);
      std::size_t k = 2 * n;
      while (k-- > 0) {
        if (++idx[k] < universe.size()) break;
        idx[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  };

  for (auto s : signature) {
    if (SymbolTable::is_reserved(s)) continue;
    auto kind = symbols.kind(s);
    unsigned n = symbols.arity(s);
    if (n == 0) continue;
    if (kind == SymbolKind::Function) {
      for_tuples(n, [&](const std::vector<Term>& xs, const std::vector<Term>& ys) {
        std::vector<Literal> lits;
        for (unsigned i = 0; i < n; ++i) lits.push_back(Literal::equality(false, xs[i], ys[i]));
        lits.push_back(Literal::equality(true, Term::app(s, xs), Term::app(s, ys)));
        push(std::move(lits));
      });
    } else if (kind == SymbolKind::Predicate) {
      for_tuples(n, [&](const std::vector<Term>& xs, const std::vector<Term>& ys) {
        std::vector<Literal> lits;
        for (unsigned i = 0; i < n; ++i) lits.push_back(Literal::equality(false, xs[i], ys[i]));
        lits.emplace_back(false, s, xs);
        lits.emplace_back(true, s, ys);
        push(std::move(lits));
      });
    }
  }
  return out;
}

namespace {

class Dpll {
 public:
  explicit Dpll(const GroundFormula& g) : atoms_(g.atoms()) {
    for (const auto& c : g.clauses) {
      std::vector<int> lits;
      for (const auto& l : c.literals) {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), l.atom());
        int v = static_cast<int>(it - atoms_.begin()) + 1;
        lits.push_back(l.positive() ? v : -v);
      }
      clauses_.push_back(std::move(lits));
    }
  }

  std::optional<GroundAssignment> solve() {
    std::vector<signed char> assign(atoms_.size() + 1, -1);
    if (!search(assign)) return std::nullopt;
    GroundAssignment a;
    for (std::size_t i = 0; i < atoms_.size(); ++i) a.set(atoms_[i], assign[i + 1] == 1);
    return a;
  }

 private:
  static int value(const std::vector<signed char>& assign, int lit) {
    int v = assign[std::abs(lit)];
    if (v < 0) return -1;
    return (lit > 0) == (v == 1) ? 1 : 0;
  }

  // False on conflict.
  bool propagate(std::vector<signed char>& assign) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int open = 0, last = 0;
        bool sat = false;
        for (int l : c) {
          int v = value(assign, l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v < 0) {
            ++open;
            last = l;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) {
          assign[std::abs(last)] = last > 0 ? 1 : 0;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::vector<signed char>& assign) const {
    if (!propagate(assign)) return false;
    std::size_t var = 0;
    for (std::size_t i = 1; i < assign.size(); ++i)
      if (assign[i] < 0) {
        var = i;
        break;
      }
    if (var == 0) return true;
    for (signed char choice : {0, 1}) {
      auto copy = assign;
      copy[var] = choice;
      if (search(copy)) {
        assign = std::move(copy);
        return true;
      }
    }
    return false;
  }

  std::vector<Literal> atoms_;
  std::vector<std::vector<int>> clauses_;
};

}  // namespace

std::optional<GroundAssignment> prop_sat(const GroundFormula& g) { return Dpll(g).solve(); }

GroundAssignment flip(const GroundAssignment& a, const Literal& lit) {
  if (!lit.ground()) throw std::invalid_argument("flipping needs a ground literal");
  GroundAssignment out = a;
  out.set(lit.atom(), !a.value(lit.atom()));
  return out;
}

GroundAssignment equivalence_flip(const GroundAssignment& a, const Literal& lit) {
  if (lit.is_equality()) throw std::invalid_argument("equivalence flipping of an equality literal");
  if (!lit.ground()) throw std::invalid_argument("flipping needs a ground literal");
  if (!a.contains(lit)) throw std::invalid_argument("atom outside the assignment's universe");
  GroundAssignment out = a;
  for (const auto& [atom, v] : a.values()) {
    if (atom.predicate() != lit.predicate() || atom.arity() != lit.arity()) continue;
    bool equal = true;
    for (std::size_t i = 0; equal && i < lit.arity(); ++i) {
      const Term& t = lit.args()[i];
      const Term& s = atom.args()[i];
      equal = t == s || a.value_or(Literal::equality(true, t, s), false);
    }
    if (equal) out.set(atom, !v);
  }
  return out;
}

RepairResult repair_by_flipping(const GroundAssignment& a, const std::vector<BlockedInstance>& instances,
                                FlipMode mode, const GroundFormula* side) {
  RepairResult r;
  r.assignment = a;
  if (side && !a.satisfies(*side)) {
    r.error = "starting assignment does not satisfy the remaining ground clauses";
    return r;
  }
  for (const auto& bi : instances)
    if (std::find(bi.instance.literals.begin(), bi.instance.literals.end(), bi.blocking) ==
        bi.instance.literals.end()) {
      r.error = "blocking literal is not part of its instance";
      return r;
    }
  // Each flip makes one blocking literal instance true for good, so there
  // are at most as many rounds as instances.
  for (std::size_t round = 0; round <= instances.size(); ++round) {
    const BlockedInstance* open = nullptr;
    for (const auto& bi : instances)
      if (!r.assignment.satisfies(bi.instance)) {
        open = &bi;
        break;
      }
    if (!open) {
      if (side && !r.assignment.satisfies(*side)) {
        r.error = "flipping falsified a remaining ground clause";
        return r;
      }
      r.ok = true;
      return r;
    }
    r.assignment = mode == FlipMode::Flip ? flip(r.assignment, open->blocking)
                                          : equivalence_flip(r.assignment, open->blocking);
    r.flipped.push_back(open->blocking);
  }
  r.error = "flipping did not converge";
  return r;
}

RedundancyCheck check_redundancy(const Formula& f, const Clause& c, const Limits& limits,
                                 std::span<const Term> constants) {
  RedundancyCheck r;
  r.depth = limits.depth;
  Formula without = f;
  without.erase(c.id);
  Formula with = without;
  with.insert(c);

  bool eq = with.contains_equality();
  r.equality_axioms = eq;
  try {
    auto signature = with.signature();
    auto universe = herbrand_universe(f.symbols(), signature, constants, limits);
    r.universe_size = universe.size();
    GroundFormula g_without = ground_instances(without, universe, limits.cap);
    GroundFormula g_c = ground_instances(c, universe, limits.cap);
    if (eq) {
      // Both groundings get the axioms for every symbol of F ∪ {C}.
      auto axioms = equality_axiom_instances(f.symbols(), signature, universe, limits.cap);
      g_without.append(axioms);
    }
    if (g_without.clauses.size() + g_c.clauses.size() > limits.cap)
      throw CapacityError("ground formula exceeds the cap");
    GroundFormula g_with = g_without;
    g_with.append(g_c);
    r.instances = g_with.clauses.size();
    r.without_sat = prop_sat(g_without).has_value();
    r.with_sat = r.without_sat && prop_sat(g_with).has_value();
    r.verdict = (r.without_sat && !r.with_sat) ? Verdict::Refuted : Verdict::Consistent;
  } catch (const CapacityError& e) {
    r.verdict = Verdict::Inconclusive;
    r.note = e.what();
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace fobce::oracle
