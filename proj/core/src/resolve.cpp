#include "fobce/resolve.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fobce/congruence.hpp"

namespace fobce {

namespace {

VarCounter counter_above(const Clause& c) {
  VarCounter v;
  v.reserve_above(c);
  return v;
}

void check_position(const Clause& c, std::size_t pos, const char* what) {
  if (pos >= c.size()) throw std::invalid_argument(std::string(what) + " position out of range");
}

void check_selection(const Clause& c, std::size_t l_pos, const Clause& d, std::span<const std::size_t> n) {
  check_position(c, l_pos, "blocking literal");
  if (n.empty()) throw std::invalid_argument("empty partner literal selection");
  const Literal& l = c[l_pos];
  std::vector<std::size_t> seen;
  for (auto p : n) {
    check_position(d, p, "partner literal");
    if (std::find(seen.begin(), seen.end(), p) != seen.end())
      throw std::invalid_argument("partner literal selected twice");
    seen.push_back(p);
    if (!l.opposes(d[p]) || l.arity() != d[p].arity())
      throw std::invalid_argument("selected partner literal does not oppose the blocking literal");
  }
}

bool is_selected(std::span<const std::size_t> n, std::size_t i) {
  return std::find(n.begin(), n.end(), i) != n.end();
}

}  // namespace

FlatClause flatten(const Clause& c, std::size_t pos, VarCounter& vars) {
  check_position(c, pos, "flattened literal");
  const Literal& l = c[pos];
  if (l.is_equality()) throw std::invalid_argument("cannot flatten an equality literal");
  vars.reserve_above(c);

  FlatClause out;
  out.original = c;
  out.flattened_positions.push_back(pos);
  std::vector<Term> fresh_args;
  for (const auto& t : l.args()) {
    VarId x = vars.fresh();
    out.fresh_vars.push_back(x);
    fresh_args.push_back(Term::var(x));
    out.disequation_guards.push_back(Literal::equality(false, Term::var(x), t));
  }
  out.clause.id = c.id;
  out.clause.literals = out.disequation_guards;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == pos)
      out.clause.literals.emplace_back(l.positive(), l.predicate(), fresh_args);
    else
      out.clause.literals.push_back(c[i]);
  }
  return out;
}

FlatClause flatten(const Clause& c, std::size_t pos) {
  auto vars = counter_above(c);
  return flatten(c, pos, vars);
}

std::optional<Clause> l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                                  std::span<const std::size_t> n_positions) {
  check_selection(c, l_pos, d, n_positions);
  auto cv = variables(c);
  for (VarId v : variables(d))
    if (std::find(cv.begin(), cv.end(), v) != cv.end())
      throw std::invalid_argument("resolved clauses share variables");

  std::vector<Literal> selected;
  for (auto p : n_positions) selected.push_back(d[p]);
  auto u = mgu_atoms(c[l_pos], selected);
  if (!u) return std::nullopt;

  Clause out{c.id, {}};
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != l_pos) out.literals.push_back(u.subst.apply(c[i]));
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!is_selected(n_positions, i)) out.literals.push_back(u.subst.apply(d[i]));
  return out;
}

FlatResolvent flat_l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                               std::span<const std::size_t> n_positions, VarCounter& vars) {
  check_selection(c, l_pos, d, n_positions);
  const Literal& l = c[l_pos];
  if (l.is_equality()) throw std::invalid_argument("equality literal cannot be resolved on in flat resolution");
  vars.reserve_above(c);
  vars.reserve_above(d);

  FlatResolvent r;
  r.clause.id = c.id;
  std::vector<Term> xs;
  for (std::size_t j = 0; j < l.arity(); ++j) {
    VarId x = vars.fresh();
    r.fresh_vars.push_back(x);
    xs.push_back(Term::var(x));
  }
  auto push = [&r](Literal lit, Origin o, std::size_t pos) {
    r.clause.literals.push_back(std::move(lit));
    r.origins.emplace_back(o, pos);
  };
  for (std::size_t j = 0; j < l.arity(); ++j) push(Literal::equality(false, xs[j], l.args()[j]), Origin::GuardC, j);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != l_pos) push(c[i], Origin::C, i);
  // Flattening N_i gives guards y_ij != t_ij; the trivial mgu maps y_ij to x_j.
  for (auto p : n_positions)
    for (std::size_t j = 0; j < l.arity(); ++j) push(Literal::equality(false, xs[j], d[p].args()[j]), Origin::GuardD, j);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!is_selected(n_positions, i)) push(d[i], Origin::D, i);
  return r;
}

FlatResolvent flat_l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                               std::span<const std::size_t> n_positions) {
  auto vars = counter_above(c);
  vars.reserve_above(d);
  return flat_l_resolvent(c, l_pos, d, n_positions, vars);
}

bool is_valid_noeq(std::span<const Literal> lits, const UnifClosure* closure) {
  for (const auto& l : lits)
    if (l.is_equality()) throw std::invalid_argument("equality literal in a validity check without equality");
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (!lits[i].opposes(lits[j])) continue;
      if (closure ? complementary_under(*closure, lits[i], lits[j]) : lits[i].complement() == lits[j]) return true;
    }
  return false;
}

bool is_valid_noeq(const Clause& c, const UnifClosure* closure) { return is_valid_noeq(c.literals, closure); }

namespace {

Term skolemize(const Term& t, std::unordered_map<VarId, Term>& sk) {
  if (t.ground()) return t;
  if (t.is_var()) {
    auto it = sk.find(t.var_id());
    if (it == sk.end())
      it = sk.emplace(t.var_id(), Term::app(SymbolTable::skolem(static_cast<std::uint32_t>(sk.size())))).first;
    return it->second;
  }
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(skolemize(a, sk));
  return Term::app(t.functor(), std::move(args));
}

}  // namespace

bool is_valid_eq(std::span<const Literal> lits) {
  std::unordered_map<VarId, Term> sk;
  std::vector<std::pair<Term, Term>> eqs, diseqs;
  std::vector<Literal> atoms;
  for (const auto& l : lits) {
    std::vector<Term> args;
    for (const auto& a : l.args()) args.push_back(skolemize(a, sk));
    if (l.is_equality()) {
      // The negation of a positive equation is a disequation and vice versa.
      (l.positive() ? diseqs : eqs).emplace_back(args[0], args[1]);
    } else {
      atoms.emplace_back(!l.positive(), l.predicate(), std::move(args));
    }
  }
  return congruence_decide(eqs, diseqs, atoms) == Satisfiability::Unsatisfiable;
}

bool is_valid_eq(const Clause& c) { return is_valid_eq(c.literals); }

namespace {

// Guard classes: each fresh variable is equal to the terms it guards.
class GuardRewriter {
 public:
  explicit GuardRewriter(const FlatResolvent& r) {
    std::unordered_set<VarId> fresh(r.fresh_vars.begin(), r.fresh_vars.end());
    // Guards are listed C-side first, so the first non-fresh term registered
    // in a class is the C-side argument when there is one.
    for (std::size_t i = 0; i < r.clause.size(); ++i) {
      if (!r.is_guard(i)) continue;
      const auto& g = r.clause[i];
      auto a = id(g.args()[0], fresh), b = id(g.args()[1], fresh);
      unite(a, b);
    }
  }

  Term normalize(const Term& t) const {
    if (auto it = ids_.find(t); it != ids_.end()) {
      auto root = find(it->second);
      if (auto rep = rep_.find(root); rep != rep_.end()) return terms_[rep->second];
      return t;
    }
    if (t.is_var() || t.arity() == 0) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(normalize(a));
    return Term::app(t.functor(), std::move(args));
  }

 private:
  std::size_t id(const Term& t, const std::unordered_set<VarId>& fresh) {
    auto [it, inserted] = ids_.emplace(t, terms_.size());
    if (inserted) {
      terms_.push_back(t);
      parent_.push_back(it->second);
      if (!(t.is_var() && fresh.count(t.var_id()))) rep_.emplace(it->second, it->second);
    }
    return it->second;
  }

  std::size_t find(std::size_t n) const {
    while (parent_[n] != n) n = parent_[n];
    return n;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // The root registered first keeps the class; representatives prefer
    // the earliest registered non-fresh term.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    auto ra = rep_.find(a), rb = rep_.find(b);
    if (rb != rep_.end()) {
      if (ra == rep_.end() || rb->second < ra->second) rep_[a] = rb->second;
      rep_.erase(b);
    }
  }

  std::unordered_map<Term, std::size_t, TermHash> ids_;
  std::vector<Term> terms_;
  std::vector<std::size_t> parent_;
  std::unordered_map<std::size_t, std::size_t> rep_;  // root -> term index
};

}  // namespace

bool is_valid_eq_approx(const FlatResolvent& r) {
  GuardRewriter rw(r);
  std::vector<Literal> normalized;
  for (std::size_t i = 0; i < r.clause.size(); ++i) {
    if (r.is_guard(i)) continue;
    const auto& l = r.clause[i];
    std::vector<Term> args;
    for (const auto& a : l.args()) args.push_back(rw.normalize(a));
    normalized.emplace_back(l.positive(), l.predicate(), std::move(args));
  }
  for (const auto& l : normalized)
    if (l.is_equality() && l.positive() && l.args()[0] == l.args()[1]) return true;
  for (std::size_t i = 0; i < normalized.size(); ++i)
    for (std::size_t j = i + 1; j < normalized.size(); ++j)
      if (normalized[i].opposes(normalized[j]) && normalized[i].complement() == normalized[j]) return true;
  return false;
}

}  // namespace fobce
