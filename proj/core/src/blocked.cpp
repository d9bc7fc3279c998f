#include "fobce/blocked.hpp"

#include <algorithm>
#include <stdexcept>

#include "fobce/resolve.hpp"
#include "fobce/unify.hpp"

namespace fobce {

namespace {

void count(CheckStats* stats) {
  if (stats) ++stats->validity_tests;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

PartnerSet partner_set(const Clause& c, std::size_t l_pos, const Clause& d, Mode mode) {
  if (l_pos >= c.size()) throw std::invalid_argument("blocking literal position out of range");
  const Literal& l = c[l_pos];
  PartnerSet p{&d, {}};
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!l.opposes(d[i]) || l.arity() != d[i].arity()) continue;
    if (mode == Mode::NoEq) {
      Literal n = d[i];
      if (!mgu_atoms(l, std::span<const Literal>(&n, 1))) continue;
    }
    p.positions.push_back(i);
  }
  return p;
}

bool all_l_resolvents_valid(const Clause& c, std::size_t l_pos, const PartnerSet& p, CheckStats* stats) {
  const Clause& d = *p.partner;
  const Literal& l = c[l_pos];

  for (std::size_t seed : p.positions) {
    std::vector<std::size_t> n{seed};
    while (true) {
      std::vector<Literal> selected, rest;
      // Resolvent literals before σ, tagged with the partner position or
      // SIZE_MAX for literals of C'.
      std::vector<std::size_t> from;
      for (auto i : n) selected.push_back(d[i]);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != l_pos) {
          rest.push_back(c[i]);
          from.push_back(SIZE_MAX);
        }
      for (std::size_t i = 0; i < d.size(); ++i)
        if (!contains(n, i)) {
          rest.push_back(d[i]);
          from.push_back(i);
        }
      auto closure = UnifClosure::build(l, selected, rest);
      if (!closure) break;
      count(stats);

      bool any_pair = false, all_use_partner = true;
      std::vector<std::size_t> grow;
      for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          if (!rest[i].opposes(rest[j]) || !complementary_under(*closure, rest[i], rest[j])) continue;
          any_pair = true;
          bool used = false;
          for (auto k : {i, j})
            if (from[k] != SIZE_MAX && contains(p.positions, from[k])) {
              used = true;
              if (!contains(grow, from[k])) grow.push_back(from[k]);
            }
          all_use_partner = all_use_partner && used;
        }
      if (!any_pair) return false;
      if (!all_use_partner) break;
      n.insert(n.end(), grow.begin(), grow.end());
    }
  }
  return true;
}

bool all_flat_l_resolvents_valid(const Clause& c, std::size_t l_pos, const PartnerSet& p, CheckStats* stats) {
  const Clause& d = *p.partner;
  if (c[l_pos].is_equality()) throw std::invalid_argument("equality literal cannot equality-block");

  for (std::size_t seed : p.positions) {
    std::vector<std::size_t> n{seed};
    while (true) {
      auto r = flat_l_resolvent(c, l_pos, d, n);
      count(stats);
      if (!is_valid_eq(r.clause)) return false;

      // Drop the unselected partner literals and see whether validity
      // survives; otherwise find the ones that restore it individually.
      std::vector<Literal> base;
      std::vector<std::size_t> remaining;
      for (std::size_t i = 0; i < r.clause.size(); ++i) {
        auto [origin, pos] = r.origins[i];
        if (origin == Origin::D && contains(p.positions, pos))
          remaining.push_back(pos);
        else
          base.push_back(r.clause[i]);
      }
      if (remaining.empty() || is_valid_eq(base)) break;
      std::vector<std::size_t> grow;
      for (auto i : remaining) {
        base.push_back(d[i]);
        if (is_valid_eq(base)) grow.push_back(i);
        base.pop_back();
      }
      if (grow.empty())
        throw std::logic_error("valid flat resolvent needs several partner literals at once");
      n.insert(n.end(), grow.begin(), grow.end());
    }
  }
  return true;
}

namespace {

bool syntactic_valid(const std::vector<Literal>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j)
      if (lits[i].opposes(lits[j]) && lits[i].complement() == lits[j]) return true;
  return false;
}

}  // namespace

bool approx_partner_check(const Clause& c, std::size_t l_pos, const Clause& d, std::size_t n_pos, Mode mode,
                          CheckStats* stats) {
  const Literal& l = c[l_pos];
  const std::size_t sel[] = {n_pos};

  if (mode == Mode::NoEq) {
    auto r = l_resolvent(c, l_pos, d, sel);
    if (!r) return true;
    count(stats);
    Literal n = d[n_pos];
    auto sigma = mgu_atoms(l, std::span<const Literal>(&n, 1)).subst;
    Literal lbar = sigma.apply(l).complement();
    std::vector<Literal> kept;
    for (const auto& lit : r->literals) {
      std::pair<Literal, Literal> pr{lit, lbar};
      if (mgu(std::span<const std::pair<Literal, Literal>>(&pr, 1))) continue;
      kept.push_back(lit);
    }
    return syntactic_valid(kept);
  }

  if (l.is_equality()) throw std::invalid_argument("equality literal cannot equality-block");
  auto r = flat_l_resolvent(c, l_pos, d, sel);
  count(stats);
  FlatResolvent pruned;
  pruned.clause.id = r.clause.id;
  pruned.fresh_vars = r.fresh_vars;
  for (std::size_t i = 0; i < r.clause.size(); ++i) {
    const auto& lit = r.clause[i];
    if (!r.is_guard(i) && lit.predicate() == l.predicate() && lit.positive() != l.positive()) continue;
    pruned.clause.literals.push_back(lit);
    pruned.origins.push_back(r.origins[i]);
  }
  return is_valid_eq_approx(pruned);
}

bool partner_check(const Clause& c, std::size_t l_pos, const Clause& d, Mode mode, Strategy strategy,
                   CheckStats* stats) {
  auto p = partner_set(c, l_pos, d, mode);
  if (strategy == Strategy::Approx) {
    for (auto n : p.positions)
      if (!approx_partner_check(c, l_pos, d, n, mode, stats)) return false;
    return true;
  }
  return mode == Mode::NoEq ? all_l_resolvents_valid(c, l_pos, p, stats)
                            : all_flat_l_resolvents_valid(c, l_pos, p, stats);
}

bool is_blocked(const Formula& f, ClauseId id, std::size_t l_pos, Mode mode, Strategy strategy, CheckStats* stats) {
  const Clause* c = f.find(id);
  if (!c) throw std::invalid_argument("clause " + std::to_string(id) + " is not in the formula");
  if (l_pos >= c->size()) throw std::invalid_argument("blocking literal position out of range");
  if (mode == Mode::Eq && (*c)[l_pos].is_equality()) return false;
  for (const auto& [did, d] : f.clauses()) {
    if (did == id) continue;
    if (!partner_check(*c, l_pos, d, mode, strategy, stats)) return false;
  }
  return true;
}

}  // namespace fobce
