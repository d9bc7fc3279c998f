#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the term types, so agreement with them is evidence.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fobce/blocked.hpp"
#include "fobce/formula.hpp"
#include "fobce/oracle.hpp"

namespace fobce::testing {

/// Idempotent substitution, applied eagerly.
using NaiveSubst = std::map<VarId, Term>;

Term naive_apply(const NaiveSubst& s, const Term& t);
Literal naive_apply(const NaiveSubst& s, const Literal& l);

/// Robinson unification on explicit terms.
std::optional<NaiveSubst> naive_unify(std::vector<std::pair<Term, Term>> eqs);
/// Unifies the arguments of base with those of each other literal; the
/// predicates must agree, polarity is ignored.
std::optional<NaiveSubst> naive_unify_literals(const Literal& base, const std::vector<Literal>& others);

bool naive_syntactic_valid(const std::vector<Literal>& lits);

/// Unsatisfiability of ground (dis)equations and signed atoms, by repeating
/// the congruence rule over all pairs of subterms until nothing changes.
bool naive_congruence_unsat(const std::vector<std::pair<Term, Term>>& eqs,
                            const std::vector<std::pair<Term, Term>>& diseqs, const std::vector<Literal>& atoms);

/// Validity modulo equality: the skolemized negation is congruence-unsat.
bool naive_valid_eq(const std::vector<Literal>& lits);

/// Positions of d opposing the literal at l_pos of c.
std::vector<std::size_t> opposing_positions(const Clause& c, std::size_t l_pos, const Clause& d);

std::optional<std::vector<Literal>> brute_l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                                                      const std::vector<std::size_t>& selected);
std::vector<Literal> brute_flat_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                                          const std::vector<std::size_t>& selected);

/// Every (flat) L-resolvent over all nonempty subsets of opposing literals
/// is valid.
bool brute_all_resolvents_valid(const Clause& c, std::size_t l_pos, const Clause& d, Mode mode);

bool brute_blocked(const Formula& f, ClauseId c, std::size_t l_pos, Mode mode);

/// Removes the lowest-id blocked clause until none is left; returns the
/// surviving ids.
std::set<ClauseId> brute_blocked_fixpoint(Formula f, Mode mode);
std::set<ClauseId> brute_pure_fixpoint(Formula f);

/// Tries all assignments; nullopt above 20 atoms.
std::optional<bool> truth_table_sat(const oracle::GroundFormula& g);

std::set<ClauseId> clause_ids(const Formula& f);

}  // namespace fobce::testing
