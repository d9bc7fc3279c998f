#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fobce/formula.hpp"
#include "fobce/term.hpp"

namespace fobce {

/// NoEq: plain blocking, equality treated as an ordinary predicate.
/// Eq: equality-blocking through flat resolvents.
enum class Mode { NoEq, Eq };

/// Exact: every L-resolvent is accounted for. Approx: binary resolvents only,
/// with the literals that could have been resolved away dropped first.
enum class Strategy { Exact, Approx };

struct PartnerSet {
  const Clause* partner = nullptr;
  /// NoEq: literals whose complement unifies with L on its own.
  /// Eq: literals with L's predicate and the opposite polarity.
  std::vector<std::size_t> positions;
};

PartnerSet partner_set(const Clause& c, std::size_t l_pos, const Clause& d, Mode mode);

struct CheckStats {
  std::uint64_t validity_tests = 0;
};

/// Decides whether every L-resolvent of c with the partner is valid with
/// quadratically many validity tests. Seeds each literal of the partner set
/// in turn and grows the selection only by literals that take part in every
/// complementary pair found. The clauses must be variable disjoint.
bool all_l_resolvents_valid(const Clause& c, std::size_t l_pos, const PartnerSet& p, CheckStats* stats = nullptr);

/// The same loop over flat L-resolvents with validity modulo equality.
/// Throws std::invalid_argument if L is an equality literal.
bool all_flat_l_resolvents_valid(const Clause& c, std::size_t l_pos, const PartnerSet& p,
                                 CheckStats* stats = nullptr);

/// Checks one binary (flat) resolvent, after removing the literals that
/// could have been resolved away as well: those unifiable with the
/// complement of Lσ (NoEq) or sharing predicate and polarity with the
/// complement of L (Eq). True also when the literals do not unify.
bool approx_partner_check(const Clause& c, std::size_t l_pos, const Clause& d, std::size_t n_pos, Mode mode,
                          CheckStats* stats = nullptr);

/// Per-partner check for the given mode and strategy.
bool partner_check(const Clause& c, std::size_t l_pos, const Clause& d, Mode mode, Strategy strategy,
                   CheckStats* stats = nullptr);

/// True iff the literal at l_pos blocks the clause with respect to every
/// other clause of f. In Eq mode an equality literal never blocks. Throws
/// std::invalid_argument if the clause is not in f.
bool is_blocked(const Formula& f, ClauseId c, std::size_t l_pos, Mode mode, Strategy strategy = Strategy::Exact,
                CheckStats* stats = nullptr);

}  // namespace fobce
