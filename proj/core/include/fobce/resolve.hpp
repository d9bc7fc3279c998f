#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fobce/term.hpp"
#include "fobce/unify.hpp"

namespace fobce {

/// A clause with one literal flattened: every argument t_i of the literal is
/// replaced by a fresh variable x_i and the guard x_i != t_i is added.
struct FlatClause {
  Clause original;
  /// Guards first, then the original literals with the flattened one
  /// rewritten in place.
  Clause clause;
  std::vector<std::size_t> flattened_positions;  // positions in `original`
  std::vector<Literal> disequation_guards;
  std::vector<VarId> fresh_vars;
};

/// Throws std::invalid_argument for an equality literal or a bad position.
FlatClause flatten(const Clause& c, std::size_t pos, VarCounter& vars);
FlatClause flatten(const Clause& c, std::size_t pos);

/// C'σ ∨ (D minus the selected literals)σ where σ is an mgu of L and the
/// complements of the selected literals; nullopt if they are not unifiable.
/// Throws std::invalid_argument if the selection is empty, out of range,
/// repeats a position, does not oppose L, or if c and d share variables.
std::optional<Clause> l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                                  std::span<const std::size_t> n_positions);

enum class Origin : std::uint8_t { GuardC, GuardD, C, D };

struct FlatResolvent {
  /// C guards, then C', then D guards, then D without the selected literals.
  Clause clause;
  /// Per literal of `clause`: where it came from, and its position in the
  /// source clause (for guards: the argument index).
  std::vector<std::pair<Origin, std::size_t>> origins;
  std::vector<VarId> fresh_vars;

  bool is_guard(std::size_t i) const noexcept {
    return origins[i].first == Origin::GuardC || origins[i].first == Origin::GuardD;
  }
};

/// Flat L-resolvent. The flattened literals are resolved with the trivial
/// unifier mapping the partner's fresh variables onto those of L, so the
/// construction never fails. Throws std::invalid_argument when L is an
/// equality literal or the selection is malformed.
FlatResolvent flat_l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                               std::span<const std::size_t> n_positions, VarCounter& vars);
FlatResolvent flat_l_resolvent(const Clause& c, std::size_t l_pos, const Clause& d,
                               std::span<const std::size_t> n_positions);

/// Some two literals are complementary: syntactically, or with their
/// arguments equal under the closure when one is given. Throws
/// std::invalid_argument if the clause contains an equality literal.
bool is_valid_noeq(const Clause& c, const UnifClosure* closure = nullptr);
bool is_valid_noeq(std::span<const Literal> literals, const UnifClosure* closure = nullptr);

/// Complete validity check modulo equality: skolemizes the clause, negates
/// it and runs congruence closure on the resulting ground literals.
bool is_valid_eq(const Clause& c);
bool is_valid_eq(std::span<const Literal> literals);

/// Cheap sufficient condition for validity of a flat resolvent: one pass of
/// rewriting with the guard equations, then a syntactic check for t = t or a
/// complementary pair among the non-guard literals. Never claims validity
/// that is_valid_eq would deny.
bool is_valid_eq_approx(const FlatResolvent& r);

}  // namespace fobce
