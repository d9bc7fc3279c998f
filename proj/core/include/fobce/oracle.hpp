#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fobce/formula.hpp"

namespace fobce::oracle {

/// Grounding would exceed the configured instance cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroundFormula {
  std::vector<Clause> clauses;

  /// Positive atoms of all literals, sorted and unique.
  std::vector<Literal> atoms() const;
  void append(const GroundFormula& other);
};

/// Truth values of ground atoms. Keys are positive atoms.
class GroundAssignment {
 public:
  GroundAssignment() = default;
  /// All atoms set to the same value.
  GroundAssignment(const std::vector<Literal>& atoms, bool value);

  void set(const Literal& atom, bool value);
  bool contains(const Literal& atom) const;
  /// Throws std::invalid_argument for an atom outside the universe.
  bool value(const Literal& atom) const;
  bool value_or(const Literal& atom, bool fallback) const;

  bool satisfies(const Literal& l) const { return value(l.atom()) == l.positive(); }
  bool satisfies(const Clause& c) const;
  bool satisfies(const GroundFormula& g) const;

  /// Adds the atoms not yet present with the given value.
  void extend(const std::vector<Literal>& atoms, bool value = false);

  const std::map<Literal, bool>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const GroundAssignment&, const GroundAssignment&) = default;

 private:
  std::map<Literal, bool> values_;
};

struct Limits {
  unsigned depth = 1;
  std::size_t cap = 20000;
};

/// Ground terms over the constants and function symbols of `signature` up
/// to the nesting depth (0 = constants only). Extra constants are added;
/// the reserved seed constant is used when there are no constants at all.
std::vector<Term> herbrand_universe(const SymbolTable& symbols, const std::set<SymbolId>& signature,
                                    std::span<const Term> extra_constants, const Limits& limits);

/// Every instance of every clause with variables ranging over the universe,
/// in clause-id order and lexicographic substitution order.
GroundFormula ground_instances(const Formula& f, std::span<const Term> universe, std::size_t cap = 20000);
GroundFormula ground_instances(const Clause& c, std::span<const Term> universe, std::size_t cap = 20000);
/// Grounding over the formula's own Herbrand universe.
GroundFormula ground_instances(const Formula& f, const Limits& limits = {}, std::span<const Term> constants = {});

/// Ground instances of reflexivity (E1), function congruence (E2) and
/// predicate congruence (E3) for the symbols in `signature`. When equality
/// itself is in the signature, its E3 instances give symmetry and
/// transitivity.
GroundFormula equality_axiom_instances(const SymbolTable& symbols, const std::set<SymbolId>& signature,
                                       std::span<const Term> universe, std::size_t cap = 20000);

/// DPLL with unit propagation. The model covers exactly the atoms of g.
std::optional<GroundAssignment> prop_sat(const GroundFormula& g);

/// Inverts the atom of lit. Throws std::invalid_argument for unknown atoms.
GroundAssignment flip(const GroundAssignment& a, const Literal& lit);

/// Inverts every atom P(s) with a(t_i = s_i) true for all i, where lit is
/// P(t) or its negation. Identical arguments count as equal; a missing
/// equality atom counts as false. Throws std::invalid_argument for an
/// equality literal or an unknown atom.
GroundAssignment equivalence_flip(const GroundAssignment& a, const Literal& lit);

enum class FlipMode { Flip, EquivalenceFlip };

struct BlockedInstance {
  Clause instance;
  Literal blocking;  // the instance of the blocking literal
};

struct RepairResult {
  bool ok = false;
  std::string error;  // set when !ok
  GroundAssignment assignment;
  std::vector<Literal> flipped;  // blocking literal instances, in order
};

/// Repeatedly picks the first falsified instance and (equivalence) flips its
/// blocking literal. When `side` is given, the starting assignment must
/// satisfy it and the result is checked against it as well.
RepairResult repair_by_flipping(const GroundAssignment& a, const std::vector<BlockedInstance>& instances,
                                FlipMode mode, const GroundFormula* side = nullptr);

enum class Verdict { Consistent, Refuted, Inconclusive };

struct RedundancyCheck {
  Verdict verdict = Verdict::Inconclusive;
  bool without_sat = false;  // F \ {C} grounding satisfiable
  bool with_sat = false;     // F ∪ {C} grounding satisfiable
  bool equality_axioms = false;
  unsigned depth = 0;
  std::size_t universe_size = 0;
  std::size_t instances = 0;
  std::string note;
};

/// Compares satisfiability of the groundings of F \ {C} and F ∪ {C} over
/// the Herbrand universe of F ∪ {C} (plus the extra constants), adding
/// equality axiom instances iff equality occurs. C is identified by id.
RedundancyCheck check_redundancy(const Formula& f, const Clause& c, const Limits& limits = {},
                                 std::span<const Term> constants = {});

std::string to_string(Verdict v);

}  // namespace fobce::oracle
