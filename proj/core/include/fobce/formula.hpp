#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "fobce/symbol.hpp"
#include "fobce/term.hpp"

namespace fobce {

/// A CNF formula: a set of clauses keyed by id over a shared symbol table.
/// Clauses added through add() are renamed apart, so no two clauses of a
/// formula share a variable.
class Formula {
 public:
  Formula();
  explicit Formula(std::shared_ptr<SymbolTable> symbols);

  SymbolTable& symbols() noexcept { return *symbols_; }
  const SymbolTable& symbols() const noexcept { return *symbols_; }
  const std::shared_ptr<SymbolTable>& symbols_ptr() const noexcept { return symbols_; }

  /// Checks arities, renames the literals apart from every other clause and
  /// assigns the next clause id.
  ClauseId add(std::vector<Literal> literals);

  /// Inserts a clause keeping its id. The caller guarantees variable
  /// disjointness (e.g. the clause came from another formula over the same
  /// counter). Throws std::invalid_argument on a duplicate id.
  void insert(Clause c);

  bool erase(ClauseId id);
  bool contains(ClauseId id) const { return clauses_.count(id) != 0; }
  const Clause* find(ClauseId id) const;
  const Clause& at(ClauseId id) const;

  const std::map<ClauseId, Clause>& clauses() const noexcept { return clauses_; }
  std::size_t size() const noexcept { return clauses_.size(); }
  bool empty() const noexcept { return clauses_.empty(); }

  bool contains_equality() const;
  /// Predicate, function and constant symbols of the member clauses.
  std::set<SymbolId> signature() const;

  VarCounter& var_counter() noexcept { return vars_; }
  const VarCounter& var_counter() const noexcept { return vars_; }
  ClauseId next_id() const noexcept { return next_id_; }

  /// Copy of this formula restricted to the given clause ids.
  Formula restricted_to(const std::set<ClauseId>& keep) const;

 private:
  std::shared_ptr<SymbolTable> symbols_;
  std::map<ClauseId, Clause> clauses_;
  VarCounter vars_;
  ClauseId next_id_ = 0;
};

/// Sorted renaming-invariant keys of all clauses; equal vectors mean equal
/// clause multisets up to renaming.
std::vector<std::string> canonical_keys(const Formula& f, bool with_names = false);

void collect_symbols(const Term& t, std::set<SymbolId>& out);
void collect_symbols(const Literal& l, std::set<SymbolId>& out);

}  // namespace fobce
