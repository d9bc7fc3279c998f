#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fobce/symbol.hpp"

namespace fobce {

using VarId = std::uint32_t;
using ClauseId = std::uint32_t;

/// Immutable first-order term. Copies share structure, so a Term can be
/// passed around by value and handed to other threads freely.
class Term {
 public:
  static Term var(VarId v);
  static Term app(SymbolId functor, std::vector<Term> args = {});

  bool is_var() const noexcept { return node_->is_var; }
  VarId var_id() const noexcept { return node_->id; }
  SymbolId functor() const noexcept { return node_->id; }
  std::span<const Term> args() const noexcept { return node_->args; }
  std::size_t arity() const noexcept { return node_->args.size(); }

  /// True iff no variable occurs in the term. Cached at construction.
  bool ground() const noexcept { return node_->ground; }
  std::size_t hash() const noexcept { return node_->hash; }

  /// Identity of the shared node; equal pointers imply equal terms.
  const void* node_ptr() const noexcept { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node {
    bool is_var;
    std::uint32_t id;
    std::vector<Term> args;
    bool ground;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// Calls f(v) for every variable occurrence, left to right.
void for_each_var(const Term& t, const std::function<void(VarId)>& f);
bool occurs_in(VarId v, const Term& t);

class Literal {
 public:
  Literal(bool positive, SymbolId predicate, std::vector<Term> args);

  static Literal equality(bool positive, Term lhs, Term rhs);

  bool positive() const noexcept { return positive_; }
  bool negative() const noexcept { return !positive_; }
  SymbolId predicate() const noexcept { return predicate_; }
  std::span<const Term> args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }
  bool is_equality() const noexcept { return predicate_ == SymbolTable::kEquality; }
  bool ground() const noexcept;

  Literal complement() const;
  /// The same atom with positive polarity.
  Literal atom() const;

  /// Same predicate, opposite polarity.
  bool opposes(const Literal& other) const noexcept {
    return predicate_ == other.predicate_ && positive_ != other.positive_;
  }

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const Literal& a, const Literal& b) noexcept;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) noexcept;

 private:
  bool positive_;
  SymbolId predicate_;
  std::vector<Term> args_;
  std::size_t hash_;
};

struct LiteralHash {
  std::size_t operator()(const Literal& l) const noexcept { return l.hash(); }
};

/// A multiset of literals. Duplicate literals are kept as separate occurrences.
struct Clause {
  ClauseId id = 0;
  std::vector<Literal> literals;

  std::size_t size() const noexcept { return literals.size(); }
  bool empty() const noexcept { return literals.empty(); }
  const Literal& operator[](std::size_t i) const { return literals[i]; }
  bool ground() const noexcept;
};

/// Builds a clause, checking every symbol's arity against the table.
/// Throws ArityError naming the offending symbol.
Clause mk_clause(const SymbolTable& symbols, std::vector<Literal> literals, ClauseId id);

/// Variables of a clause in order of first occurrence.
std::vector<VarId> variables(const Clause& c);
std::vector<VarId> variables(const Literal& l);

/// Monotone source of fresh variables.
class VarCounter {
 public:
  VarCounter() = default;
  explicit VarCounter(VarId next) : next_(next) {}

  VarId fresh() noexcept { return next_++; }
  VarId peek() const noexcept { return next_; }
  /// Ensures every later fresh() is above the variables of c.
  void reserve_above(const Clause& c);
  void reserve_above(VarId v) noexcept {
    if (v >= next_) next_ = v + 1;
  }

 private:
  VarId next_ = 0;
};

/// Renaming-invariant key: two clauses have the same key iff their literal
/// multisets are equal up to a bijective renaming of variables. With a
/// symbol table the key spells out symbol names, so keys can be compared
/// across problems with different interning orders.
std::string canonical_key(const Clause& c, const SymbolTable* symbols = nullptr);

/// Multiset equality up to variable renaming.
bool is_variant(const Clause& a, const Clause& b);

/// Optional normalization: drops repeated literal occurrences.
Clause dedup_literals(const Clause& c);

}  // namespace fobce

template <>
struct std::hash<fobce::Term> {
  std::size_t operator()(const fobce::Term& t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<fobce::Literal> {
  std::size_t operator()(const fobce::Literal& l) const noexcept { return l.hash(); }
};
