#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fobce/substitution.hpp"
#include "fobce/term.hpp"

namespace fobce {

enum class UnifyStatus { Ok, Clash, OccursCheck };

struct UnifyResult {
  UnifyStatus status = UnifyStatus::Ok;
  Substitution subst;  // triangular; meaningful only when status == Ok

  explicit operator bool() const noexcept { return status == UnifyStatus::Ok; }
};

/// Most general unifier of all pairs, with occurs check.
UnifyResult mgu(std::span<const std::pair<Term, Term>> pairs);

/// Literal pairs must agree on predicate and polarity; otherwise Clash.
UnifyResult mgu(std::span<const std::pair<Literal, Literal>> pairs);

/// Unifies the argument tuple of base with that of every other literal.
/// Polarity is ignored, predicates must agree.
UnifyResult mgu_atoms(const Literal& base, std::span<const Literal> others);

/// The equivalence relation an mgu induces on the nodes of a literal set,
/// computed without building the mgu (Huet-style union-find with a schema
/// term per class and a final acyclicity check in place of occurs checks).
///
/// Immutable once built.
class UnifClosure {
 public:
  /// Unifies the arguments of base with those of each partner (polarity is
  /// ignored). Terms of `context` are registered too so later queries about
  /// them are answered from the table. nullopt iff the set is not unifiable.
  static std::optional<UnifClosure> build(const Literal& base, std::span<const Literal> partners,
                                          std::span<const Literal> context = {});

  /// tσ == sσ for the mgu σ of the input set. Works for terms outside the
  /// table as well (their unregistered variables stay unbound).
  bool same(const Term& t, const Term& s) const;

  /// Representative node id of t's class (lowest node id in the class), or
  /// nullopt if t is not registered.
  std::optional<std::uint32_t> class_of(const Term& t) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// Extracts the mgu the closure stands for, in triangular form.
  Substitution to_substitution() const;

 private:
  struct Node {
    Term term;
    std::vector<std::uint32_t> args;  // empty for variables and constants
  };

  UnifClosure() = default;
  std::uint32_t add(const Term& t);
  std::uint32_t find(std::uint32_t n) const;
  bool unify(std::uint32_t a, std::uint32_t b);
  bool acyclic() const;
  std::optional<std::uint32_t> node_of(const Term& t) const;
  bool same_impl(const Term& t, const Term& s,
                 std::unordered_map<std::uint64_t, bool>& memo) const;

  std::vector<Node> nodes_;
  std::unordered_map<Term, std::uint32_t, TermHash> index_;
  mutable std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::int64_t> schema_;    // per root: a non-variable member or -1
  std::vector<std::uint32_t> min_node_;  // per root
};

/// Same predicate, opposite polarity, and arguments pairwise equal under
/// the closure.
bool complementary_under(const UnifClosure& closure, const Literal& l1, const Literal& l2);

}  // namespace fobce
