#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fobce/term.hpp"

namespace fobce {

enum class Satisfiability { Satisfiable, Unsatisfiable };

/// Congruence closure over ground terms: union-find over a hash-consed
/// subterm dag with use lists and a signature table. When two classes merge
/// the root with the lower node id stays the representative.
///
/// Predicate atoms can be registered as terms too (predicate ids never clash
/// with function ids), so P(s) and P(t) share a class iff their argument
/// tuples are congruent.
class CongruenceClosure {
 public:
  /// Registers t and all its subterms. t must be ground.
  std::uint32_t add(const Term& t);
  std::uint32_t add_atom(const Literal& l);

  void merge(const Term& a, const Term& b);
  bool equal(const Term& a, const Term& b);
  bool same_class(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    SymbolId functor;
    std::vector<std::uint32_t> args;
  };
  using Signature = std::vector<std::uint32_t>;  // functor followed by arg roots
  struct SignatureHash {
    std::size_t operator()(const Signature& s) const noexcept;
  };

  std::uint32_t add_node(SymbolId functor, std::vector<std::uint32_t> args);
  std::uint32_t find(std::uint32_t n);
  void merge_nodes(std::uint32_t a, std::uint32_t b);
  Signature signature(std::uint32_t n);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> uses_;  // per root: nodes with an argument in the class
  std::unordered_map<Signature, std::uint32_t, SignatureHash> sigs_;
  std::unordered_map<Term, std::uint32_t, TermHash> terms_;
};

/// Decides a conjunction of ground equations, disequations and non-equality
/// atoms (with polarity) modulo congruence. Throws std::invalid_argument on
/// non-ground input or on an equality predicate among the atoms.
Satisfiability congruence_decide(std::span<const std::pair<Term, Term>> equations,
                                 std::span<const std::pair<Term, Term>> disequations,
                                 std::span<const Literal> atoms);

}  // namespace fobce
