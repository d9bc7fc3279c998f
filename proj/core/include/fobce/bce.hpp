#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fobce/blocked.hpp"
#include "fobce/formula.hpp"

namespace fobce {

/// Literal occurrences of live clauses by (predicate, polarity).
class OccurrenceIndex {
 public:
  using Entries = std::map<ClauseId, std::vector<std::size_t>>;

  void add(const Clause& c);
  void remove(const Clause& c);

  /// Clauses with a literal of this predicate and polarity, and the
  /// positions of those literals; nullptr if there are none.
  const Entries* find(SymbolId predicate, bool positive) const;
  /// Number of literal occurrences (not clauses).
  std::size_t occurrences(SymbolId predicate, bool positive) const;

  const std::map<std::pair<SymbolId, bool>, Entries>& entries() const noexcept { return map_; }
  bool empty() const noexcept { return map_.empty(); }

  friend bool operator==(const OccurrenceIndex&, const OccurrenceIndex&) = default;

 private:
  std::map<std::pair<SymbolId, bool>, Entries> map_;
};

OccurrenceIndex build_index(const Formula& f);

enum class ModeChoice { Auto, NoEq, Eq };

struct EngineOptions {
  ModeChoice mode = ModeChoice::Auto;
  Strategy strategy = Strategy::Exact;
  /// Remove valid input clauses before elimination starts.
  bool delete_tautologies = false;
  /// Allow NoEq on a formula with equality. Unsound; for experiments only.
  bool unsafe_noeq = false;
  /// Replace the candidate priority by random keys drawn from this seed.
  std::optional<std::uint64_t> random_order_seed;
  std::optional<double> time_limit_seconds;
};

enum class Reason { Blocked, Tautology, Pure };

struct Elimination {
  static constexpr std::size_t kNoLiteral = static_cast<std::size_t>(-1);

  Clause clause;  // the clause as it was in the input
  std::size_t literal_pos = kNoLiteral;
  /// Partner clauses checked while establishing the elimination.
  std::uint64_t partners_tested = 0;
  Reason reason = Reason::Blocked;
};

struct BlockReport {
  std::vector<Elimination> eliminated;  // in elimination order
  std::size_t clauses_in = 0;
  std::size_t clauses_out = 0;
  std::uint64_t candidates_processed = 0;
  std::uint64_t validity_tests = 0;
  double seconds = 0;
  Mode mode_used = Mode::NoEq;
  Strategy strategy_used = Strategy::Exact;
  bool timed_out = false;
};

struct EliminationResult {
  Formula formula;
  BlockReport report;
};

/// Removes blocked (NoEq) or equality-blocked (Eq) clauses until none is
/// left. Auto picks Eq iff the formula contains equality. Throws
/// std::invalid_argument for NoEq on a formula with equality unless
/// unsafe_noeq is set.
EliminationResult eliminate(const Formula& f, const EngineOptions& options = {});
EliminationResult eliminate(const Formula& f, ModeChoice mode, Strategy strategy);

/// Removes clauses containing a pure predicate, to a fixpoint. Equality is
/// never pure.
EliminationResult eliminate_pure(const Formula& f);

Mode resolve_mode(const Formula& f, ModeChoice choice, bool unsafe_noeq = false);

}  // namespace fobce
