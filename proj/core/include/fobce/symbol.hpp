#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace fobce {

using SymbolId = std::uint32_t;

enum class SymbolKind : std::uint8_t { Predicate, Function, Constant, Variable };

struct SymbolInfo {
  std::string name;
  SymbolKind kind;
  unsigned arity;
  bool is_equality = false;
};

/// Raised when a symbol name is reused with an incompatible arity.
class ArityError : public std::runtime_error {
 public:
  ArityError(std::string symbol, const std::string& what)
      : std::runtime_error(what), symbol_(std::move(symbol)) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Per-problem interning of predicate, function and constant symbols.
///
/// Id 0 is always the equality predicate. Two id ranges above the table are
/// reserved: skolem constants used by validity checks, and the seed constant
/// injected by Herbrand grounding when a signature has no constants. Neither
/// ever appears in printed problems.
class SymbolTable {
 public:
  static constexpr SymbolId kEquality = 0;
  static constexpr SymbolId kSkolemBase = 0x80000000u;
  static constexpr SymbolId kSeedConstant = 0x7fffffffu;

  SymbolTable();

  /// Interns (name, kind, arity). Function symbols of arity 0 are stored as
  /// constants. Equal triples always return the same id.
  SymbolId intern(std::string_view name, SymbolKind kind, unsigned arity);

  /// Like intern, but rejects a name already used in the same role
  /// (predicate vs. function/constant) with a different arity.
  SymbolId intern_checked(std::string_view name, SymbolKind kind, unsigned arity);

  std::optional<SymbolId> find(std::string_view name, SymbolKind kind, unsigned arity) const;

  /// Info for a table id. Reserved ids get synthesized entries.
  SymbolInfo info(SymbolId id) const;
  std::string name(SymbolId id) const;
  unsigned arity(SymbolId id) const;
  SymbolKind kind(SymbolId id) const;

  std::size_t size() const noexcept { return symbols_.size(); }

  static bool is_reserved(SymbolId id) noexcept { return id >= kSeedConstant; }
  static bool is_skolem(SymbolId id) noexcept { return id >= kSkolemBase; }
  static SymbolId skolem(std::uint32_t k) noexcept { return kSkolemBase + k; }

 private:
  using Key = std::tuple<std::string, SymbolKind, unsigned>;
  static SymbolKind normalize(SymbolKind kind, unsigned arity) noexcept;

  std::vector<SymbolInfo> symbols_;
  std::map<Key, SymbolId, std::less<>> index_;
  // (name, is_predicate) -> arity first seen
  std::map<std::pair<std::string, bool>, unsigned, std::less<>> arity_by_role_;
};

}  // namespace fobce
