#include "fobce/symbol.hpp"

namespace fobce {

SymbolTable::SymbolTable() {
  symbols_.push_back({"=", SymbolKind::Predicate, 2, true});
  index_.emplace(Key{"=", SymbolKind::Predicate, 2}, kEquality);
  arity_by_role_.emplace(std::pair<std::string, bool>{"=", true}, 2);
}

SymbolKind SymbolTable::normalize(SymbolKind kind, unsigned arity) noexcept {
  if (kind == SymbolKind::Function && arity == 0) return SymbolKind::Constant;
  if (kind == SymbolKind::Constant && arity > 0) return SymbolKind::Function;
  return kind;
}

SymbolId SymbolTable::intern(std::string_view name, SymbolKind kind, unsigned arity) {
  kind = normalize(kind, arity);
  if (kind == SymbolKind::Variable)
    throw std::invalid_argument("variables are not interned in the symbol table");
  Key key{std::string(name), kind, arity};
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  auto id = static_cast<SymbolId>(symbols_.size());
  if (id >= kSeedConstant) throw std::length_error("symbol table exhausted");
  symbols_.push_back({std::string(name), kind, arity, false});
  index_.emplace(std::move(key), id);
  arity_by_role_.emplace(std::pair<std::string, bool>{std::string(name), kind == SymbolKind::Predicate},
                         arity);
  return id;
}

SymbolId SymbolTable::intern_checked(std::string_view name, SymbolKind kind, unsigned arity) {
  bool is_pred = normalize(kind, arity) == SymbolKind::Predicate;
  auto it = arity_by_role_.find(std::pair<std::string, bool>{std::string(name), is_pred});
  if (it != arity_by_role_.end() && it->second != arity) {
    throw ArityError(std::string(name), (is_pred ? "predicate '" : "function '") + std::string(name) +
                                            "' used with arity " + std::to_string(arity) +
                                            " but previously with arity " + std::to_string(it->second));
  }
  return intern(name, kind, arity);
}

std::optional<SymbolId> SymbolTable::find(std::string_view name, SymbolKind kind, unsigned arity) const {
  auto it = index_.find(Key{std::string(name), normalize(kind, arity), arity});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolInfo SymbolTable::info(SymbolId id) const {
  if (id == kSeedConstant) return {"$seed", SymbolKind::Constant, 0, false};
  if (is_skolem(id)) return {"$sk" + std::to_string(id - kSkolemBase), SymbolKind::Constant, 0, false};
  if (id >= symbols_.size()) throw std::out_of_range("unknown symbol id " + std::to_string(id));
  return symbols_[id];
}

std::string SymbolTable::name(SymbolId id) const { return info(id).name; }

unsigned SymbolTable::arity(SymbolId id) const {
  if (is_reserved(id)) return 0;
  return symbols_.at(id).arity;
}

SymbolKind SymbolTable::kind(SymbolId id) const {
  if (is_reserved(id)) return SymbolKind::Constant;
  return symbols_.at(id).kind;
}

}  // namespace fobce
