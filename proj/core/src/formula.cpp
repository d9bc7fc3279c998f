#include "fobce/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "fobce/substitution.hpp"

namespace fobce {

Formula::Formula() : Formula(std::make_shared<SymbolTable>()) {}

Formula::Formula(std::shared_ptr<SymbolTable> symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw std::invalid_argument("formula needs a symbol table");
}

ClauseId Formula::add(std::vector<Literal> literals) {
  ClauseId id = next_id_;
  Clause c = rename_apart(mk_clause(*symbols_, std::move(literals), id), vars_);
  clauses_.emplace(id, std::move(c));
  ++next_id_;
  return id;
}

void Formula::insert(Clause c) {
  if (clauses_.count(c.id)) throw std::invalid_argument("duplicate clause id " + std::to_string(c.id));
  vars_.reserve_above(c);
  next_id_ = std::max(next_id_, c.id + 1);
  clauses_.emplace(c.id, std::move(c));
}

bool Formula::erase(ClauseId id) { return clauses_.erase(id) != 0; }

const Clause* Formula::find(ClauseId id) const {
  auto it = clauses_.find(id);
  return it == clauses_.end() ? nullptr : &it->second;
}

const Clause& Formula::at(ClauseId id) const {
  auto* c = find(id);
  if (!c) throw std::out_of_range("clause " + std::to_string(id) + " is not in the formula");
  return *c;
}

bool Formula::contains_equality() const {
  for (const auto& [id, c] : clauses_)
    for (const auto& l : c.literals)
      if (l.is_equality()) return true;
  return false;
}

void collect_symbols(const Term& t, std::set<SymbolId>& out) {
  if (t.is_var()) return;
  out.insert(t.functor());
  for (const auto& a : t.args()) collect_symbols(a, out);
}

void collect_symbols(const Literal& l, std::set<SymbolId>& out) {
  out.insert(l.predicate());
  for (const auto& a : l.args()) collect_symbols(a, out);
}

std::set<SymbolId> Formula::signature() const {
  std::set<SymbolId> out;
  for (const auto& [id, c] : clauses_)
    for (const auto& l : c.literals) collect_symbols(l, out);
  return out;
}

Formula Formula::restricted_to(const std::set<ClauseId>& keep) const {
  Formula out(symbols_);
  out.vars_ = vars_;
  out.next_id_ = next_id_;
  for (const auto& [id, c] : clauses_)
    if (keep.count(id)) out.clauses_.emplace(id, c);
  return out;
}

std::vector<std::string> canonical_keys(const Formula& f, bool with_names) {
  std::vector<std::string> keys;
  keys.reserve(f.size());
  for (const auto& [id, c] : f.clauses()) keys.push_back(canonical_key(c, with_names ? &f.symbols() : nullptr));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace fobce
