#include "fobce/congruence.hpp"

#include <stdexcept>

namespace fobce {

std::size_t CongruenceClosure::SignatureHash::operator()(const Signature& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : s) h = (h ^ v) * 0x100000001b3ull;
  return h;
}

std::uint32_t CongruenceClosure::add_node(SymbolId functor, std::vector<std::uint32_t> args) {
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({functor, args});
  parent_.push_back(id);
  uses_.emplace_back();
  if (args.empty()) return id;

  for (auto a : args) {
    auto& u = uses_[find(a)];
    if (u.empty() || u.back() != id) u.push_back(id);
  }
  auto sig = signature(id);
  if (auto it = sigs_.find(sig); it != sigs_.end()) {
    merge_nodes(id, it->second);
  } else {
    sigs_.emplace(std::move(sig), id);
  }
  return id;
}

std::uint32_t CongruenceClosure::add(const Term& t) {
  if (!t.ground()) throw std::invalid_argument("congruence closure needs ground terms");
  if (auto it = terms_.find(t); it != terms_.end()) return it->second;
  std::vector<std::uint32_t> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(add(a));
  auto id = add_node(t.functor(), std::move(args));
  terms_.emplace(t, id);
  return id;
}

std::uint32_t CongruenceClosure::add_atom(const Literal& l) {
  if (l.is_equality()) throw std::invalid_argument("equality literal registered as an atom");
  if (!l.ground()) throw std::invalid_argument("congruence closure needs ground atoms");
  Term as_term = Term::app(l.predicate(), {l.args().begin(), l.args().end()});
  return add(as_term);
}

std::uint32_t CongruenceClosure::find(std::uint32_t n) {
  std::uint32_t root = n;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[n] != root) {
    auto next = parent_[n];
    parent_[n] = root;
    n = next;
  }
  return root;
}

CongruenceClosure::Signature CongruenceClosure::signature(std::uint32_t n) {
  Signature s;
  s.reserve(nodes_[n].args.size() + 1);
  s.push_back(nodes_[n].functor);
  for (auto a : nodes_[n].args) s.push_back(find(a));
  return s;
}

void CongruenceClosure::merge_nodes(std::uint32_t a, std::uint32_t b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending{{a, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    auto rx = find(x), ry = find(y);
    if (rx == ry) continue;
    if (ry < rx) std::swap(rx, ry);
    // rx survives; parents of ry get new signatures.
    auto moved = std::move(uses_[ry]);
    uses_[ry].clear();
    for (auto p : moved)
      if (auto it = sigs_.find(signature(p)); it != sigs_.end() && it->second == p) sigs_.erase(it);
    parent_[ry] = rx;
    for (auto p : moved) {
      auto sig = signature(p);
      if (auto it = sigs_.find(sig); it != sigs_.end()) {
        if (find(it->second) != find(p)) pending.emplace_back(p, it->second);
      } else {
        sigs_.emplace(std::move(sig), p);
      }
      uses_[rx].push_back(p);
    }
  }
}

void CongruenceClosure::merge(const Term& a, const Term& b) { merge_nodes(add(a), add(b)); }

bool CongruenceClosure::equal(const Term& a, const Term& b) { return find(add(a)) == find(add(b)); }

Satisfiability congruence_decide(std::span<const std::pair<Term, Term>> equations,
                                 std::span<const std::pair<Term, Term>> disequations,
                                 std::span<const Literal> atoms) {
  CongruenceClosure cc;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> diseq;
  std::vector<std::uint32_t> pos, neg;
  for (const auto& [l, r] : disequations) diseq.emplace_back(cc.add(l), cc.add(r));
  for (const auto& l : atoms) (l.positive() ? pos : neg).push_back(cc.add_atom(l));
  for (const auto& [l, r] : equations) cc.merge(l, r);

  for (auto [l, r] : diseq)
    if (cc.same_class(l, r)) return Satisfiability::Unsatisfiable;
  for (auto p : pos)
    for (auto n : neg)
      if (cc.same_class(p, n)) return Satisfiability::Unsatisfiable;
  return Satisfiability::Satisfiable;
}

}  // namespace fobce
