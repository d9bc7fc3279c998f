#include "fobce/unify.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace fobce {

namespace {

bool occurs(VarId v, const Term& t0, const Substitution& s, std::unordered_set<const void*>& seen) {
  Term t = s.deref(t0);
  if (t.is_var()) return t.var_id() == v;
  if (t.ground() || !seen.insert(t.node_ptr()).second) return false;
  for (const auto& a : t.args())
    if (occurs(v, a, s, seen)) return true;
  return false;
}

UnifyResult run_mgu(std::vector<std::pair<Term, Term>> work) {
  UnifyResult r;
  auto& s = r.subst;
  while (!work.empty()) {
    auto [a0, b0] = std::move(work.back());
    work.pop_back();
    Term a = s.deref(a0);
    Term b = s.deref(b0);
    if (a == b) continue;
    if (!a.is_var() && b.is_var()) std::swap(a, b);
    if (a.is_var()) {
      std::unordered_set<const void*> seen;
      if (occurs(a.var_id(), b, s, seen)) {
        r.status = UnifyStatus::OccursCheck;
        return r;
      }
      s.bind(a.var_id(), b);
      continue;
    }
    if (a.functor() != b.functor() || a.arity() != b.arity()) {
      r.status = UnifyStatus::Clash;
      return r;
    }
    for (std::size_t i = a.arity(); i-- > 0;) work.emplace_back(a.args()[i], b.args()[i]);
  }
  return r;
}

}  // namespace

UnifyResult mgu(std::span<const std::pair<Term, Term>> pairs) {
  std::vector<std::pair<Term, Term>> work(pairs.rbegin(), pairs.rend());
  return run_mgu(std::move(work));
}

UnifyResult mgu(std::span<const std::pair<Literal, Literal>> pairs) {
  std::vector<std::pair<Term, Term>> work;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    const auto& [l1, l2] = *it;
    if (l1.predicate() != l2.predicate() || l1.positive() != l2.positive() || l1.arity() != l2.arity())
      return UnifyResult{UnifyStatus::Clash, {}};
    for (std::size_t i = l1.arity(); i-- > 0;) work.emplace_back(l1.args()[i], l2.args()[i]);
  }
  return run_mgu(std::move(work));
}

UnifyResult mgu_atoms(const Literal& base, std::span<const Literal> others) {
  std::vector<std::pair<Term, Term>> work;
  for (auto it = others.rbegin(); it != others.rend(); ++it) {
    if (it->predicate() != base.predicate() || it->arity() != base.arity())
      return UnifyResult{UnifyStatus::Clash, {}};
    for (std::size_t i = base.arity(); i-- > 0;) work.emplace_back(base.args()[i], it->args()[i]);
  }
  return run_mgu(std::move(work));
}

// ---------------------------------------------------------------------------

std::uint32_t UnifClosure::add(const Term& t) {
  if (auto it = index_.find(t); it != index_.end()) return it->second;
  std::vector<std::uint32_t> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(add(a));
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({t, std::move(args)});
  index_.emplace(t, id);
  parent_.push_back(id);
  rank_.push_back(0);
  schema_.push_back(t.is_var() ? -1 : static_cast<std::int64_t>(id));
  min_node_.push_back(id);
  return id;
}

std::uint32_t UnifClosure::find(std::uint32_t n) const {
  while (parent_[n] != n) n = parent_[n];
  return n;
}

bool UnifClosure::unify(std::uint32_t a, std::uint32_t b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{a, b}};
  auto compress = [this](std::uint32_t n) {
    std::uint32_t root = find(n);
    while (parent_[n] != root) {
      auto next = parent_[n];
      parent_[n] = root;
      n = next;
    }
    return root;
  };
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    auto rx = compress(x), ry = compress(y);
    if (rx == ry) continue;
    auto sx = schema_[rx], sy = schema_[ry];
    if (sx >= 0 && sy >= 0) {
      const auto& nx = nodes_[sx];
      const auto& ny = nodes_[sy];
      if (nx.term.functor() != ny.term.functor() || nx.args.size() != ny.args.size()) return false;
    }
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    min_node_[rx] = std::min(min_node_[rx], min_node_[ry]);
    if (sx >= 0 && sy >= 0) {
      schema_[rx] = std::min(sx, sy);
      const auto& nx = nodes_[sx];
      const auto& ny = nodes_[sy];
      for (std::size_t i = 0; i < nx.args.size(); ++i) stack.emplace_back(nx.args[i], ny.args[i]);
    } else {
      schema_[rx] = std::max(sx, sy);
    }
  }
  return true;
}

bool UnifClosure::acyclic() const {
  // 0 = unvisited, 1 = on stack, 2 = done; indexed by node, used for roots.
  std::vector<std::uint8_t> color(nodes_.size(), 0);
  std::function<bool(std::uint32_t)> visit = [&](std::uint32_t r) {
    if (color[r] == 2) return true;
    if (color[r] == 1) return false;
    color[r] = 1;
    if (schema_[r] >= 0)
      for (auto a : nodes_[schema_[r]].args)
        if (!visit(find(a))) return false;
    color[r] = 2;
    return true;
  };
  for (std::uint32_t n = 0; n < nodes_.size(); ++n)
    if (parent_[n] == n && !visit(n)) return false;
  return true;
}

std::optional<UnifClosure> UnifClosure::build(const Literal& base, std::span<const Literal> partners,
                                              std::span<const Literal> context) {
  UnifClosure uc;
  for (const auto& a : base.args()) uc.add(a);
  for (const auto& p : partners)
    for (const auto& a : p.args()) uc.add(a);
  for (const auto& l : context)
    for (const auto& a : l.args()) uc.add(a);
  for (const auto& p : partners) {
    if (p.predicate() != base.predicate() || p.arity() != base.arity()) return std::nullopt;
    for (std::size_t i = 0; i < base.arity(); ++i)
      if (!uc.unify(uc.index_.at(base.args()[i]), uc.index_.at(p.args()[i]))) return std::nullopt;
  }
  if (!uc.acyclic()) return std::nullopt;
  for (std::uint32_t n = 0; n < uc.parent_.size(); ++n) uc.parent_[n] = uc.find(n);
  return uc;
}

std::optional<std::uint32_t> UnifClosure::node_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> UnifClosure::class_of(const Term& t) const {
  auto n = node_of(t);
  if (!n) return std::nullopt;
  return min_node_[find(*n)];
}

bool UnifClosure::same_impl(const Term& t, const Term& s, std::unordered_map<std::uint64_t, bool>& memo) const {
  if (t == s) return true;
  auto nt = node_of(t), ns = node_of(s);
  std::optional<std::uint32_t> rt, rs;
  if (nt) rt = find(*nt);
  if (ns) rs = find(*ns);
  std::uint64_t key = 0;
  if (rt && rs) {
    if (*rt == *rs) return true;
    auto lo = std::min(*rt, *rs), hi = std::max(*rt, *rs);
    key = (std::uint64_t{lo} << 32) | hi;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto structure = [this](const Term& x, const std::optional<std::uint32_t>& r) -> const Term* {
    if (r) return schema_[*r] >= 0 ? &nodes_[schema_[*r]].term : nullptr;
    return x.is_var() ? nullptr : &x;
  };
  const Term* st = structure(t, rt);
  const Term* ss = structure(s, rs);
  bool result = st && ss && st->functor() == ss->functor() && st->arity() == ss->arity();
  for (std::size_t i = 0; result && i < st->arity(); ++i) result = same_impl(st->args()[i], ss->args()[i], memo);
  if (rt && rs) memo[key] = result;
  return result;
}

bool UnifClosure::same(const Term& t, const Term& s) const {
  std::unordered_map<std::uint64_t, bool> memo;
  return same_impl(t, s, memo);
}

Substitution UnifClosure::to_substitution() const {
  // Representative variable per variable-only class: the lowest var node.
  std::unordered_map<std::uint32_t, std::uint32_t> rep_var;
  for (std::uint32_t n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].term.is_var()) rep_var.emplace(find(n), n);
  Substitution s;
  for (std::uint32_t n = 0; n < nodes_.size(); ++n) {
    const auto& term = nodes_[n].term;
    if (!term.is_var()) continue;
    auto r = find(n);
    if (schema_[r] >= 0) {
      s.bind(term.var_id(), nodes_[schema_[r]].term);
    } else {
      s.bind(term.var_id(), nodes_[rep_var.at(r)].term);
    }
  }
  return s;
}

bool complementary_under(const UnifClosure& closure, const Literal& l1, const Literal& l2) {
  if (!l1.opposes(l2) || l1.arity() != l2.arity()) return false;
  for (std::size_t i = 0; i < l1.arity(); ++i)
    if (!closure.same(l1.args()[i], l2.args()[i])) return false;
  return true;
}

}  // namespace fobce
