#include "fobce/substitution.hpp"

#include <unordered_map>

namespace fobce {

void Substitution::bind(VarId v, Term t) {
  if (t.is_var() && t.var_id() == v) {
    bindings_.erase(v);
    return;
  }
  bindings_.insert_or_assign(v, std::move(t));
}

const Term* Substitution::lookup(VarId v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::deref(Term t) const {
  while (t.is_var()) {
    auto* b = lookup(t.var_id());
    if (!b) break;
    t = *b;
    if (simultaneous_) break;
  }
  return t;
}

namespace {

// Full application with a per-call cache so shared subterms are rebuilt once.
class Applier {
 public:
  explicit Applier(const Substitution& s) : s_(s) {}

  Term operator()(const Term& t) {
    if (t.ground()) return t;
    if (t.is_var()) {
      auto* b = s_.lookup(t.var_id());
      if (!b) return t;
      if (s_.simultaneous()) return *b;
      if (auto it = vars_.find(t.var_id()); it != vars_.end()) return it->second;
      Term r = (*this)(*b);
      vars_.emplace(t.var_id(), r);
      return r;
    }
    if (auto it = nodes_.find(t.node_ptr()); it != nodes_.end()) return it->second;
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const auto& a : t.args()) {
      args.push_back((*this)(a));
      changed = changed || args.back().node_ptr() != a.node_ptr();
    }
    Term r = changed ? Term::app(t.functor(), std::move(args)) : t;
    nodes_.emplace(t.node_ptr(), r);
    return r;
  }

 private:
  const Substitution& s_;
  std::unordered_map<VarId, Term> vars_;
  std::unordered_map<const void*, Term> nodes_;
};

}  // namespace

Term Substitution::apply(const Term& t) const {
  if (empty()) return t;
  return Applier(*this)(t);
}

Literal Substitution::apply(const Literal& l) const {
  if (empty()) return l;
  Applier ap(*this);
  std::vector<Term> args;
  args.reserve(l.arity());
  for (const auto& a : l.args()) args.push_back(ap(a));
  return Literal(l.positive(), l.predicate(), std::move(args));
}

Clause Substitution::apply(const Clause& c) const {
  if (empty()) return c;
  Applier ap(*this);
  Clause out{c.id, {}};
  out.literals.reserve(c.size());
  for (const auto& l : c.literals) {
    std::vector<Term> args;
    args.reserve(l.arity());
    for (const auto& a : l.args()) args.push_back(ap(a));
    out.literals.emplace_back(l.positive(), l.predicate(), std::move(args));
  }
  return out;
}

Substitution Substitution::resolved() const {
  Substitution out;
  out.simultaneous_ = simultaneous_;
  Applier ap(*this);
  for (const auto& [v, t] : bindings_) out.bind(v, ap(Term::var(v)));
  return out;
}

Substitution Substitution::compose(const Substitution& first, const Substitution& then) {
  Substitution out;
  out.simultaneous_ = true;
  Applier ap_first(first);
  Applier ap_then(then);
  for (const auto& [v, t] : first.bindings_) out.bind(v, ap_then(ap_first(Term::var(v))));
  for (const auto& [v, t] : then.bindings_)
    if (!first.lookup(v)) out.bind(v, ap_then(Term::var(v)));
  return out;
}

namespace {

Term rename(const Term& t, const std::unordered_map<VarId, VarId>& renaming) {
  if (t.is_var()) return Term::var(renaming.at(t.var_id()));
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(rename(a, renaming));
  return Term::app(t.functor(), std::move(args));
}

}  // namespace

Clause rename_apart(const Clause& c, VarCounter& counter) {
  // Parallel renaming: each variable is looked up once, never chained.
  std::unordered_map<VarId, VarId> renaming;
  for (VarId v : variables(c)) renaming.emplace(v, counter.fresh());
  Clause out{c.id, {}};
  out.literals.reserve(c.size());
  for (const auto& l : c.literals) {
    std::vector<Term> args;
    args.reserve(l.arity());
    for (const auto& a : l.args()) args.push_back(rename(a, renaming));
    out.literals.emplace_back(l.positive(), l.predicate(), std::move(args));
  }
  return out;
}

}  // namespace fobce
