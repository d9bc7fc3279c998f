#include "fobce/term.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace fobce {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(VarId v) {
  return Term(std::make_shared<const Node>(Node{true, v, {}, false, mix(0x51ed27u, v)}));
}

Term Term::app(SymbolId functor, std::vector<Term> args) {
  bool ground = true;
  std::size_t h = mix(0xa11ce5u, functor);
  for (const auto& a : args) {
    ground = ground && a.ground();
    h = mix(h, a.hash());
  }
  return Term(std::make_shared<const Node>(Node{false, functor, std::move(args), ground, h}));
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.is_var() != b.is_var() || a.node_->id != b.node_->id ||
      a.arity() != b.arity())
    return false;
  auto as = a.args(), bs = b.args();
  return std::equal(as.begin(), as.end(), bs.begin(), bs.end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.node_->id <=> b.node_->id; c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

void for_each_var(const Term& t, const std::function<void(VarId)>& f) {
  if (t.is_var()) {
    f(t.var_id());
    return;
  }
  if (t.ground()) return;
  for (const auto& a : t.args()) for_each_var(a, f);
}

bool occurs_in(VarId v, const Term& t) {
  if (t.is_var()) return t.var_id() == v;
  if (t.ground()) return false;
  return std::any_of(t.args().begin(), t.args().end(), [v](const Term& a) { return occurs_in(v, a); });
}

Literal::Literal(bool positive, SymbolId predicate, std::vector<Term> args)
    : positive_(positive), predicate_(predicate), args_(std::move(args)) {
  if (predicate_ == SymbolTable::kEquality && args_.size() != 2)
    throw std::invalid_argument("equality literal needs exactly two arguments");
  std::size_t h = mix(positive_ ? 0x7u : 0x3u, predicate_);
  for (const auto& a : args_) h = mix(h, a.hash());
  hash_ = h;
}

Literal Literal::equality(bool positive, Term lhs, Term rhs) {
  return Literal(positive, SymbolTable::kEquality, {std::move(lhs), std::move(rhs)});
}

bool Literal::ground() const noexcept {
  return std::all_of(args_.begin(), args_.end(), [](const Term& t) { return t.ground(); });
}

Literal Literal::complement() const { return Literal(!positive_, predicate_, args_); }

Literal Literal::atom() const { return positive_ ? *this : complement(); }

bool operator==(const Literal& a, const Literal& b) noexcept {
  return a.hash_ == b.hash_ && a.positive_ == b.positive_ && a.predicate_ == b.predicate_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) noexcept {
  if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
  if (auto c = a.positive_ <=> b.positive_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i)
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool Clause::ground() const noexcept {
  return std::all_of(literals.begin(), literals.end(), [](const Literal& l) { return l.ground(); });
}

namespace {

void check_term(const SymbolTable& symbols, const Term& t) {
  if (t.is_var()) return;
  if (SymbolTable::is_reserved(t.functor())) {
    if (t.arity() != 0) throw ArityError(symbols.name(t.functor()), "reserved constant applied to arguments");
    return;
  }
  auto info = symbols.info(t.functor());
  if (info.kind == SymbolKind::Predicate)
    throw ArityError(info.name, "predicate '" + info.name + "' used as a term");
  if (info.arity != t.arity())
    throw ArityError(info.name, "symbol '" + info.name + "' has arity " + std::to_string(info.arity) +
                                    " but is applied to " + std::to_string(t.arity()) + " arguments");
  for (const auto& a : t.args()) check_term(symbols, a);
}

}  // namespace

Clause mk_clause(const SymbolTable& symbols, std::vector<Literal> literals, ClauseId id) {
  for (const auto& l : literals) {
    auto info = symbols.info(l.predicate());
    if (info.kind != SymbolKind::Predicate)
      throw ArityError(info.name, "symbol '" + info.name + "' used as a predicate");
    if (info.arity != l.arity())
      throw ArityError(info.name, "predicate '" + info.name + "' has arity " + std::to_string(info.arity) +
                                      " but is applied to " + std::to_string(l.arity()) + " arguments");
    for (const auto& a : l.args()) check_term(symbols, a);
  }
  return Clause{id, std::move(literals)};
}

std::vector<VarId> variables(const Literal& l) {
  std::vector<VarId> out;
  for (const auto& a : l.args())
    for_each_var(a, [&](VarId v) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    });
  return out;
}

std::vector<VarId> variables(const Clause& c) {
  std::vector<VarId> out;
  for (const auto& l : c.literals)
    for (const auto& a : l.args())
      for_each_var(a, [&](VarId v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      });
  return out;
}

void VarCounter::reserve_above(const Clause& c) {
  for (const auto& l : c.literals)
    for (const auto& a : l.args()) for_each_var(a, [this](VarId v) { reserve_above(v); });
}

namespace {

class KeyWriter {
 public:
  explicit KeyWriter(const SymbolTable* symbols) : symbols_(symbols) {}

  void symbol(std::string& out, SymbolId id) const {
    if (symbols_) {
      out += symbols_->name(id);
    } else {
      out += '#';
      out += std::to_string(id);
    }
  }

  // Variables rendered as '_' when numbering is null.
  void term(std::string& out, const Term& t, std::map<VarId, unsigned>* numbering) const {
    if (t.is_var()) {
      if (!numbering) {
        out += '_';
        return;
      }
      auto [it, inserted] = numbering->emplace(t.var_id(), static_cast<unsigned>(numbering->size()));
      out += 'V';
      out += std::to_string(it->second);
      return;
    }
    symbol(out, t.functor());
    if (t.arity() == 0) return;
    out += '(';
    bool first = true;
    for (const auto& a : t.args()) {
      if (!first) out += ',';
      first = false;
      term(out, a, numbering);
    }
    out += ')';
  }

  void literal(std::string& out, const Literal& l, std::map<VarId, unsigned>* numbering) const {
    out += l.positive() ? '+' : '-';
    symbol(out, l.predicate());
    out += '(';
    bool first = true;
    for (const auto& a : l.args()) {
      if (!first) out += ',';
      first = false;
      term(out, a, numbering);
    }
    out += ')';
  }

 private:
  const SymbolTable* symbols_;
};

// Beyond this many tie orderings the key falls back to a single refined order.
constexpr std::size_t kMaxTieOrderings = 40320;

}  // namespace

std::string canonical_key(const Clause& c, const SymbolTable* symbols) {
  KeyWriter w(symbols);
  const std::size_t n = c.size();
  std::vector<std::string> shape(n);
  for (std::size_t i = 0; i < n; ++i) w.literal(shape[i], c.literals[i], nullptr);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shape[a] < shape[b]; });

  // Tie groups: runs of equal shapes; only orderings within a group vary.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::size_t orderings = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && shape[order[j]] == shape[order[i]]) ++j;
    if (j - i > 1) {
      groups.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i && orderings <= kMaxTieOrderings; ++k) orderings *= k;
    }
    i = j;
  }

  auto render = [&](const std::vector<std::size_t>& ord) {
    std::map<VarId, unsigned> numbering;
    std::string out;
    for (auto i : ord) {
      w.literal(out, c.literals[i], &numbering);
      out += '|';
    }
    return out;
  };

  if (groups.empty()) return render(order);

  if (orderings > kMaxTieOrderings) {
    // Heuristic refinement: order tied literals by their rendering under the
    // current numbering until stable.
    std::string best = render(order);
    for (int round = 0; round < 8; ++round) {
      std::map<VarId, unsigned> numbering;
      std::vector<std::string> full(n);
      for (auto i : order) w.literal(full[i], c.literals[i], &numbering);
      for (auto [b, e] : groups)
        std::stable_sort(order.begin() + b, order.begin() + e,
                         [&](std::size_t x, std::size_t y) { return full[x] < full[y]; });
      auto next = render(order);
      if (next == best) break;
      best = std::min(best, next);
    }
    return best;
  }

  for (auto [b, e] : groups) std::sort(order.begin() + b, order.begin() + e);
  std::string best = render(order);
  // Odometer over per-group permutations.
  while (true) {
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [b, e] = groups[g];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (g == groups.size()) break;
    best = std::min(best, render(order));
  }
  return best;
}

bool is_variant(const Clause& a, const Clause& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

Clause dedup_literals(const Clause& c) {
  Clause out{c.id, {}};
  for (const auto& l : c.literals)
    if (std::find(out.literals.begin(), out.literals.end(), l) == out.literals.end()) out.literals.push_back(l);
  return out;
}

}  // namespace fobce
