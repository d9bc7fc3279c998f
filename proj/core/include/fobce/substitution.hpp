#pragma once

#include <map>
#include <vector>

#include "fobce/term.hpp"

namespace fobce {

/// Variable bindings in triangular form: a bound term may mention other
/// bound variables, which are resolved on application. Binding never copies
/// terms, so composing unifiers does not blow up term size.
class Substitution {
 public:
  /// Records v -> t. Identity bindings are dropped. Does not check for cycles.
  void bind(VarId v, Term t);
  const Term* lookup(VarId v) const;

  /// Follows variable-to-binding chains at the top level only.
  Term deref(Term t) const;

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  bool empty() const noexcept { return bindings_.empty(); }
  std::size_t size() const noexcept { return bindings_.size(); }
  const std::map<VarId, Term>& bindings() const noexcept { return bindings_; }

  /// The same substitution with every binding fully dereferenced, i.e. in
  /// idempotent (non-triangular) form.
  Substitution resolved() const;

  /// Composition by juxtaposition: apply(E, compose(s, t)) == t.apply(s.apply(E)).
  /// A composition need not be idempotent, so its bindings are applied
  /// simultaneously rather than chased.
  static Substitution compose(const Substitution& first, const Substitution& then);

  /// Bindings are applied in one step instead of being followed.
  bool simultaneous() const noexcept { return simultaneous_; }

 private:
  std::map<VarId, Term> bindings_;
  bool simultaneous_ = false;
};

/// A variant of c whose variables are fresh, issued by the counter in order
/// of first occurrence.
Clause rename_apart(const Clause& c, VarCounter& counter);

}  // namespace fobce
