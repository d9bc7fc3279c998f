#pragma once

#include <string>

#include "gen.hpp"

namespace fobce::testing {

struct LemmaStats {
  int instances = 0;  // (formula, blocked clause, assignment, instance) cases checked
  int failures = 0;
  std::string first_failure;
};

/// Checks the flipping lemma on random formulas over {a,b}: for a blocked
/// clause C with blocking literal L and an assignment falsifying a ground
/// instance Cλ, flipping Lλ keeps every satisfied ground instance of
/// F \ {C} satisfied and makes Cλ true. With equality, formulas contain ≈,
/// C is equality-blocked, assignments satisfy the equality axioms, the flip
/// is an equivalence flip and the axiom instances must stay satisfied.
LemmaStats run_flip_lemma(Rng& rng, int instances, bool equality);

}  // namespace fobce::testing
