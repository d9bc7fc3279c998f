#include <functional>

#include "brute.hpp"
#include "builder.hpp"
#include "doctest.h"
#include "fobce/congruence.hpp"
#include "gen.hpp"

using namespace fobce;
using fobce::testing::Builder;
using Pairs = std::vector<std::pair<Term, Term>>;

TEST_CASE("congruence_decide") {
  Builder b;
  auto a = b.c("a"), bb = b.c("b"), c = b.c("c");
  SUBCASE("equal arguments clash on a predicate") {
    Pairs eqs{{a, bb}};
    std::vector<Literal> atoms{b.pos("p", {a}), b.neg("p", {bb})};
    CHECK(congruence_decide(eqs, {}, atoms) == Satisfiability::Unsatisfiable);
    CHECK(congruence_decide({}, {}, atoms) == Satisfiability::Satisfiable);
  }
  SUBCASE("a != a") {
    Pairs diseqs{{a, a}};
    CHECK(congruence_decide({}, diseqs, {}) == Satisfiability::Unsatisfiable);
  }
  SUBCASE("congruence through a function") {
    Pairs eqs{{b.f("f", {a}), bb}, {a, c}};
    Pairs diseqs{{b.f("f", {c}), bb}};
    CHECK(congruence_decide(eqs, diseqs, {}) == Satisfiability::Unsatisfiable);
    CHECK(fobce::testing::naive_congruence_unsat(eqs, diseqs, {}));
    Pairs weaker{{b.f("f", {a}), bb}};
    CHECK(congruence_decide(weaker, diseqs, {}) == Satisfiability::Satisfiable);
  }
  SUBCASE("nested congruence: f(f(f(a))) = a, f(f(f(f(f(a))))) = a implies f(a) = a") {
    auto f = [&](Term t) { return b.f("f", {t}); };
    Pairs eqs{{f(f(f(a))), a}, {f(f(f(f(f(a))))), a}};
    Pairs diseqs{{f(a), a}};
    CHECK(congruence_decide(eqs, diseqs, {}) == Satisfiability::Unsatisfiable);
  }
  SUBCASE("bad input") {
    Pairs eqs{{Builder::v(0), a}};
    CHECK_THROWS_AS(congruence_decide(eqs, {}, {}), std::invalid_argument);
    std::vector<Literal> atoms{Builder::eq(a, bb)};
    CHECK_THROWS_AS(congruence_decide({}, {}, atoms), std::invalid_argument);
  }
}

TEST_CASE("congruence closure object") {
  Builder b;
  auto a = b.c("a"), c = b.c("c");
  CongruenceClosure cc;
  auto fa = b.f("f", {a}), fc = b.f("f", {c});
  cc.add(fa);
  cc.add(fc);
  CHECK_FALSE(cc.equal(fa, fc));
  cc.merge(a, c);
  CHECK(cc.equal(fa, fc));
  CHECK(cc.size() == 4);
  auto pa = cc.add_atom(b.pos("p", {a}));
  auto pc = cc.add_atom(b.neg("p", {c}));
  CHECK(cc.same_class(pa, pc));
}

TEST_CASE("property: congruence_decide agrees with the naive fixpoint") {
  fobce::testing::Rng rng(31);
  Builder b;
  std::vector<Term> consts{b.c("a"), b.c("b"), b.c("c")};
  std::function<Term(int)> term = [&](int d) -> Term {
    if (d > 0 && rng() % 2) {
      if (rng() % 2) return b.f("f", {term(d - 1)});
      return b.f("g", {term(d - 1), term(d - 1)});
    }
    return consts[rng() % consts.size()];
  };
  int unsat = 0;
  for (int i = 0; i < 1000; ++i) {
    Pairs eqs, diseqs;
    std::vector<Literal> atoms;
    for (int k = int(rng() % 4); k > 0; --k) eqs.emplace_back(term(2), term(2));
    for (int k = int(rng() % 3); k > 0; --k) diseqs.emplace_back(term(2), term(2));
    for (int k = int(rng() % 3); k > 0; --k)
      atoms.push_back(rng() % 2 ? b.pos("p", {term(1)}) : b.neg("p", {term(1)}));
    bool expected = fobce::testing::naive_congruence_unsat(eqs, diseqs, atoms);
    unsat += expected;
    REQUIRE((congruence_decide(eqs, diseqs, atoms) == Satisfiability::Unsatisfiable) == expected);
  }
  CHECK(unsat > 100);
  CHECK(unsat < 900);
}
