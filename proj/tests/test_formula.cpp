#include <map>
#include <string>

#include "doctest.h"
#include "il/formula.hpp"

using namespace il;

TEST_CASE("parse handles precedence and associativity") {
  // Implication is right-associative and binds weakest.
  CHECK(equal(parse("p -> q -> r"), imp(var('p'), imp(var('q'), var('r')))));
  // And/or share one level, left-associative.
  CHECK(equal(parse("p & q & r"), conj(conj(var('p'), var('q')), var('r'))));
  CHECK(equal(parse("p | q | r"), disj(disj(var('p'), var('q')), var('r'))));
  CHECK(equal(parse("p & q | r"), disj(conj(var('p'), var('q')), var('r'))));
  // Unary operators bind tightest and stack.
  CHECK(equal(parse("~[]<>p"), neg(box(dia(var('p'))))));
  CHECK(equal(parse("[]p -> q"), imp(box(var('p')), var('q'))));
  // Interpretability sits between implication and conjunction.
  CHECK(equal(parse("p & q |> r | s"),
              rhd(conj(var('p'), var('q')), disj(var('r'), var('s')))));
  CHECK(equal(parse("p |> q -> r"), imp(rhd(var('p'), var('q')), var('r'))));
}

TEST_CASE("nested |> without parentheses is rejected") {
  CHECK_THROWS_WITH_AS(parse("p |> q |> r"),
                       "'|>' is non-associative; parenthesize nested '|>'",
                       ParseError);
  // Parenthesized nesting is fine on either side.
  CHECK(equal(parse("(p |> q) |> r"), rhd(rhd(var('p'), var('q')), var('r'))));
  CHECK(equal(parse("p |> (q |> r)"), rhd(var('p'), rhd(var('q'), var('r')))));
}

TEST_CASE("parse error positions and messages") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_WITH_AS(parse("p &"), "unexpected end of input", ParseError);
  CHECK_THROWS_WITH_AS(parse("(p -> q"), "expected ')'", ParseError);
  CHECK_THROWS_WITH_AS(parse("p q"), "unexpected trailing input", ParseError);
  try {
    parse("p -> $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("unicode aliases parse to the same trees") {
  CHECK(equal(parse("¬p ∧ q"), parse("~p & q")));
  CHECK(equal(parse("p ∨ q → r"), parse("p | q -> r")));
  CHECK(equal(parse("□p → ◇q"), parse("[]p -> <>q")));
  CHECK(equal(parse("p ▷ q"), parse("p |> q")));
  CHECK(equal(parse("⊤ ▷ ⊥"), parse("T |> F")));
}

TEST_CASE("print emits minimal parentheses in ascii") {
  CHECK(print(parse("p -> q -> r")) == "p -> q -> r");
  CHECK(print(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(print(parse("p & q & r")) == "p & q & r");
  // Right-nested conjunction keeps its parentheses (printing is
  // structure-faithful, not flattening).
  CHECK(print(parse("p & (q & r)")) == "p & (q & r)");
  // & and | share one precedence level, so a left-nested mix needs no
  // parentheses; `p | q & r` reparses as `(p | q) & r`.
  CHECK(print(parse("(p | q) & r")) == "p | q & r");
  CHECK(equal(parse(print(parse("(p | q) & r"))), parse("(p | q) & r")));
  // A right-nested mix still needs them.
  CHECK(print(parse("p | (q & r)")) == "p | (q & r)");
  CHECK(print(parse("<>T |> T")) == "<>T |> T");
  CHECK(print(parse("(p |> q) |> r")) == "(p |> q) |> r");
  CHECK(print(parse("¬(p ▷ ¬q)")) == "~(p |> ~q)");
  CHECK(print(parse("[](p -> q)")) == "[](p -> q)");
  CHECK(print(parse("~[]p")) == "~[]p");
}

TEST_CASE("round trip on hand examples") {
  for (const char* text : {
           "a0 |> b0 -> ~(a0 |> ~c0) |> b0 & []c0",
           "p |> q -> p & []r |> q & []r",
           "<>p |> p",
           "[]([]p -> p) -> []p",
           "T",
           "F",
           "p1 & ~p2 | <>p3",
       }) {
    const Fptr f = parse(text);
    CHECK(print(f) == text);
    CHECK(equal(parse(print(f)), f));
  }
}

TEST_CASE("substitute is simultaneous") {
  const Fptr f = parse("p & q");
  std::map<VarName, Fptr> swap_pq = {{VarName('p'), var('q')},
                                     {VarName('q'), var('p')}};
  CHECK(print(substitute(f, swap_pq)) == "q & p");
  // Empty map is the identity.
  CHECK(equal(substitute(f, {}), f));
  // Substituting into a formula that lacks the variable is the identity.
  std::map<VarName, Fptr> irrelevant = {{VarName('z', 9), top()}};
  CHECK(equal(substitute(f, irrelevant), f));
}

TEST_CASE("replace_all rewrites whole subformulas simultaneously") {
  // Swapping two atoms as subformula patterns.
  const Fptr f = parse("p & q");
  std::vector<std::pair<Fptr, Fptr>> swap_pq = {{var('p'), var('q')},
                                                {var('q'), var('p')}};
  CHECK(print(replace_all(f, swap_pq)) == "q & p");
  // Empty replacement list is the identity.
  CHECK(equal(replace_all(f, {}), f));
  // Patterns that do not occur leave the formula untouched.
  std::vector<std::pair<Fptr, Fptr>> none = {{parse("x |> y"), bot()}};
  CHECK(equal(replace_all(f, none), f));
  // Replacement results are not re-scanned: rewriting p to q leaves the
  // introduced q alone even when q is itself a pattern.
  const Fptr g = replace_all(parse("p"), swap_pq);
  CHECK(print(g) == "q");
}

TEST_CASE("replace_all rejects ambiguous pattern sets") {
  const Fptr f = parse("p & (p & q)");
  std::vector<std::pair<Fptr, Fptr>> dup = {{var('p'), top()},
                                            {var('p'), bot()}};
  CHECK_THROWS_WITH_AS(replace_all(f, dup),
                       "duplicate replacement pattern: p", OverlapError);
  // One pattern occurring inside another that also occurs in the target.
  std::vector<std::pair<Fptr, Fptr>> nested = {{var('p'), top()},
                                               {parse("p & q"), bot()}};
  CHECK_THROWS_WITH_AS(
      replace_all(f, nested),
      "overlapping replacement patterns: p occurs inside p & q",
      OverlapError);
  // If the larger pattern does not occur in the target, the overlap is
  // harmless and the rewrite proceeds.
  std::vector<std::pair<Fptr, Fptr>> harmless = {{var('p'), top()},
                                                 {parse("p & r"), bot()}};
  CHECK(print(replace_all(f, harmless)) == "T & (T & q)");
}

TEST_CASE("vars collects each variable once") {
  const Fptr f = parse("a0 |> b0 -> ~(a0 |> ~c0) |> b0 & []c0");
  const auto vs = vars(f);
  REQUIRE(vs.size() == 3);
  CHECK(vs.count(VarName('a', 0)) == 1);
  CHECK(vs.count(VarName('b', 0)) == 1);
  CHECK(vs.count(VarName('c', 0)) == 1);
  CHECK(vars(parse("T -> F")).empty());
}

TEST_CASE("equal_mod_and ignores conjunction grouping only") {
  CHECK(equal_mod_and(parse("p & (q & r)"), parse("(p & q) & r")));
  CHECK(equal_mod_and(parse("a & (b & (c & d))"), parse("((a & b) & c) & d")));
  // Order still matters.
  CHECK_FALSE(equal_mod_and(parse("p & q"), parse("q & p")));
  // Disjunction grouping is not ignored.
  CHECK_FALSE(equal_mod_and(parse("p | (q | r)"), parse("(p | q) | r")));
  // Flattening reaches under other connectives.
  CHECK(equal_mod_and(parse("x |> p & (q & r)"), parse("x |> (p & q) & r")));
}

TEST_CASE("variable names parse and print") {
  CHECK(VarName::parse("p").base == 'p');
  CHECK(VarName::parse("p").index == VarName::kNoIndex);
  CHECK(VarName::parse("a12").base == 'a');
  CHECK(VarName::parse("a12").index == 12);
  CHECK(VarName('a', 12).str() == "a12");
  CHECK(VarName('p').str() == "p");
  CHECK_THROWS_WITH_AS(VarName::parse("P"),
                       "variable name must start with a-z: 'P'",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(VarName::parse("a1b"),
                       "variable name must be [a-z][0-9]*: 'a1b'",
                       std::invalid_argument);
}
