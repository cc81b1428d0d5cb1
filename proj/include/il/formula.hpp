// ============================================================================
// formula.hpp — modal formula AST, concrete syntax, and structural rewriting
// ============================================================================
//
// The language has the classical connectives plus a unary modality []
// (with <> as its dual) and a binary modality |>.  Precedence, strongest
// first:  ~ [] <>  >  & |  >  |>  >  ->.  Implication is right-associative,
// & and | are left-associative at one shared level, and |> is
// non-associative: a chain like `p |> q |> r` is rejected at parse time so
// that every accepted text has exactly one tree.
//
// Design notes:
//   - Formulas are immutable trees shared via shared_ptr; structural
//     equality (not pointer identity) is the equality used everywhere.
//   - <>A and ~[]~A are distinct trees; no implicit normalization.
//   - substitute replaces variables simultaneously (replacements are not
//     re-scanned); replace_all replaces whole subtrees simultaneously in a
//     single top-down pass, so inserted material is never re-matched.
// ============================================================================

#ifndef IL_FORMULA_HPP
#define IL_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace il {

// ── Variable names ───────────────────────────────────────────────────────────

/// A propositional variable: one lowercase base letter plus an optional
/// numeric index.  Printed as `a`, `a0`, `e1`, ...  (base, index) pairs are
/// unique identifiers; kNoIndex marks the index-free form.
struct VarName {
  static constexpr int kNoIndex = -1;

  char base = 'p';
  int index = kNoIndex;

  VarName() = default;
  VarName(char b, int i = kNoIndex) : base(b), index(i) {}

  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName& l, const VarName& r) {
    if (auto c = l.base <=> r.base; c != 0) return c;
    return l.index <=> r.index;
  }

  std::string str() const;

  /// Parses `a`, `a0`, `e12`; throws std::invalid_argument otherwise.
  static VarName parse(const std::string& text);
};

// ── AST ──────────────────────────────────────────────────────────────────────

enum class Conn : std::uint8_t {
  Bottom,  // F
  Top,     // T
  Var,     // propositional variable
  Neg,     // ~A
  And,     // A & B
  Or,      // A | B
  Imp,     // A -> B
  Box,     // []A
  Dia,     // <>A
  Rhd,     // A |> B
};

class Formula;
using Fptr = std::shared_ptr<const Formula>;

/// Immutable formula node.  Construct through the factory functions below.
class Formula {
 public:
  Formula(Conn k, VarName v, Fptr l, Fptr r)
      : kind_(k), var_(v), lhs_(std::move(l)), rhs_(std::move(r)) {}

  Conn kind() const { return kind_; }
  const VarName& var() const { return var_; }     // Var only
  const Fptr& lhs() const { return lhs_; }        // first child, if any
  const Fptr& rhs() const { return rhs_; }        // second child, if any

 private:
  Conn kind_;
  VarName var_;
  Fptr lhs_;
  Fptr rhs_;
};

// Factory functions (names avoid the `and`/`or`/`not` alternative tokens).
Fptr bot();
Fptr top();
Fptr var(VarName v);
Fptr var(char base, int index = VarName::kNoIndex);
Fptr neg(Fptr a);
Fptr conj(Fptr a, Fptr b);
Fptr disj(Fptr a, Fptr b);
Fptr imp(Fptr a, Fptr b);
Fptr box(Fptr a);
Fptr dia(Fptr a);
Fptr rhd(Fptr a, Fptr b);

/// Deep structural equality.
bool equal(const Fptr& a, const Fptr& b);

// ── Concrete syntax ──────────────────────────────────────────────────────────

/// Thrown on malformed input; `position` is the byte offset into the text.
struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what), position(pos) {}
  std::size_t position;
};

/// Parses the concrete syntax.  Tokens: `T` `F` `~` `&` `|` `->` `[]` `<>`
/// `|>`, identifiers [a-z][0-9]*, parentheses.  The UTF-8 aliases
/// ¬ ∧ ∨ → □ ◇ ▷ ⊤ ⊥ are accepted on input.  Throws ParseError.
Fptr parse(const std::string& text);

/// Emits minimal-parenthesis ASCII text; parse(print(f)) == f.
std::string print(const Fptr& f);

// ── Rewriting ────────────────────────────────────────────────────────────────

/// Simultaneous variable substitution; replacements are not re-scanned.
Fptr substitute(const Fptr& f, const std::map<VarName, Fptr>& m);

/// Thrown by replace_all when two patterns could overlap in the target:
/// one pattern occurs inside the other, and the larger one occurs in f.
struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Replaces every subtree of f structurally equal to some pattern by the
/// paired replacement, simultaneously, in one top-down pass (inserted
/// material is never re-matched).  Patterns must be pairwise distinct and
/// their occurrences in f non-overlapping; violations throw OverlapError
/// naming the two patterns.
Fptr replace_all(const Fptr& f,
                 const std::vector<std::pair<Fptr, Fptr>>& pairs);

/// The set of variables occurring in f.
std::set<VarName> vars(const Fptr& f);

/// Flattens every &-chain to a canonical left-associated spine (operand
/// order preserved; associativity only).
Fptr flatten_and(const Fptr& f);

/// Structural equality modulo &-associativity.
bool equal_mod_and(const Fptr& a, const Fptr& b);

}  // namespace il

#endif  // IL_FORMULA_HPP
