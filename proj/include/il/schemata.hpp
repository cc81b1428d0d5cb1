// ============================================================================
// schemata.hpp — generators for the two principle families and the named
// fixed principles
// ============================================================================
//
// Two infinite families are generated:
//
//   slim(n)   — over atoms a_i, b_i, c_i, e_i.  slim(0) is the base
//               principle; slim(n) arises from slim(n-1) solely by a
//               simultaneous subtree replacement (replace_all), alternating
//               an odd-step and an even-step pair list.
//   broad(n)  — over atoms a, b, c, d_1..d_n, built from the auxiliary
//               formulas broad_u(k).
//
// slim_xyz(n) exposes the components (X_n, Y_n, Z_n) of the companion
// presentation slim_tilde(n) = X_n -> Y_n |> Z_n, which equals slim(2n) up
// to a variable renaming and &-flattening (see renaming_map).
//
// fixed(name) produces the classical axioms over p, q, r and the named
// standalone principles over a, b, c, d, e, f.
//
// Design notes:
//   - Atom naming is frozen so regression fixtures are byte-stable.
//   - &-chains are built left-associatively in display order; cross-
//     generator equality checks go through equal_mod_and.
// ============================================================================

#ifndef IL_SCHEMATA_HPP
#define IL_SCHEMATA_HPP

#include <string>
#include <tuple>

#include "il/formula.hpp"

namespace il {

// ── Schema identifiers ───────────────────────────────────────────────────────

enum class FixedName : std::uint8_t {
  L1, L2, L3, J1, J2, J3, J4, J5,   // core axiom schemes (atoms p, q, r)
  P, M,                             // persistence / Montagna (atoms p, q, r)
  W, Wstar, P0, Rprin, Combined, PDia,  // standalone principles (a..f)
};

/// One identifier for every generator this module offers.
struct SchemaId {
  enum class Family : std::uint8_t {
    SlimR,      // slim(n),        n >= 0
    SlimX,      // X component,    n >= 0
    SlimY,      // Y component,    n >= 0
    SlimZ,      // Z component,    n >= 0
    SlimTilde,  // slim_tilde(n),  n >= 0
    BroadU,     // broad_u(n),     n >= 1
    BroadR,     // broad(n),       n >= 0
    Fixed,      // fixed(name)
  };

  Family family = Family::Fixed;
  int n = 0;
  FixedName name = FixedName::L1;

  /// Parses CLI spellings: "slim 2", "slim-x 1", "slim-tilde 0",
  /// "broad 1", "broad-u 2", "fixed W".  Throws std::invalid_argument.
  static SchemaId parse(const std::string& family, const std::string& arg);

  std::string str() const;
};

/// Instantiates any SchemaId (validates the index bounds).
Fptr generate(const SchemaId& id);

// ── Generators ───────────────────────────────────────────────────────────────

/// n-th member of the replacement-generated family; requires n >= 0.
Fptr slim(int n);

/// Components (X_n, Y_n, Z_n); requires n >= 0.
std::tuple<Fptr, Fptr, Fptr> slim_xyz(int n);

/// The shared value of the index -1 convention (X, Z, and the `a` atom all
/// degenerate to verum one step below the base case).
Fptr slim_xyz_base();

/// X_n -> Y_n |> Z_n; requires n >= 0.
Fptr slim_tilde(int n);

/// The variable renaming under which slim_tilde(k) turns into slim(2k)
/// modulo &-flattening: a_i/b_i/c_i map to index k-i, e_i to index k+1-i.
std::map<VarName, Fptr> renaming_map(int k);

/// Auxiliary formula family over atoms c, d_1..d_n; requires n >= 1.
Fptr broad_u(int n);

/// n-th broad principle over atoms a, b, c, d_1..d_n; requires n >= 0.
Fptr broad(int n);

/// Named axiom or principle.
Fptr fixed(FixedName name);

/// Spelling used by the CLI and reports ("L1", "Wstar", ...).
std::string fixed_name_str(FixedName name);

/// Inverse of fixed_name_str; throws std::invalid_argument.
FixedName parse_fixed_name(const std::string& s);

/// The eight modal axiom schemes of the core logic in declaration order
/// (L1..L3, J1..J5); the soundness sweeps add a propositional tautology
/// scheme on top, matching the core logic's axiomatization (tautologies
/// plus these eight).
const std::vector<FixedName>& core_axioms();

}  // namespace il

#endif  // IL_SCHEMATA_HPP
