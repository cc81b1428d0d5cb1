// ============================================================================
// semantics.hpp — forcing, model validity, frame validity
// ============================================================================
//
// A model is a frame plus a valuation (a set of worlds per propositional
// variable).  The forcing clauses are the usual ones for provability-style
// modal logic extended with the binary modality:
//
//   x ⊩ □A    iff  every R-successor of x forces A
//   x ⊩ ◇A    iff  some R-successor of x forces A
//   x ⊩ A ▷ B iff  for every R-successor y of x forcing A there is a z
//                  with y S_x z and z ⊩ B
//
// Frame validity quantifies over valuations of the variables occurring in
// the formula (others cannot affect forcing).  Two strategies: exhaustive
// enumeration of all 2^(worlds·vars) valuations, guarded by a bit budget,
// or reproducible pseudo-random sampling.  Both report the first
// countermodel found in a deterministic order (lowest valuation, then
// lowest failing world).
// ============================================================================

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "il/formula.hpp"
#include "il/frame.hpp"

namespace il {

// Truth set per variable, as a bitmask over the frame's worlds.  Variables
// absent from the map are false everywhere.
struct Valuation {
  std::map<VarName, std::uint32_t> truth;

  std::uint32_t mask(const VarName& v) const {
    auto it = truth.find(v);
    return it == truth.end() ? 0u : it->second;
  }
  void set(const VarName& v, std::uint32_t worlds) { truth[v] = worlds; }
  bool operator==(const Valuation&) const = default;
};

// ── Strategies and verdicts ──────────────────────────────────────────────────

struct Exhaustive {
  int budget_bits = 28;  // max worlds·vars the full sweep may use
};
struct Sampled {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};
using Strategy = std::variant<Exhaustive, Sampled>;

struct Valid {};
struct Countermodel {
  Valuation v;
  int world = 0;
};
struct SampledClean {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};
using Verdict = std::variant<Valid, Countermodel, SampledClean>;

// True when the verdict carries no countermodel (Valid or SampledClean).
inline bool no_countermodel(const Verdict& v) {
  return !std::holds_alternative<Countermodel>(v);
}
inline const Countermodel* as_countermodel(const Verdict& v) {
  return std::get_if<Countermodel>(&v);
}

// Raised when an exhaustive sweep would exceed its bit budget.
struct BudgetError : std::runtime_error {
  int needed_bits;
  int budget_bits;
  BudgetError(int needed, int budget)
      : std::runtime_error("exhaustive sweep needs " + std::to_string(needed) +
                           " valuation bits but the budget is " +
                           std::to_string(budget) +
                           "; raise --budget or use sampling"),
        needed_bits(needed),
        budget_bits(budget) {}
};

// ── Evaluation ───────────────────────────────────────────────────────────────

// Forcing at a single world (direct recursion; the reference evaluator).
bool force(const Frame& fr, const Valuation& v, int w, const Fptr& f);

// x has a C-assuring successor y:  xRy, y ⊩ C, and every S_x-successor of
// y forces C.
bool assuring(const Frame& fr, const Valuation& v, const Fptr& c, int x, int y);

// True at every world.
bool model_valid(const Frame& fr, const Valuation& v, const Fptr& f);

// Frame validity over all valuations of vars(f) ∪ extra_vars.  extra_vars
// is normally empty; passing known-irrelevant variables widens the swept
// space without changing the verdict, which is exactly what the
// irrelevant-variable invariance check exercises.
Verdict frame_valid(const Frame& fr, const Fptr& f, const Strategy& strategy,
                    const std::vector<VarName>& extra_vars = {});

// ── Countermodel documents ───────────────────────────────────────────────────
//
// Text format: the frame text, then one `V var: w1 w2 ...` line per
// variable, then `fail w` naming the refuted world.  An optional leading
// `claim <text>` line lets certificate writers state what is refuted.

struct CountermodelDoc {
  Frame frame;
  Valuation v;
  int world = 0;
  std::optional<std::string> claim;

  bool operator==(const CountermodelDoc&) const = default;
};

std::string serialize_countermodel(const CountermodelDoc& doc);
CountermodelDoc parse_countermodel(const std::string& text);

}  // namespace il
