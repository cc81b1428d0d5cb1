// ============================================================================
// conditions.hpp — first-order frame conditions and witness constructions
// ============================================================================
//
// Two recursive families of frame conditions are evaluated here, together
// with the classical conditions for the persistence and Montagna
// principles, and constructors that turn a condition failure into a
// concrete valuation refuting the matching principle (re-verified by the
// forcing evaluator before being returned).
//
// Slim family (ternary recursion):
//   𝒢₀(x,y,z)     ⟺  ∀u (zRu ⇒ yS_xu)
//   𝒢_{n+1}(x,y,z) ⟺  ∀u (zRu ⇒ yS_xu ∧ ∀v (uS_xv ⇒ 𝒢ₙ(z,u,v)))
//   ℱₙ            ⟺  ∀w,x,y,z (wRx ∧ xRy ∧ yS_wz ⇒ 𝒢ₙ(x,y,z))
//
// Broad family (chain recursion):
//   ℬ₀(x₁,x₀,y₀,y₁)            ⟺  x₁Rx₀ ∧ x₀Ry₀ ∧ y₀S_{x₁}y₁
//   ℬ_{n+1}(x_{n+2},x₀,y₀,y_{n+2}) ⟺  ∃x_{n+1},y_{n+1} (x_{n+2}Rx_{n+1}
//                                     ∧ ℬₙ(x_{n+1},x₀,y₀,y_{n+1})
//                                     ∧ y_{n+1}S_{x_{n+2}}y_{n+2})
//   ℱⁿ            ⟺  ∀ (ℬₙ(x_{n+1},x₀,y₀,y_{n+1}) ⇒ ∀u (y_{n+1}Ru ⇒ y₀S_{x₀}u))
//
// S-membership is always tested on stored pairs: a required pair that
// falls outside x↑ × x↑ simply fails the condition; it is never a frame
// error, so the evaluators are total on all well-formed frames.
// ============================================================================

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "il/formula.hpp"
#include "il/frame.hpp"
#include "il/semantics.hpp"

namespace il {

// ── Slim conditions ──────────────────────────────────────────────────────────

// One step of a failure trace descending through the 𝒢 recursion.  At the
// failing entry only u is present (the clause yS_xu is violated); an entry
// with v present descends one level with arguments (x,y,z) → (z,u,v).
// Every trace therefore ends in an entry without v.
struct GStep {
  int u = -1;
  std::optional<int> v;

  bool operator==(const GStep&) const = default;
};
using GTrace = std::vector<GStep>;

// nullopt when 𝒢ₙ(x,y,z) holds; otherwise the first failure trace in
// deterministic scan order (u ascending; the yS_xu clause checked before
// descending with v ascending).
std::optional<GTrace> g_check(const Frame& fr, int n, int x, int y, int z);
inline bool g_holds(const Frame& fr, int n, int x, int y, int z) {
  return !g_check(fr, n, x, y, z).has_value();
}

struct SlimFailure {
  int w = -1, x = -1, y = -1, z = -1;  // wRx, xRy, yS_wz
  int level = 0;                       // the failing condition index n
  GTrace trace;                        // certifies ¬𝒢_level(x,y,z)

  bool operator==(const SlimFailure&) const = default;
};

// nullopt when ℱₙ holds; otherwise the first failing quadruple in
// lexicographic (w,x,y,z) order with its trace.
std::optional<SlimFailure> slim_condition(const Frame& fr, int n);

// ── Broad conditions ─────────────────────────────────────────────────────────

struct BroadChain {
  int n = 0;
  std::vector<int> xs;  // x_{n+1}, …, x_0   (head first, length n+2)
  std::vector<int> ys;  // y_0, …, y_{n+1}   (length n+2)

  int head() const { return xs.front(); }    // x_{n+1}
  int x0() const { return xs.back(); }
  int y0() const { return ys.front(); }
  int y_top() const { return ys.back(); }    // y_{n+1}

  bool operator==(const BroadChain&) const = default;
};

// nullopt when ℬₙ(x_hi, x0, y0, y_hi) fails; otherwise the first full
// chain of intermediate witnesses in deterministic order.
std::optional<BroadChain> b_holds(const Frame& fr, int n, int x_hi, int x0,
                                  int y0, int y_hi);

struct BroadFailure {
  BroadChain chain;
  int u = -1;  // y_{n+1}Ru but not y₀S_{x₀}u

  bool operator==(const BroadFailure&) const = default;
};

// nullopt when ℱⁿ holds; otherwise the first failing chain plus offending u.
std::optional<BroadFailure> broad_condition(const Frame& fr, int n);

// ── P and M conditions ───────────────────────────────────────────────────────

enum class PM : std::uint8_t { P, M };

// P:  xRy ∧ yRz ∧ zS_xu ⇒ zS_yu        (witness (x,y,z,u) on failure)
// M:  yS_xz ∧ zRu ⇒ yRu                (witness (x,y,z,u) on failure)
std::optional<std::array<int, 4>> pm_condition(const Frame& fr, PM which);

// ── Witness constructions ────────────────────────────────────────────────────

// A refuting valuation plus the world where the principle fails, with the
// construction path that produced it.  Primary follows the recursive
// proof construction; Fallback is a bounded search over valuations whose
// truth sets are drawn from {∅, singletons, R-cones, S_x-cones}.
struct Witness {
  enum class Path : std::uint8_t { Primary, Fallback };
  Valuation v;
  int world = 0;
  Path path = Path::Primary;
};

// From a certified ¬𝒢_{2k} failure (level must equal 2k), a valuation
// refuting slim_tilde(k) at failure.w.  Throws std::invalid_argument when
// the failure does not replay on the frame; throws std::runtime_error if
// neither the construction nor the bounded fallback refutes (which would
// indicate a defect in the construction itself).
Witness slim_witness_valuation(const Frame& fr, int k,
                               const SlimFailure& failure);

// From a certified ℬₙ chain that violates ℱⁿ (some u with y_{n+1}Ru and
// not y₀S_{x₀}u must exist), a valuation refuting broad(n) at the chain
// head x_{n+1}.  Error behavior as above.
Witness broad_witness_valuation(const Frame& fr, int n,
                                const BroadChain& chain);

// ── Separation certificates ──────────────────────────────────────────────────

// A frame on which ℱⁿ holds while ℱᵐ fails, with the verified valuation
// refuting broad(m) at `world`.
struct SeparationCertificate {
  Frame frame;
  int n = 0, m = 0;
  BroadFailure failure;
  Valuation v;
  int world = 0;
};

// Claim lines used in serialized certificates.
std::string slim_claim(const SlimFailure& failure);    // "F2 fails at w=.. x=.. y=.. z=.."
std::string broad_claim(const BroadFailure& failure);  // "F^1 fails at x1=.. x0=.. y0=.. y1=.. u=.."

// Countermodel text with a claim header describing the ℱᵐ failure.
std::string serialize_certificate(const SeparationCertificate& cert);

}  // namespace il
