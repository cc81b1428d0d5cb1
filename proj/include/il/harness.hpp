// ============================================================================
// harness.hpp — reproducible experiment sweeps over enumerated frames
// ============================================================================
//
// Each run produces a Report: a config line (version, enumeration size,
// dedup, strategy — everything needed to reproduce the run), one row per
// frame in frame-hash order, serialized certificates for every witness a
// row references, and a stable one-line summary.  A nonzero mismatch count
// means an expected equivalence failed on a concrete frame; the offending
// frame is serialized into the row's certificate slot for inspection.
// ============================================================================

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "il/conditions.hpp"
#include "il/frame.hpp"
#include "il/semantics.hpp"

namespace il {

// Everything a report needs to be reproduced.  `size` bounds the world
// count of the enumeration sweep (all sizes 1..size are visited); `dedup`
// collapses isomorphic frames to their canonical representative.
struct RunConfig {
  int size = 4;
  bool dedup = true;
  Strategy strategy = Exhaustive{};

  std::string str() const;  // stable one-line rendering
};

struct ReportRow {
  std::string frame_hash;                  // or "k=N" for syntactic rows
  std::string detail;                      // stable human-readable verdicts
  bool mismatch = false;
  std::optional<std::string> certificate;  // serialized witness/diagnostic
};

struct Report {
  std::string experiment;
  RunConfig config;
  std::vector<ReportRow> rows;  // frame sweeps: sorted by frame hash
  std::uint64_t frames = 0;
  std::uint64_t mismatches = 0;

  std::string summary() const;  // "summary frames=N mismatches=M"
  std::string str() const;      // header, rows, certificates, summary
};

// ── Correspondence sweeps ────────────────────────────────────────────────────

enum class CorrespondFamily : std::uint8_t { Slim, Broad, P, M };

std::string correspond_family_str(CorrespondFamily fam);
std::optional<CorrespondFamily> parse_correspond_family(const std::string& s);

// For every enumerated frame of 1..cfg.size worlds, evaluates the
// first-order condition of the chosen principle:
//   slim n   — condition level 2n versus the closed-form principle for n
//   broad n  — chain condition level n versus the n-th broad principle
//   P, M     — the classical quantifier conditions versus the principles
// When the condition fails, a refuting valuation is built and re-verified
// by forcing (slim/broad use the recursive construction; P/M search with
// cfg.strategy); when it holds, frame validity is checked with
// cfg.strategy.  Any disagreement becomes a mismatch row.  Throws
// std::invalid_argument on bad arguments and propagates BudgetError.
Report run_correspond(CorrespondFamily fam, int n, const RunConfig& cfg);

// ── Separation search ────────────────────────────────────────────────────────

struct SeparationOutcome {
  std::optional<SeparationCertificate> cert;  // empty: search exhausted
  int searched_max = 0;          // largest size fully searched
  std::uint64_t frames_scanned = 0;
};

// First frame — sizes ascending, labeled enumeration order — on which the
// level-n chain condition holds while the level-m one fails, together with
// a verified valuation refuting the m-th broad principle.  R-shapes whose
// longest chain is shorter than m+3 worlds cannot exhibit the level-m
// failure and are skipped wholesale.  Requires n, m >= 0 and n != m.
SeparationOutcome run_separate(int n, int m, int max_size);

// ── Hierarchy checks ─────────────────────────────────────────────────────────

// Per enumerated frame: each slim condition level up to max_n is
// evaluated and every level n+1 must imply level n.  On frames with at
// most three worlds the implication between validity of the generated
// principles at steps 1 and 0 is additionally checked exhaustively.
Report run_hierarchy(int max_n, const RunConfig& cfg);

// Purely syntactic: for k = 0..max_k the 2k-th generated principle must
// equal the renamed closed form modulo conjunction grouping.  Rows are
// labeled "k=N" and kept in k order.
Report run_hierarchy_syntactic(int max_k);

}  // namespace il
