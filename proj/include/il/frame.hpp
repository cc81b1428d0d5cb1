// ============================================================================
// frame.hpp — finite Veltman frames
// ============================================================================
//
// A frame is a finite set of worlds 0..n-1 with
//   * a transitive, irreflexive (hence conversely well-founded) relation R,
//   * for each world x a relation S_x on x's R-successor set
//     x↑ = {y | xRy} that is reflexive on x↑, transitive, and contains
//     R restricted to x↑ × x↑.
//
// Representation: adjacency bitmasks (std::uint32_t), so frames are capped
// at 32 worlds — far beyond what exhaustive enumeration or model checking
// can visit anyway.  `r[x]` is the successor mask of x; `s[x][y]` is the
// mask {z | y S_x z}.  Rows of S outside x↑ are kept empty.
//
// The module also provides well-formedness validation (returning a defect
// list rather than throwing), a line-based text format, FNV-1a hashing of
// the canonical serialization, and exhaustive enumeration of all valid
// frames of a given size, optionally filtered to one representative per
// isomorphism class.
// ============================================================================

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace il {

constexpr int kMaxWorlds = 32;

struct Frame {
  int n = 0;                                   // worlds are 0..n-1
  std::vector<std::uint32_t> r;                // r[x] = {y | xRy}
  std::vector<std::vector<std::uint32_t>> s;   // s[x][y] = {z | y S_x z}

  Frame() = default;
  explicit Frame(int worlds)
      : n(worlds),
        r(static_cast<std::size_t>(worlds), 0),
        s(static_cast<std::size_t>(worlds),
          std::vector<std::uint32_t>(static_cast<std::size_t>(worlds), 0)) {}

  bool r_has(int x, int y) const {
    return (r[static_cast<std::size_t>(x)] >> y) & 1u;
  }
  bool s_has(int x, int y, int z) const {
    return (s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] >> z) &
           1u;
  }
  // Successor mask of x (x↑).
  std::uint32_t upset(int x) const { return r[static_cast<std::size_t>(x)]; }

  void add_r(int x, int y) { r[static_cast<std::size_t>(x)] |= 1u << y; }
  void add_s(int x, int y, int z) {
    s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] |= 1u << z;
  }

  bool operator==(const Frame&) const = default;
};

// One violation of the frame invariants, with the worlds that exhibit it.
struct FrameDefect {
  enum class Kind : std::uint8_t {
    RCycle,          // witness: worlds along a directed R-cycle
    RNotTransitive,  // witness: x,y,z with xRy, yRz, not xRz
    SOutOfDomain,    // witness: x,y,z with y S_x z but y or z outside x↑
    SNotReflexive,   // witness: x,y with y in x↑ but not y S_x y
    SNotTransitive,  // witness: x,y,z,u with yS_xz, zS_xu, not yS_xu
    SMissingR,       // witness: x,y,z with y,z in x↑, yRz, not yS_xz
  };
  Kind kind;
  std::vector<int> witness;

  std::string str() const;
};

// Checks the three frame invariants and returns every violation found
// (empty means the frame is well-formed).  Never throws.
std::vector<FrameDefect> validate(const Frame& f);

// ── Text format ──────────────────────────────────────────────────────────────
//
//   # comment lines and blank lines are ignored
//   worlds N
//   R 0>1 0>2 1>2
//   S 0: 1~1 1~2 2~2
//
// `worlds` must come first.  R pairs may be split over several R lines.
// Reflexive S pairs may be omitted: the parser closes every S_x reflexively
// over x↑.  The serializer always writes the full relation, one S line per
// world with a nonempty successor set.

struct FrameParseError : std::runtime_error {
  std::size_t line;  // 1-based line number of the offending input line
  FrameParseError(std::string msg, std::size_t line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " +
                           std::move(msg)),
        line(line_no) {}
};

Frame parse_frame(const std::string& text);
std::string serialize_frame(const Frame& f);

// FNV-1a (64-bit) over the canonical serialization; stable across runs.
std::uint64_t frame_hash(const Frame& f);
std::string frame_hash_hex(const Frame& f);

// ── Enumeration ──────────────────────────────────────────────────────────────
//
// Visits every valid frame on labeled worlds 0..n-1 exactly once, in a
// deterministic order: transitive irreflexive R first (built by inserting
// worlds one at a time), then for each world independently every reflexive
// transitive S_x on x↑ containing R ∩ (x↑)².  With dedup, a frame is
// visited only when it is the canonical representative of its isomorphism
// class (the lexicographic minimum over all world relabelings), so exactly
// one frame per class survives.
//
// The callback returns false to stop early.  count_frames counts the
// visited frames.

void for_each_frame(int n, bool dedup,
                    const std::function<bool(const Frame&)>& fn);
std::uint64_t count_frames(int n, bool dedup);

// Same enumeration restricted to R-relations accepted by r_ok (called once
// per complete R, before any S choices are generated).  Lets searches skip
// whole R-shapes cheaply — e.g. by longest-chain length — since the
// per-world S choices cannot resurrect a rejected R.
void for_each_frame(int n, bool dedup,
                    const std::function<bool(const std::vector<std::uint32_t>&)>& r_ok,
                    const std::function<bool(const Frame&)>& fn);

// Number of worlds on the longest R-chain (1 for an empty relation).
int longest_r_chain(const std::vector<std::uint32_t>& r);

namespace detail {

// Incremental line parser for the frame text format, shared with the
// countermodel format (which adds its own directives on top).  Feed each
// line to consume(); it returns false when the line is not a frame
// directive so the caller can handle it.  finish() applies the reflexive
// S closure and returns the frame.
class FrameBuilder {
 public:
  // Returns true if the line was a frame directive (or blank/comment);
  // throws FrameParseError on malformed frame directives.
  bool consume(const std::string& line, std::size_t line_no);
  Frame finish(std::size_t last_line) const;
  bool has_header() const { return have_worlds_; }
  int world_count() const { return frame_.n; }

 private:
  Frame frame_;
  bool have_worlds_ = false;
};

}  // namespace detail

}  // namespace il
