// ============================================================================
// acceptance.cpp — end-to-end acceptance checklist
// ============================================================================
//
// Runs the eleven acceptance criteria and prints one PASS/FAIL line per
// criterion.  Invoke with a criterion number (1..11) to run just that one;
// with no arguments all criteria run.  Exit code 0 iff everything passed.
// ============================================================================

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "il/conditions.hpp"
#include "il/formula.hpp"
#include "il/frame.hpp"
#include "il/harness.hpp"
#include "il/schemata.hpp"
#include "il/semantics.hpp"
#include "test_util.hpp"

using namespace il;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;  // shown after the verdict when nonempty

  void fail(const std::string& why) {
    pass = false;
    if (note.empty()) note = why;
  }
};

void visit_frames(int max_size, bool dedup,
                  const std::function<bool(const Frame&)>& fn) {
  for (int n = 1; n <= max_size; ++n) for_each_frame(n, dedup, fn);
}

// ── 1: every hand-written display regenerates ───────────────────────────────

Outcome criterion1() {
  Outcome out;
  std::vector<std::pair<std::string, Fptr>> items;
  for (int n = 0; n <= 4; ++n)
    items.emplace_back("slim" + std::to_string(n) + ".txt", slim(n));
  for (int k = 0; k <= 2; ++k)
    items.emplace_back("slim_tilde" + std::to_string(k) + ".txt",
                       slim_tilde(k));
  for (int n = 0; n <= 3; ++n)
    items.emplace_back("broad" + std::to_string(n) + ".txt", broad(n));
  for (int n = 1; n <= 3; ++n)
    items.emplace_back("broad_u" + std::to_string(n) + ".txt", broad_u(n));
  for (const FixedName name :
       {FixedName::L1, FixedName::L2, FixedName::L3, FixedName::J1,
        FixedName::J2, FixedName::J3, FixedName::J4, FixedName::J5,
        FixedName::P, FixedName::M, FixedName::W, FixedName::Wstar,
        FixedName::P0, FixedName::Rprin, FixedName::Combined,
        FixedName::PDia})
    items.emplace_back("fixed_" + fixed_name_str(name) + ".txt", fixed(name));

  if (items.size() != 31) out.fail("expected 31 fixture files");
  for (const auto& [file, generated] : items) {
    Fptr want;
    try {
      want = parse(testutil::read_fixture(file));
    } catch (const std::exception& e) {
      out.fail(file + ": " + e.what());
      continue;
    }
    if (!equal_mod_and(generated, want))
      out.fail(file + ": generator disagrees with the stored display");
    if (!equal(parse(print(generated)), generated))
      out.fail(file + ": print/parse round trip broke");
  }
  out.note = out.pass ? "31 displays checked" : out.note;
  return out;
}

// ── 2: index reversal maps the compressed family onto the plain one ─────────

Outcome criterion2() {
  Outcome out;
  for (int k = 0; k <= 4; ++k)
    if (!equal_mod_and(slim(2 * k),
                       substitute(slim_tilde(k), renaming_map(k))))
      out.fail("identity fails at k=" + std::to_string(k));
  return out;
}

// ── 3: the nine axiom schemes are valid on every frame up to 4 worlds ───────

Outcome criterion3() {
  Outcome out;
  std::vector<std::pair<std::string, Fptr>> schemes;
  // One representative of the tautology scheme plus the eight modal axioms.
  schemes.emplace_back("taut", parse("((a -> b) -> a) -> a"));
  for (const FixedName name : core_axioms())
    schemes.emplace_back(fixed_name_str(name), fixed(name));
  if (schemes.size() != 9) out.fail("expected nine schemes");

  std::uint64_t frames = 0;
  visit_frames(4, /*dedup=*/false, [&](const Frame& fr) {
    ++frames;
    for (const auto& [name, f] : schemes)
      if (!std::holds_alternative<Valid>(frame_valid(fr, f, Exhaustive{}))) {
        out.fail(name + " refuted on " + frame_hash_hex(fr));
        return false;
      }
    return true;
  });
  if (frames != 1479) out.fail("expected 1479 labeled frames");
  out.note = out.pass ? "9 schemes x 1479 frames" : out.note;
  return out;
}

// ── 4: base-level condition ⟺ base principle validity ──────────────────────

Outcome criterion4() {
  Outcome out;
  const Fptr principle = slim_tilde(0);
  visit_frames(4, /*dedup=*/false, [&](const Frame& fr) {
    const bool cond = !slim_condition(fr, 0).has_value();
    const bool valid =
        std::holds_alternative<Valid>(frame_valid(fr, principle, Exhaustive{}));
    if (cond != valid) {
      out.fail("biconditional fails on " + frame_hash_hex(fr));
      return false;
    }
    return true;
  });
  return out;
}

// ── 5: level-2 failures produce verified refutations of the k=1 member ─────

Outcome criterion5() {
  Outcome out;
  std::uint64_t primary = 0, fallback = 0, clean = 0;
  visit_frames(5, /*dedup=*/true, [&](const Frame& fr) {
    const auto failure = slim_condition(fr, 2);
    if (failure.has_value()) {
      try {
        const Witness w = slim_witness_valuation(fr, 1, *failure);
        if (force(fr, w.v, w.world, slim_tilde(1))) {
          out.fail("witness fails to refute on " + frame_hash_hex(fr));
          return false;
        }
        (w.path == Witness::Path::Primary ? primary : fallback) += 1;
      } catch (const std::exception& e) {
        out.fail(std::string("construction error: ") + e.what() + " on " +
                 frame_hash_hex(fr));
        return false;
      }
    } else {
      const Verdict v = frame_valid(fr, slim_tilde(1), Sampled{10000, 0});
      if (!std::holds_alternative<SampledClean>(v)) {
        out.fail("sampling found a countermodel on " + frame_hash_hex(fr));
        return false;
      }
      ++clean;
    }
    return true;
  });
  std::ostringstream note;
  note << primary << " primary, " << fallback << " fallback, " << clean
       << " sampled clean";
  if (out.pass) out.note = note.str();
  return out;
}

// ── 6: chain conditions ⟺ principle validity for levels 1 and 2 ────────────

Outcome criterion6() {
  Outcome out;
  for (int level = 1; level <= 2 && out.pass; ++level) {
    const Fptr principle = broad(level);
    visit_frames(4, /*dedup=*/false, [&](const Frame& fr) {
      const bool cond = !broad_condition(fr, level).has_value();
      const bool valid = std::holds_alternative<Valid>(
          frame_valid(fr, principle, Exhaustive{}));
      if (cond != valid) {
        out.fail("level " + std::to_string(level) + " fails on " +
                 frame_hash_hex(fr));
        return false;
      }
      return true;
    });
  }
  return out;
}

// ── 7: separation witnesses at their minimal sizes ──────────────────────────

Outcome criterion7() {
  Outcome out;
  const std::array<std::array<int, 3>, 4> cases = {{
      {0, 1, 4},  // level 0 holds, level 1 fails, minimal at 4 worlds
      {1, 0, 4},
      {1, 2, 6},
      {2, 1, 4},
  }};
  std::uint64_t scanned = 0;
  for (const auto& [n, m, min_size] : cases) {
    const SeparationOutcome res = run_separate(n, m, 7);
    const std::string tag =
        "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    scanned += res.frames_scanned;
    if (!res.cert.has_value()) {
      out.fail(tag + ": nothing found up to size 7");
      continue;
    }
    const SeparationCertificate& cert = *res.cert;
    if (cert.frame.n != min_size)
      out.fail(tag + ": found at size " + std::to_string(cert.frame.n) +
               ", expected " + std::to_string(min_size));
    if (!validate(cert.frame).empty()) out.fail(tag + ": frame is malformed");
    if (broad_condition(cert.frame, n).has_value())
      out.fail(tag + ": the level that must hold fails");
    const auto fail_m = broad_condition(cert.frame, m);
    if (!fail_m.has_value() || !(*fail_m == cert.failure))
      out.fail(tag + ": recorded failure does not replay");
    if (force(cert.frame, cert.v, cert.world, broad(m)))
      out.fail(tag + ": valuation does not refute the failing level");
    if (!no_countermodel(frame_valid(cert.frame, broad(n), Exhaustive{30})))
      out.fail(tag + ": the holding level's principle is refutable");
    try {
      const CountermodelDoc doc = parse_countermodel(serialize_certificate(cert));
      if (doc.frame != cert.frame || doc.v != cert.v || doc.world != cert.world)
        out.fail(tag + ": certificate does not round trip");
    } catch (const std::exception& e) {
      out.fail(tag + ": certificate text rejected: " + std::string(e.what()));
    }
  }
  if (out.pass)
    out.note = "sizes 4, 4, 6, 4; " + std::to_string(scanned) +
               " candidate frames scanned";
  return out;
}

// ── 8: conditions are downward closed in the level ──────────────────────────

Outcome criterion8() {
  Outcome out;
  visit_frames(4, /*dedup=*/false, [&](const Frame& fr) {
    std::array<bool, 5> holds{};
    for (int j = 0; j <= 4; ++j)
      holds[static_cast<std::size_t>(j)] = !slim_condition(fr, j).has_value();
    for (int j = 0; j < 4; ++j)
      if (holds[static_cast<std::size_t>(j) + 1] &&
          !holds[static_cast<std::size_t>(j)]) {
        out.fail("whole-frame closure fails at level " + std::to_string(j) +
                 " on " + frame_hash_hex(fr));
        return false;
      }
    for (int x = 0; x < fr.n; ++x)
      for (int y = 0; y < fr.n; ++y)
        for (int z = 0; z < fr.n; ++z)
          for (int j = 0; j < 4; ++j)
            if (g_holds(fr, j + 1, x, y, z) && !g_holds(fr, j, x, y, z)) {
              out.fail("pointwise closure fails at level " +
                       std::to_string(j) + " on " + frame_hash_hex(fr));
              return false;
            }
    return true;
  });
  return out;
}

// ── 9: persistence and growth conditions ⟺ their principles ────────────────

Outcome criterion9() {
  Outcome out;
  const Fptr p_principle = fixed(FixedName::P);
  const Fptr m_principle = fixed(FixedName::M);
  visit_frames(4, /*dedup=*/false, [&](const Frame& fr) {
    const bool p_cond = !pm_condition(fr, PM::P).has_value();
    const bool p_valid = std::holds_alternative<Valid>(
        frame_valid(fr, p_principle, Exhaustive{}));
    if (p_cond != p_valid) {
      out.fail("persistence fails on " + frame_hash_hex(fr));
      return false;
    }
    const bool m_cond = !pm_condition(fr, PM::M).has_value();
    const bool m_valid = std::holds_alternative<Valid>(
        frame_valid(fr, m_principle, Exhaustive{}));
    if (m_cond != m_valid) {
      out.fail("growth fails on " + frame_hash_hex(fr));
      return false;
    }
    return true;
  });
  return out;
}

// ── 10: enumeration counts match an independent oracle ──────────────────────

Outcome criterion10() {
  Outcome out;
  if (count_frames(2, false) != 3) out.fail("two-world labeled count is off");

  // Filter-all oracle on three worlds: every R bitmask, every S built from
  // subsets of the optional pairs, kept iff validate() accepts it.
  std::uint64_t oracle = 0;
  for (unsigned rbits = 0; rbits < (1u << 9); ++rbits) {
    Frame base(3);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        if (rbits >> (3 * x + y) & 1u) base.add_r(x, y);
    std::vector<std::array<int, 3>> opt;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z)
          if (y != z && base.r_has(x, y) && base.r_has(x, z))
            opt.push_back({x, y, z});
    for (unsigned pick = 0; pick < (1u << opt.size()); ++pick) {
      Frame f = base;
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          if (f.r_has(x, y)) f.add_s(x, y, y);
      for (std::size_t i = 0; i < opt.size(); ++i)
        if (pick >> i & 1u) f.add_s(opt[i][0], opt[i][1], opt[i][2]);
      if (validate(f).empty()) ++oracle;
    }
  }
  if (oracle != 34)
    out.fail("oracle count " + std::to_string(oracle) + ", expected 34");
  if (count_frames(3, false) != oracle)
    out.fail("enumerator disagrees with the oracle");
  if (count_frames(3, true) != 8)
    out.fail("three-world class count is off");
  out.note = out.pass ? "labeled 3/34, classes 8" : out.note;
  return out;
}

// ── 11: randomized round trips and the substitution property ────────────────

Outcome criterion11() {
  Outcome out;
  std::mt19937_64 rng(1111);
  for (int trial = 0; trial < 1000; ++trial) {
    const Fptr f = testutil::random_formula(rng, 6);
    if (!equal(parse(print(f)), f)) {
      out.fail("round trip broke: " + print(f));
      return out;
    }
  }

  std::vector<Frame> frames;
  for (int n = 1; n <= 3; ++n)
    for_each_frame(n, false, [&](const Frame& fr) {
      frames.push_back(fr);
      return true;
    });
  const std::vector<VarName> pool = {VarName('p'), VarName('q'), VarName('r'),
                                     VarName('a', 0), VarName('b', 0),
                                     VarName('c', 1), VarName('d', 2),
                                     VarName('e', 1)};
  std::uniform_int_distribution<std::size_t> pick_var(0, pool.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Frame& fr = frames[static_cast<std::size_t>(trial) % frames.size()];
    const Fptr f = testutil::random_formula(rng, 4);
    const Fptr g = testutil::random_formula(rng, 3);
    const VarName p = pool[pick_var(rng)];
    Valuation v;
    const std::uint32_t full = (1u << fr.n) - 1u;
    for (const VarName& name : pool)
      v.set(name, static_cast<std::uint32_t>(rng()) & full);
    Valuation revalued = v;
    std::uint32_t g_truth = 0;
    for (int w = 0; w < fr.n; ++w)
      if (force(fr, v, w, g)) g_truth |= 1u << w;
    revalued.set(p, g_truth);
    const Fptr substituted = substitute(f, {{p, g}});
    for (int w = 0; w < fr.n; ++w)
      if (force(fr, v, w, substituted) != force(fr, revalued, w, f)) {
        out.fail("substitution property broke on trial " +
                 std::to_string(trial));
        return out;
      }
  }
  out.note = "1000 round trips, 500 substitution instances";
  return out;
}

// ── Runner ───────────────────────────────────────────────────────────────────

struct Entry {
  int id;
  const char* description;
  double limit_seconds;  // 0 = no explicit limit
  Outcome (*fn)();
};

const Entry kEntries[] = {
    {1, "stored principle displays regenerate from the schema builders", 1.0,
     criterion1},
    {2, "index reversal carries the compressed family onto the plain family",
     0, criterion2},
    {3, "all nine axiom schemes are valid on every frame up to 4 worlds",
     300.0, criterion3},
    {4, "base condition matches base principle validity up to 4 worlds", 0,
     criterion4},
    {5, "level-2 failures yield verified refutations up to 5 worlds", 0,
     criterion5},
    {6, "chain conditions match principle validity for levels 1 and 2",
     1800.0, criterion6},
    {7, "separation witnesses found and re-verified at minimal sizes", 0,
     criterion7},
    {8, "conditions are downward closed in the level", 0, criterion8},
    {9, "persistence and growth conditions match their principles", 0,
     criterion9},
    {10, "frame enumeration agrees with a filter-all oracle", 0, criterion10},
    {11, "randomized round trips and the substitution property", 0,
     criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) {
    selected = std::atoi(argv[1]);
    if (selected < 1 || selected > 11) {
      std::cerr << "usage: " << argv[0] << " [criterion 1..11]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const Entry& entry : kEntries) {
    if (selected != 0 && entry.id != selected) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entry.fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("unexpected error: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (entry.limit_seconds > 0 && secs > entry.limit_seconds) {
      out.pass = false;
      if (out.note.empty())
        out.note = "time limit " + std::to_string(entry.limit_seconds) +
                   "s exceeded";
    }
    std::ostringstream line;
    line << "criterion " << entry.id << ": " << (out.pass ? "PASS" : "FAIL")
         << " - " << entry.description;
    if (!out.note.empty()) line << " (" << out.note << ")";
    line << " [" << std::fixed << std::setprecision(2) << secs << "s]";
    std::cout << line.str() << std::endl;
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}
