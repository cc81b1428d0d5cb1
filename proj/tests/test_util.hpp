// Shared test helpers: fixture loading, deterministic random formulas, and
// three hand-built frames with known, hand-computed condition failures.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "il/formula.hpp"
#include "il/frame.hpp"

namespace testutil {

// One printed formula per file; trailing whitespace stripped.
inline std::string read_fixture(const std::string& name) {
  const std::string path = std::string(IL_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' '))
    text.pop_back();
  return text;
}

// Deterministic random formula over a pool of 8 variables, depth-bounded.
inline il::Fptr random_formula(std::mt19937_64& rng, int depth) {
  using namespace il;
  static const std::vector<VarName> pool = {
      VarName('p'),      VarName('q'),      VarName('r'),
      VarName('a', 0),   VarName('b', 0),   VarName('c', 1),
      VarName('d', 2),   VarName('e', 1)};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 11);
  switch (pick(rng)) {
    case 0: return bot();
    case 1: return top();
    case 2:
    case 3: {
      std::uniform_int_distribution<std::size_t> v(0, pool.size() - 1);
      return var(pool[v(rng)]);
    }
    case 4: return neg(random_formula(rng, depth - 1));
    case 5: return box(random_formula(rng, depth - 1));
    case 6: return dia(random_formula(rng, depth - 1));
    case 7:
      return conj(random_formula(rng, depth - 1),
                  random_formula(rng, depth - 1));
    case 8:
      return disj(random_formula(rng, depth - 1),
                  random_formula(rng, depth - 1));
    case 9:
      return imp(random_formula(rng, depth - 1),
                 random_formula(rng, depth - 1));
    default:
      return rhd(random_formula(rng, depth - 1),
                 random_formula(rng, depth - 1));
  }
}

// Five-world frame (w=0, x0=1, y0=2, x1=3, y1=4) whose base slim
// condition fails at (w,x,y,z) = (0,1,2,3) because 3R4 while 2 has no
// S_1-arrow to 4; likewise the base broad condition fails on the chain
// (0,1,2,3) with u=4.
inline il::Frame base_failure_frame() {
  return il::parse_frame(
      "worlds 5\n"
      "R 0>1 0>2 0>3 0>4 1>2 3>4\n"
      "S 0: 1~2 1~3 1~4 2~3 2~4 3~4\n");
}

// Seven-world frame (w=0, x0=1, y0=2, x1=3, y1=4, x2=5, y2=6) whose slim
// condition first fails at level 2: failure at (0,1,2,3) with descent
// trace (u=4, v=5), (a=6) — 5R6 but 4 has no S_3-arrow to 6.  The chosen
// S-arrows force the extra R-edges 1>4 and 1>5 (S_1 lives on 1's
// successor set).
inline il::Frame slim_descent_frame() {
  return il::parse_frame(
      "worlds 7\n"
      "R 0>1 0>2 0>3 0>4 0>5 0>6 1>2 1>4 1>5 1>6 3>4 5>6\n"
      "S 0: 1~2 1~3 1~4 1~5 1~6 2~3 2~4 3~4 5~6\n"
      "S 1: 2~4 4~5 2~5 4~6 2~6 5~6\n");
}

// Seven-world frame (x2=0, x1=1, x0=2, y0=3, y1=4, y2=5, z=6) carrying a
// full level-1 broad chain: the level-1 broad condition fails on the chain
// xs=(0,1,2), ys=(3,4,5) with u=6 — 5R6 but 3 has no S_2-arrow to 6.  The
// S-arrows force the extra R-edges 1>4 and 0>5.
inline il::Frame broad_chain_frame() {
  return il::parse_frame(
      "worlds 7\n"
      "R 0>1 0>2 0>3 0>4 0>5 0>6 1>2 1>3 1>4 2>3 5>6\n"
      "S 0: 1~2 1~3 1~4 2~3 4~5 4~6 5~6 1~5 1~6\n"
      "S 1: 2~3 3~4 2~4\n");
}

}  // namespace testutil
