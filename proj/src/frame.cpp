// ============================================================================
// frame.cpp — validation, text format, hashing, and enumeration
// ============================================================================

#include "il/frame.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace il {

namespace {

// Lowest set bit as a world index.
int low_bit(std::uint32_t mask) { return std::countr_zero(mask); }

std::string pair_str(int a, char sep, int b) {
  return std::to_string(a) + sep + std::to_string(b);
}

}  // namespace

// ── Validation ───────────────────────────────────────────────────────────────

std::string FrameDefect::str() const {
  const auto& w = witness;
  switch (kind) {
    case Kind::RCycle: {
      std::string s = "R has a cycle:";
      for (int x : w) s += " " + std::to_string(x) + " >";
      s += " " + std::to_string(w.front());
      return s;
    }
    case Kind::RNotTransitive:
      return "R not transitive: " + pair_str(w[0], '>', w[1]) + " and " +
             pair_str(w[1], '>', w[2]) + " but not " + pair_str(w[0], '>', w[2]);
    case Kind::SOutOfDomain:
      return "S_" + std::to_string(w[0]) + " pair " + pair_str(w[1], '~', w[2]) +
             " lies outside the successor set of " + std::to_string(w[0]);
    case Kind::SNotReflexive:
      return "S_" + std::to_string(w[0]) + " not reflexive at " +
             std::to_string(w[1]);
    case Kind::SNotTransitive:
      return "S_" + std::to_string(w[0]) + " not transitive: " +
             pair_str(w[1], '~', w[2]) + " and " + pair_str(w[2], '~', w[3]) +
             " but not " + pair_str(w[1], '~', w[3]);
    case Kind::SMissingR:
      return "S_" + std::to_string(w[0]) + " missing required pair " +
             pair_str(w[1], '~', w[2]) + " (" + pair_str(w[1], '>', w[2]) +
             " is in R)";
  }
  return "unknown defect";
}

std::vector<FrameDefect> validate(const Frame& f) {
  std::vector<FrameDefect> out;
  const int n = f.n;

  // Cycles: reachability closure, then the least world that reaches itself;
  // the witness is a shortest cycle through that world found by BFS.
  std::vector<std::uint32_t> reach = f.r;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if ((reach[static_cast<std::size_t>(x)] >> k) & 1u)
        reach[static_cast<std::size_t>(x)] |= reach[static_cast<std::size_t>(k)];
  for (int x = 0; x < n; ++x) {
    if (!((reach[static_cast<std::size_t>(x)] >> x) & 1u)) continue;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    int closer = -1;  // world whose R-step returns to x
    for (std::uint32_t t = f.upset(x); t && closer < 0; t &= t - 1) {
      int y = low_bit(t);
      if (y == x) {  // impossible for irreflexive input, defensive
        closer = x;
        break;
      }
      seen[static_cast<std::size_t>(y)] = true;
      q.push(y);
    }
    while (!q.empty() && closer < 0) {
      int y = q.front();
      q.pop();
      if (f.r_has(y, x)) {
        closer = y;
        break;
      }
      for (std::uint32_t t = f.upset(y); t; t &= t - 1) {
        int z = low_bit(t);
        if (z == x || seen[static_cast<std::size_t>(z)]) continue;
        seen[static_cast<std::size_t>(z)] = true;
        parent[static_cast<std::size_t>(z)] = y;
        q.push(z);
      }
    }
    std::vector<int> cyc;
    for (int y = closer; y >= 0; y = parent[static_cast<std::size_t>(y)])
      cyc.push_back(y);
    cyc.push_back(x);
    std::reverse(cyc.begin(), cyc.end());
    out.push_back({FrameDefect::Kind::RCycle, std::move(cyc)});
    break;  // one representative cycle is enough
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!f.r_has(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (f.r_has(y, z) && !f.r_has(x, z))
          out.push_back({FrameDefect::Kind::RNotTransitive, {x, y, z}});
    }

  for (int x = 0; x < n; ++x) {
    const std::uint32_t up = f.upset(x);
    for (int y = 0; y < n; ++y)
      for (std::uint32_t t = f.s[static_cast<std::size_t>(x)]
                                [static_cast<std::size_t>(y)];
           t; t &= t - 1) {
        int z = low_bit(t);
        if (!((up >> y) & 1u) || !((up >> z) & 1u))
          out.push_back({FrameDefect::Kind::SOutOfDomain, {x, y, z}});
      }
    for (std::uint32_t t = up; t; t &= t - 1) {
      int y = low_bit(t);
      if (!f.s_has(x, y, y))
        out.push_back({FrameDefect::Kind::SNotReflexive, {x, y}});
    }
    for (int y = 0; y < n; ++y)
      for (std::uint32_t t = f.s[static_cast<std::size_t>(x)]
                                [static_cast<std::size_t>(y)];
           t; t &= t - 1) {
        int z = low_bit(t);
        for (std::uint32_t t2 = f.s[static_cast<std::size_t>(x)]
                                   [static_cast<std::size_t>(z)];
             t2; t2 &= t2 - 1) {
          int u = low_bit(t2);
          if (!f.s_has(x, y, u))
            out.push_back({FrameDefect::Kind::SNotTransitive, {x, y, z, u}});
        }
      }
    for (std::uint32_t t = up; t; t &= t - 1) {
      int y = low_bit(t);
      for (std::uint32_t t2 = f.upset(y) & up; t2; t2 &= t2 - 1) {
        int z = low_bit(t2);
        if (!f.s_has(x, y, z))
          out.push_back({FrameDefect::Kind::SMissingR, {x, y, z}});
      }
    }
  }
  return out;
}

// ── Text format ──────────────────────────────────────────────────────────────

namespace detail {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int parse_world(const std::string& tok, int n, std::size_t line_no) {
  std::size_t used = 0;
  int w = -1;
  try {
    w = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw FrameParseError("expected a world index, got '" + tok + "'", line_no);
  }
  if (used != tok.size())
    throw FrameParseError("expected a world index, got '" + tok + "'", line_no);
  if (w < 0 || w >= n)
    throw FrameParseError("world " + std::to_string(w) +
                              " out of range (worlds are 0.." +
                              std::to_string(n - 1) + ")",
                          line_no);
  return w;
}

// Splits "a<sep>b" on the single separator character.
std::pair<std::string, std::string> split_pair(const std::string& tok, char sep,
                                               std::size_t line_no) {
  std::size_t at = tok.find(sep);
  if (at == std::string::npos || tok.find(sep, at + 1) != std::string::npos)
    throw FrameParseError("expected a pair like 'a" + std::string(1, sep) +
                              "b', got '" + tok + "'",
                          line_no);
  return {tok.substr(0, at), tok.substr(at + 1)};
}

}  // namespace

bool FrameBuilder::consume(const std::string& line, std::size_t line_no) {
  std::vector<std::string> toks = tokens_of(line);
  if (toks.empty()) return true;  // blank or comment-only line
  const std::string& head = toks[0];
  if (head == "worlds") {
    if (have_worlds_)
      throw FrameParseError("duplicate 'worlds' header", line_no);
    if (toks.size() != 2)
      throw FrameParseError("'worlds' expects exactly one count", line_no);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(toks[1], &used);
      if (used != toks[1].size()) throw std::invalid_argument(toks[1]);
    } catch (const std::exception&) {
      throw FrameParseError("bad world count '" + toks[1] + "'", line_no);
    }
    if (n < 1 || n > kMaxWorlds)
      throw FrameParseError("world count must be between 1 and " +
                                std::to_string(kMaxWorlds) + ", got " +
                                std::to_string(n),
                            line_no);
    frame_ = Frame(n);
    have_worlds_ = true;
    return true;
  }
  if (head == "R") {
    if (!have_worlds_)
      throw FrameParseError("'R' before 'worlds' header", line_no);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      auto [a, b] = split_pair(toks[i], '>', line_no);
      frame_.add_r(parse_world(a, frame_.n, line_no),
                   parse_world(b, frame_.n, line_no));
    }
    return true;
  }
  if (head == "S") {
    if (!have_worlds_)
      throw FrameParseError("'S' before 'worlds' header", line_no);
    if (toks.size() < 2)
      throw FrameParseError("'S' expects a world followed by ':'", line_no);
    std::string wtok = toks[1];
    std::size_t first_pair = 2;
    if (!wtok.empty() && wtok.back() == ':') {
      wtok.pop_back();
    } else if (toks.size() >= 3 && toks[2] == ":") {
      first_pair = 3;
    } else {
      throw FrameParseError("'S' expects a world followed by ':'", line_no);
    }
    int x = parse_world(wtok, frame_.n, line_no);
    for (std::size_t i = first_pair; i < toks.size(); ++i) {
      auto [a, b] = split_pair(toks[i], '~', line_no);
      frame_.add_s(x, parse_world(a, frame_.n, line_no),
                   parse_world(b, frame_.n, line_no));
    }
    return true;
  }
  return false;  // not a frame directive
}

Frame FrameBuilder::finish(std::size_t last_line) const {
  if (!have_worlds_)
    throw FrameParseError("missing 'worlds' header", last_line);
  Frame f = frame_;
  for (int x = 0; x < f.n; ++x)
    for (std::uint32_t t = f.upset(x); t; t &= t - 1) {
      int y = low_bit(t);
      f.add_s(x, y, y);
    }
  return f;
}

}  // namespace detail

Frame parse_frame(const std::string& text) {
  detail::FrameBuilder builder;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!builder.consume(line, line_no)) {
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      throw FrameParseError("unknown directive '" + head + "'", line_no);
    }
  }
  return builder.finish(line_no == 0 ? 1 : line_no);
}

std::string serialize_frame(const Frame& f) {
  std::ostringstream out;
  out << "worlds " << f.n << "\n";
  std::string rline;
  for (int x = 0; x < f.n; ++x)
    for (std::uint32_t t = f.upset(x); t; t &= t - 1)
      rline += " " + pair_str(x, '>', low_bit(t));
  if (!rline.empty()) out << "R" << rline << "\n";
  for (int x = 0; x < f.n; ++x) {
    std::string sline;
    for (int y = 0; y < f.n; ++y)
      for (std::uint32_t t = f.s[static_cast<std::size_t>(x)]
                                [static_cast<std::size_t>(y)];
           t; t &= t - 1)
        sline += " " + pair_str(y, '~', low_bit(t));
    if (!sline.empty()) out << "S " << x << ":" << sline << "\n";
  }
  return out.str();
}

std::uint64_t frame_hash(const Frame& f) {
  const std::string text = serialize_frame(f);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string frame_hash_hex(const Frame& f) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = frame_hash(f);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ── Enumeration ──────────────────────────────────────────────────────────────

namespace {

// All transitive irreflexive R on 0..n-1, each exactly once, by inserting
// world k into the relation built on 0..k-1.  Valid insertions choose a
// successor set A (closed upward) and predecessor set B (closed downward)
// with A ∩ B = ∅ and B × A already related; the restriction of the final
// relation to 0..k-1 is independent of later insertions, so each R is
// reached along exactly one choice path.  emit returns false to stop.
void enum_transitive_orders(
    int n, const std::function<bool(const std::vector<std::uint32_t>&)>& emit) {
  std::vector<std::uint32_t> succ(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> pred(static_cast<std::size_t>(n), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int k) -> void {
    if (stop) return;
    if (k == n) {
      if (!emit(succ)) stop = true;
      return;
    }
    const std::uint32_t full = (1u << k) - 1u;
    for (std::uint32_t a = 0; a <= full; ++a) {
      bool up_closed = true;
      for (std::uint32_t t = a; t; t &= t - 1)
        if (succ[static_cast<std::size_t>(low_bit(t))] & ~a) {
          up_closed = false;
          break;
        }
      if (!up_closed) {
        if (a == full) break;
        continue;
      }
      for (std::uint32_t b = 0; b <= full; ++b) {
        if (b & a) {
          if (b == full) break;
          continue;
        }
        bool fits = true;
        for (std::uint32_t t = b; t && fits; t &= t - 1) {
          int w = low_bit(t);
          if (pred[static_cast<std::size_t>(w)] & ~b) fits = false;
          if ((succ[static_cast<std::size_t>(w)] & a) != a) fits = false;
        }
        if (fits) {
          succ[static_cast<std::size_t>(k)] = a;
          pred[static_cast<std::size_t>(k)] = b;
          for (std::uint32_t t = a; t; t &= t - 1)
            pred[static_cast<std::size_t>(low_bit(t))] |= 1u << k;
          for (std::uint32_t t = b; t; t &= t - 1)
            succ[static_cast<std::size_t>(low_bit(t))] |= 1u << k;
          self(self, k + 1);
          for (std::uint32_t t = a; t; t &= t - 1)
            pred[static_cast<std::size_t>(low_bit(t))] &= ~(1u << k);
          for (std::uint32_t t = b; t; t &= t - 1)
            succ[static_cast<std::size_t>(low_bit(t))] &= ~(1u << k);
          succ[static_cast<std::size_t>(k)] = 0;
          pred[static_cast<std::size_t>(k)] = 0;
          if (stop) return;
        }
        if (b == full) break;
      }
      if (a == full) break;
    }
  };
  rec(rec, 0);
}

// All reflexive transitive relations on m points containing `base`
// (itself a preorder), as dense bitmask rows, sorted.  Every such relation
// is reachable from base by repeatedly adding one missing pair and
// re-closing transitively, so a worklist sweep with deduplication finds
// them all.
std::vector<std::vector<std::uint32_t>> preorder_extensions(
    const std::vector<std::uint32_t>& base) {
  const int m = static_cast<int>(base.size());
  auto closed = [m](std::vector<std::uint32_t> rel) {
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        if ((rel[static_cast<std::size_t>(i)] >> k) & 1u)
          rel[static_cast<std::size_t>(i)] |= rel[static_cast<std::size_t>(k)];
    return rel;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> work;
  work.push_back(closed(base));
  seen.insert(work.back());
  for (std::size_t wi = 0; wi < work.size(); ++wi) {
    const std::vector<std::uint32_t> cur = work[wi];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j || ((cur[static_cast<std::size_t>(i)] >> j) & 1u)) continue;
        std::vector<std::uint32_t> next = cur;
        next[static_cast<std::size_t>(i)] |= 1u << j;
        next = closed(std::move(next));
        if (seen.insert(next).second) work.push_back(next);
      }
  }
  return {seen.begin(), seen.end()};
}

bool frame_key_less(const Frame& a, const Frame& b) {
  if (a.r != b.r) return a.r < b.r;
  return a.s < b.s;
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::uint32_t t = mask; t; t &= t - 1)
    out |= 1u << perm[static_cast<std::size_t>(low_bit(t))];
  return out;
}

// Canonical representative of an isomorphism class: no world relabeling
// yields a lexicographically smaller (R, S) key.
bool is_canonical(const Frame& f) {
  const int n = f.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Frame g(n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int x = 0; x < n; ++x) {
      g.r[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] =
          permute_mask(f.r[static_cast<std::size_t>(x)], perm);
      for (int y = 0; y < n; ++y)
        g.s[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])]
           [static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])] =
               permute_mask(f.s[static_cast<std::size_t>(x)]
                               [static_cast<std::size_t>(y)],
                            perm);
    }
    if (frame_key_less(g, f)) return false;
  }
  return true;
}

}  // namespace

int longest_r_chain(const std::vector<std::uint32_t>& r) {
  const int n = static_cast<int>(r.size());
  std::vector<int> height(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int x) -> int {
    int& h = height[static_cast<std::size_t>(x)];
    if (h) return h;
    h = 1;
    for (std::uint32_t t = r[static_cast<std::size_t>(x)]; t; t &= t - 1)
      h = std::max(h, 1 + self(self, low_bit(t)));
    return h;
  };
  int best = 0;
  for (int x = 0; x < n; ++x) best = std::max(best, rec(rec, x));
  return best;
}

void for_each_frame(
    int n, bool dedup,
    const std::function<bool(const std::vector<std::uint32_t>&)>& r_ok,
    const std::function<bool(const Frame&)>& fn) {
  if (n < 1 || n > kMaxWorlds)
    throw std::invalid_argument("frame enumeration needs 1 <= n <= " +
                                std::to_string(kMaxWorlds) + ", got " +
                                std::to_string(n));
  // Extension lists are cached by the dense base relation; the same base
  // shows up for every world whose successor set induces the same pattern.
  std::map<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>>
      cache;
  enum_transitive_orders(n, [&](const std::vector<std::uint32_t>& succ) -> bool {
    if (r_ok && !r_ok(succ)) return true;
    Frame f(n);
    f.r = succ;
    std::vector<std::vector<int>> dom(static_cast<std::size_t>(n));
    std::vector<const std::vector<std::vector<std::uint32_t>>*> opts(
        static_cast<std::size_t>(n), nullptr);
    for (int x = 0; x < n; ++x) {
      for (std::uint32_t t = succ[static_cast<std::size_t>(x)]; t; t &= t - 1)
        dom[static_cast<std::size_t>(x)].push_back(low_bit(t));
      const auto& d = dom[static_cast<std::size_t>(x)];
      if (d.empty()) continue;
      const int m = static_cast<int>(d.size());
      std::vector<std::uint32_t> base(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < m; ++i) {
        base[static_cast<std::size_t>(i)] = 1u << i;
        for (int j = 0; j < m; ++j)
          if (f.r_has(d[static_cast<std::size_t>(i)],
                      d[static_cast<std::size_t>(j)]))
            base[static_cast<std::size_t>(i)] |= 1u << j;
      }
      auto it = cache.find(base);
      if (it == cache.end())
        it = cache.emplace(base, preorder_extensions(base)).first;
      opts[static_cast<std::size_t>(x)] = &it->second;
    }
    bool keep_going = true;
    auto assemble = [&](auto&& self, int x) -> void {
      if (!keep_going) return;
      if (x == n) {
        if (!dedup || is_canonical(f))
          if (!fn(f)) keep_going = false;
        return;
      }
      const auto& d = dom[static_cast<std::size_t>(x)];
      if (d.empty()) {
        self(self, x + 1);
        return;
      }
      const int m = static_cast<int>(d.size());
      for (const auto& rel : *opts[static_cast<std::size_t>(x)]) {
        for (int i = 0; i < m; ++i) {
          std::uint32_t row = 0;
          for (std::uint32_t t = rel[static_cast<std::size_t>(i)]; t;
               t &= t - 1)
            row |= 1u << d[static_cast<std::size_t>(low_bit(t))];
          f.s[static_cast<std::size_t>(x)]
             [static_cast<std::size_t>(d[static_cast<std::size_t>(i)])] = row;
        }
        self(self, x + 1);
        if (!keep_going) return;
      }
    };
    assemble(assemble, 0);
    return keep_going;
  });
}

void for_each_frame(int n, bool dedup,
                    const std::function<bool(const Frame&)>& fn) {
  for_each_frame(n, dedup, nullptr, fn);
}

std::uint64_t count_frames(int n, bool dedup) {
  std::uint64_t count = 0;
  for_each_frame(n, dedup, [&](const Frame&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace il
