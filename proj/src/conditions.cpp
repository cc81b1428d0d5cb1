// ============================================================================
// conditions.cpp — condition evaluators and witness constructions
// ============================================================================

#include "il/conditions.hpp"

#include <bit>
#include <set>
#include <stdexcept>

#include "il/schemata.hpp"

namespace il {

namespace {

int low_bit(std::uint32_t mask) { return std::countr_zero(mask); }
std::uint32_t bit(int w) { return 1u << w; }

bool world_ok(const Frame& fr, int w) { return w >= 0 && w < fr.n; }

}  // namespace

// ── Slim conditions ──────────────────────────────────────────────────────────

std::optional<GTrace> g_check(const Frame& fr, int n, int x, int y, int z) {
  for (std::uint32_t t = fr.upset(z); t; t &= t - 1) {
    const int u = low_bit(t);
    if (!fr.s_has(x, y, u)) return GTrace{{u, std::nullopt}};
    if (n > 0)
      for (std::uint32_t t2 = fr.s[static_cast<std::size_t>(x)]
                                  [static_cast<std::size_t>(u)];
           t2; t2 &= t2 - 1) {
        const int v = low_bit(t2);
        if (auto sub = g_check(fr, n - 1, z, u, v)) {
          GTrace trace;
          trace.reserve(sub->size() + 1);
          trace.push_back({u, v});
          trace.insert(trace.end(), sub->begin(), sub->end());
          return trace;
        }
      }
  }
  return std::nullopt;
}

std::optional<SlimFailure> slim_condition(const Frame& fr, int n) {
  for (int w = 0; w < fr.n; ++w)
    for (std::uint32_t tx = fr.upset(w); tx; tx &= tx - 1) {
      const int x = low_bit(tx);
      for (std::uint32_t ty = fr.upset(x); ty; ty &= ty - 1) {
        const int y = low_bit(ty);
        for (std::uint32_t tz = fr.s[static_cast<std::size_t>(w)]
                                    [static_cast<std::size_t>(y)];
             tz; tz &= tz - 1) {
          const int z = low_bit(tz);
          if (auto trace = g_check(fr, n, x, y, z))
            return SlimFailure{w, x, y, z, n, std::move(*trace)};
        }
      }
    }
  return std::nullopt;
}

// ── Broad conditions ─────────────────────────────────────────────────────────

std::optional<BroadChain> b_holds(const Frame& fr, int n, int x_hi, int x0,
                                  int y0, int y_hi) {
  if (!world_ok(fr, x_hi) || !world_ok(fr, x0) || !world_ok(fr, y0) ||
      !world_ok(fr, y_hi))
    return std::nullopt;
  if (n == 0) {
    if (fr.r_has(x_hi, x0) && fr.r_has(x0, y0) && fr.s_has(x_hi, y0, y_hi)) {
      BroadChain c;
      c.n = 0;
      c.xs = {x_hi, x0};
      c.ys = {y0, y_hi};
      return c;
    }
    return std::nullopt;
  }
  // ∃ xₙ, yₙ:  x_hi R xₙ  ∧  ℬ_{n-1}(xₙ, x0, y0, yₙ)  ∧  yₙ S_{x_hi} y_hi
  for (std::uint32_t t = fr.upset(x_hi); t; t &= t - 1) {
    const int xn = low_bit(t);
    for (int yn = 0; yn < fr.n; ++yn) {
      if (!fr.s_has(x_hi, yn, y_hi)) continue;
      if (auto sub = b_holds(fr, n - 1, xn, x0, y0, yn)) {
        BroadChain c;
        c.n = n;
        c.xs.reserve(sub->xs.size() + 1);
        c.xs.push_back(x_hi);
        c.xs.insert(c.xs.end(), sub->xs.begin(), sub->xs.end());
        c.ys = std::move(sub->ys);
        c.ys.push_back(y_hi);
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<BroadFailure> broad_condition(const Frame& fr, int n) {
  for (int x_hi = 0; x_hi < fr.n; ++x_hi)
    for (int x0 = 0; x0 < fr.n; ++x0)
      for (int y0 = 0; y0 < fr.n; ++y0)
        for (int y_hi = 0; y_hi < fr.n; ++y_hi) {
          auto chain = b_holds(fr, n, x_hi, x0, y0, y_hi);
          if (!chain) continue;
          for (std::uint32_t t = fr.upset(y_hi); t; t &= t - 1) {
            const int u = low_bit(t);
            if (!fr.s_has(x0, y0, u))
              return BroadFailure{std::move(*chain), u};
          }
        }
  return std::nullopt;
}

// ── P and M conditions ───────────────────────────────────────────────────────

std::optional<std::array<int, 4>> pm_condition(const Frame& fr, PM which) {
  const int n = fr.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int u = 0; u < n; ++u) {
          if (which == PM::P) {
            if (fr.r_has(x, y) && fr.r_has(y, z) && fr.s_has(x, z, u) &&
                !fr.s_has(y, z, u))
              return std::array<int, 4>{x, y, z, u};
          } else {
            if (fr.s_has(x, y, z) && fr.r_has(z, u) && !fr.r_has(y, u))
              return std::array<int, 4>{x, y, z, u};
          }
        }
  return std::nullopt;
}

// ── Witness constructions ────────────────────────────────────────────────────

namespace {

// Checks that the recorded trace really descends through violated clauses
// of 𝒢_level(x,y,z) on this frame.
bool replay_slim(const Frame& fr, const SlimFailure& f) {
  if (!world_ok(fr, f.w) || !world_ok(fr, f.x) || !world_ok(fr, f.y) ||
      !world_ok(fr, f.z))
    return false;
  if (!fr.r_has(f.w, f.x) || !fr.r_has(f.x, f.y) || !fr.s_has(f.w, f.y, f.z))
    return false;
  int x = f.x, y = f.y, z = f.z, level = f.level;
  for (std::size_t i = 0; i < f.trace.size(); ++i) {
    const GStep& st = f.trace[i];
    if (!world_ok(fr, st.u) || !fr.r_has(z, st.u)) return false;
    if (!st.v.has_value())
      return i + 1 == f.trace.size() && !fr.s_has(x, y, st.u);
    if (level <= 0) return false;
    if (!world_ok(fr, *st.v) || !fr.s_has(x, st.u, *st.v)) return false;
    const int nx = z, ny = st.u, nz = *st.v;
    x = nx;
    y = ny;
    z = nz;
    --level;
  }
  return false;  // ran out of trace without reaching a violated clause
}

// The recursive refutation valuation for a ¬𝒢_{2k}(x,y,z) trace.  Ensures,
// under the final valuation: x forces the k-th antecedent bundle, the
// c_k-assurance of y holds at x, z forces the (k-1)-th syntactic chain,
// and z refutes the k-th consequent bundle.  b_k is set by the caller
// (either the top-level assembly or the enclosing recursion step).
void build_slim(const Frame& fr, int k, int x, int y, [[maybe_unused]] int z,
                const GStep* steps, std::size_t len, Valuation& val) {
  const GStep& first = steps[0];
  const auto sx = [&fr](int a, int b) {
    return fr.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  if (!first.v.has_value()) {
    // Terminal clause at this level: zRu with ¬yS_xu, so z refutes □c_k
    // once c_k is exactly the S_x-cone of y.
    val.set(VarName('c', k), sx(x, y));
    val.set(VarName('a', k), bit(y));
    return;
  }
  const int u = first.u;
  const int v = *first.v;
  const GStep& second = steps[1];
  const int a = second.u;
  if (!second.v.has_value()) {
    // One level down (zRu, uS_xv, vRa, ¬uS_za): z refutes e_k ▷ a_{k-1}.
    // c_{k-1} must cover every S_v-successor of a so that v forces the
    // (k-1)-th antecedent bundle; the S_v-cone of a does exactly that
    // (a membership-only cone from another index can miss a itself).
    val.set(VarName('c', k), sx(x, y));
    val.set(VarName('a', k), bit(y));
    val.set(VarName('e', k), bit(u));
    val.set(VarName('a', k - 1), bit(a));
    val.set(VarName('b', k - 1), bit(a));
    val.set(VarName('c', k - 1), sx(v, a));
    return;
  }
  // Two levels down: recurse on ¬𝒢_{2(k-1)}(v,a,b), then pin the level-k
  // variables; none of them occur in the invariants the recursion
  // established, so those survive the overrides.
  const int b = *second.v;
  build_slim(fr, k - 1, v, a, b, steps + 2, len - 2, val);
  val.set(VarName('a', k), bit(y));
  val.set(VarName('e', k), bit(u));
  val.set(VarName('c', k), sx(x, y));
  val.set(VarName('a', k - 1), bit(a));
  val.set(VarName('b', k - 1), bit(b));
}

// Bounded search over proof-shaped valuations: every truth set is ∅, a
// singleton, an R-cone, or an S_x-cone (c-like variables get the cones;
// the others only ∅/singletons, matching the shapes the constructions
// produce).  Returns the first refutation found, scanning at most `cap`
// candidate valuations.
std::optional<std::pair<Valuation, int>> bounded_fallback(const Frame& fr,
                                                          const Fptr& f) {
  const std::set<VarName> vs = vars(f);
  const std::vector<VarName> varv(vs.begin(), vs.end());
  std::vector<std::uint32_t> point_shapes = {0};
  for (int w = 0; w < fr.n; ++w) point_shapes.push_back(bit(w));
  std::set<std::uint32_t> cones(point_shapes.begin(), point_shapes.end());
  for (int x = 0; x < fr.n; ++x) {
    cones.insert(fr.upset(x));
    for (int y = 0; y < fr.n; ++y)
      cones.insert(
          fr.s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
  const std::vector<std::uint32_t> cone_shapes(cones.begin(), cones.end());
  std::vector<const std::vector<std::uint32_t>*> lists;
  lists.reserve(varv.size());
  for (const VarName& v : varv)
    lists.push_back(v.base == 'c' ? &cone_shapes : &point_shapes);

  std::vector<std::size_t> idx(varv.size(), 0);
  std::uint64_t cap = 2000000;
  while (cap-- > 0) {
    Valuation val;
    for (std::size_t j = 0; j < varv.size(); ++j)
      val.set(varv[j], (*lists[j])[idx[j]]);
    for (int w = 0; w < fr.n; ++w)
      if (!force(fr, val, w, f)) return std::make_pair(val, w);
    std::size_t j = 0;
    while (j < idx.size()) {
      if (++idx[j] < lists[j]->size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == idx.size()) return std::nullopt;  // space exhausted
  }
  return std::nullopt;  // cap reached
}

}  // namespace

Witness slim_witness_valuation(const Frame& fr, int k,
                               const SlimFailure& failure) {
  if (k < 0 || failure.level != 2 * k)
    throw std::invalid_argument(
        "slim witness needs a failure of the even condition 2k, got level " +
        std::to_string(failure.level) + " for k=" + std::to_string(k));
  if (!replay_slim(fr, failure))
    throw std::invalid_argument(
        "the supplied failure does not replay on this frame");
  Valuation val;
  build_slim(fr, k, failure.x, failure.y, failure.z, failure.trace.data(),
             failure.trace.size(), val);
  val.set(VarName('b', k), bit(failure.z));
  const Fptr target = slim_tilde(k);
  if (!force(fr, val, failure.w, target))
    return Witness{std::move(val), failure.w, Witness::Path::Primary};
  if (auto fb = bounded_fallback(fr, target))
    return Witness{std::move(fb->first), fb->second, Witness::Path::Fallback};
  throw std::runtime_error(
      "slim witness construction did not refute and the bounded fallback "
      "found no refutation");
}

namespace {

bool replay_chain(const Frame& fr, int n, const BroadChain& c) {
  const std::size_t len = static_cast<std::size_t>(n) + 2;
  if (c.n != n || c.xs.size() != len || c.ys.size() != len) return false;
  for (int w : c.xs)
    if (!world_ok(fr, w)) return false;
  for (int w : c.ys)
    if (!world_ok(fr, w)) return false;
  for (std::size_t j = 0; j + 1 < len; ++j)
    if (!fr.r_has(c.xs[j], c.xs[j + 1])) return false;
  if (!fr.r_has(c.xs[len - 1], c.ys[0])) return false;  // x₀ R y₀
  // y_i S_{x_{i+1}} y_{i+1} with x_{i+1} stored at xs[n-i]
  for (int i = 0; i <= n; ++i)
    if (!fr.s_has(c.xs[static_cast<std::size_t>(n - i)],
                  c.ys[static_cast<std::size_t>(i)],
                  c.ys[static_cast<std::size_t>(i + 1)]))
      return false;
  return true;
}

}  // namespace

Witness broad_witness_valuation(const Frame& fr, int n,
                                const BroadChain& chain) {
  if (n < 0) throw std::invalid_argument("broad witness needs n >= 0");
  if (!replay_chain(fr, n, chain))
    throw std::invalid_argument(
        "the supplied chain does not satisfy the recursion on this frame");
  const int x0 = chain.x0();
  const int y0 = chain.y0();
  const int ytop = chain.y_top();
  bool violated = false;
  for (std::uint32_t t = fr.upset(ytop); t && !violated; t &= t - 1)
    if (!fr.s_has(x0, y0, low_bit(t))) violated = true;
  if (!violated)
    throw std::invalid_argument(
        "the chain does not violate the condition: every R-successor of the "
        "top y-world is S-reachable from y0 below x0");
  Valuation val;
  for (int i = 1; i <= n; ++i)
    val.set(VarName('d', i), bit(chain.ys[static_cast<std::size_t>(i - 1)]));
  val.set(VarName('a'), bit(chain.ys[static_cast<std::size_t>(n)]));
  val.set(VarName('b'), bit(chain.ys[static_cast<std::size_t>(n + 1)]));
  val.set(VarName('c'),
          fr.s[static_cast<std::size_t>(x0)][static_cast<std::size_t>(y0)]);
  const Fptr target = broad(n);
  if (!force(fr, val, chain.head(), target))
    return Witness{std::move(val), chain.head(), Witness::Path::Primary};
  if (auto fb = bounded_fallback(fr, target))
    return Witness{std::move(fb->first), fb->second, Witness::Path::Fallback};
  throw std::runtime_error(
      "broad witness construction did not refute and the bounded fallback "
      "found no refutation");
}

// ── Certificates ─────────────────────────────────────────────────────────────

std::string slim_claim(const SlimFailure& f) {
  return "F" + std::to_string(f.level) + " fails at w=" + std::to_string(f.w) +
         " x=" + std::to_string(f.x) + " y=" + std::to_string(f.y) +
         " z=" + std::to_string(f.z);
}

std::string broad_claim(const BroadFailure& f) {
  const BroadChain& c = f.chain;
  std::string s = "F^" + std::to_string(c.n) + " fails at";
  for (std::size_t j = 0; j < c.xs.size(); ++j)
    s += " x" + std::to_string(c.n + 1 - static_cast<int>(j)) + "=" +
         std::to_string(c.xs[j]);
  for (std::size_t i = 0; i < c.ys.size(); ++i)
    s += " y" + std::to_string(i) + "=" + std::to_string(c.ys[i]);
  s += " u=" + std::to_string(f.u);
  return s;
}

std::string serialize_certificate(const SeparationCertificate& cert) {
  CountermodelDoc doc;
  doc.frame = cert.frame;
  doc.v = cert.v;
  doc.world = cert.world;
  doc.claim = broad_claim(cert.failure);
  return serialize_countermodel(doc);
}

}  // namespace il
