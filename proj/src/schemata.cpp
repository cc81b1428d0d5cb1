// ============================================================================
// schemata.cpp — principle generators
// ============================================================================

#include "il/schemata.hpp"

#include <stdexcept>

namespace il {

namespace {

// Schematic atoms.  The slim family indexes a, b, c, e; the broad family
// uses plain a, b, c plus indexed d.
Fptr va(int i) { return var('a', i); }
Fptr vb(int i) { return var('b', i); }
Fptr vc(int i) { return var('c', i); }
Fptr ve(int i) { return var('e', i); }
Fptr vd(int i) { return var('d', i); }

void require_nonneg(int n, const char* what) {
  if (n < 0)
    throw std::invalid_argument(std::string(what) +
                                " requires index >= 0, got " +
                                std::to_string(n));
}

}  // namespace

// ── Slim family ──────────────────────────────────────────────────────────────

Fptr slim(int n) {
  require_nonneg(n, "slim");
  // Base:  a0 |> b0  ->  ~(a0 |> ~c0)  |>  b0 & []c0
  Fptr f = imp(rhd(va(0), vb(0)),
               rhd(neg(rhd(va(0), neg(vc(0)))), conj(vb(0), box(vc(0)))));
  // Each later member arises from the previous solely by one simultaneous
  // subtree replacement; the pair lists alternate with step parity.
  for (int step = 1; step <= n; ++step) {
    if (step % 2 == 1) {
      const int m = (step - 1) / 2;
      // ~(a_m |> ~c_m)   becomes   ~(a_m |> ~c_m) & (e_{m+1} |> <>a_{m+1})
      // b_m & []c_m      becomes   b_m & []c_m & (e_{m+1} |> a_{m+1})
      const Fptr guard = neg(rhd(va(m), neg(vc(m))));
      const Fptr tail = conj(vb(m), box(vc(m)));
      f = replace_all(
          f, {{guard, conj(guard, rhd(ve(m + 1), dia(va(m + 1))))},
              {tail, conj(tail, rhd(ve(m + 1), va(m + 1)))}});
    } else {
      const int m = (step - 2) / 2;
      // b_m                  becomes  b_m & (a_{m+1} |> b_{m+1})
      // <>a_{m+1}            becomes  ~(a_{m+1} |> ~c_{m+1})
      // (e_{m+1} |> a_{m+1}) becomes  (e_{m+1} |> a_{m+1}) &
      //                               (e_{m+1} |> b_{m+1} & []c_{m+1})
      const Fptr probe = rhd(ve(m + 1), va(m + 1));
      f = replace_all(
          f,
          {{vb(m), conj(vb(m), rhd(va(m + 1), vb(m + 1)))},
           {dia(va(m + 1)), neg(rhd(va(m + 1), neg(vc(m + 1))))},
           {probe,
            conj(probe, rhd(ve(m + 1), conj(vb(m + 1), box(vc(m + 1)))))}});
    }
  }
  return f;
}

std::tuple<Fptr, Fptr, Fptr> slim_xyz(int n) {
  require_nonneg(n, "slim_xyz");
  // X_0 = a0 |> b0
  // Y_0 = ~(a0 |> ~c0)     (the companion presentation's own display and
  //                         its successor clause both carry the inner
  //                         negation, and the base members must coincide)
  // Z_0 = b0 & []c0
  Fptr x = rhd(va(0), vb(0));
  Fptr y = neg(rhd(va(0), neg(vc(0))));
  Fptr z = conj(vb(0), box(vc(0)));
  for (int i = 1; i <= n; ++i) {
    // X_i = a_i |> b_i & (X_{i-1})
    // Y_i = ~(a_i |> ~c_i) & (e_i |> Y_{i-1})
    // Z_i = b_i & (X_{i-1}) & []c_i & (e_i |> a_{i-1}) & (e_i |> Z_{i-1})
    Fptr zi = conj(
        conj(conj(conj(vb(i), x), box(vc(i))), rhd(ve(i), va(i - 1))),
        rhd(ve(i), z));
    Fptr yi = conj(neg(rhd(va(i), neg(vc(i)))), rhd(ve(i), y));
    Fptr xi = rhd(va(i), conj(vb(i), x));
    x = std::move(xi);
    y = std::move(yi);
    z = std::move(zi);
  }
  return {x, y, z};
}

Fptr slim_xyz_base() { return top(); }

Fptr slim_tilde(int n) {
  auto [x, y, z] = slim_xyz(n);
  return imp(std::move(x), rhd(std::move(y), std::move(z)));
}

std::map<VarName, Fptr> renaming_map(int k) {
  std::map<VarName, Fptr> m;
  for (int i = 0; i <= k; ++i) {
    m[VarName('a', i)] = va(k - i);
    m[VarName('b', i)] = vb(k - i);
    m[VarName('c', i)] = vc(k - i);
  }
  for (int i = 1; i <= k; ++i) m[VarName('e', i)] = ve(k + 1 - i);
  return m;
}

// ── Broad family ─────────────────────────────────────────────────────────────

Fptr broad_u(int n) {
  if (n < 1)
    throw std::invalid_argument("broad_u requires index >= 1, got " +
                                std::to_string(n));
  // U_1 = <>~(d1 |> ~c);  U_{k+1} = <>((d_k |> d_{k+1}) & U_k)
  Fptr u = dia(neg(rhd(vd(1), neg(var('c')))));
  for (int k = 2; k <= n; ++k)
    u = dia(conj(rhd(vd(k - 1), vd(k)), std::move(u)));
  return u;
}

Fptr broad(int n) {
  require_nonneg(n, "broad");
  const Fptr a = var('a');
  const Fptr b = var('b');
  const Fptr c = var('c');
  const Fptr tail = conj(b, box(c));
  if (n == 0) return imp(rhd(a, b), rhd(neg(rhd(a, neg(c))), tail));
  // a |> b  ->  U_n & (d_n |> a)  |>  b & []c
  return imp(rhd(a, b), rhd(conj(broad_u(n), rhd(vd(n), a)), tail));
}

// ── Fixed principles ─────────────────────────────────────────────────────────

Fptr fixed(FixedName name) {
  const Fptr p = var('p');
  const Fptr q = var('q');
  const Fptr r = var('r');
  const Fptr a = var('a');
  const Fptr b = var('b');
  const Fptr c = var('c');
  const Fptr d = var('d');
  const Fptr e = var('e');
  const Fptr f = var('f');
  switch (name) {
    case FixedName::L1:  // [](p -> q) -> ([]p -> []q)
      return imp(box(imp(p, q)), imp(box(p), box(q)));
    case FixedName::L2:  // []p -> [][]p
      return imp(box(p), box(box(p)));
    case FixedName::L3:  // []([]p -> p) -> []p
      return imp(box(imp(box(p), p)), box(p));
    case FixedName::J1:  // [](p -> q) -> (p |> q)
      return imp(box(imp(p, q)), rhd(p, q));
    case FixedName::J2:  // (p |> q) & (q |> r) -> (p |> r)
      return imp(conj(rhd(p, q), rhd(q, r)), rhd(p, r));
    case FixedName::J3:  // (p |> r) & (q |> r) -> (p | q |> r)
      return imp(conj(rhd(p, r), rhd(q, r)), rhd(disj(p, q), r));
    case FixedName::J4:  // p |> q -> (<>p -> <>q)
      return imp(rhd(p, q), imp(dia(p), dia(q)));
    case FixedName::J5:  // <>p |> p
      return rhd(dia(p), p);
    case FixedName::P:  // p |> q -> [](p |> q)
      return imp(rhd(p, q), box(rhd(p, q)));
    case FixedName::M:  // p |> q -> p & []r |> q & []r
      return imp(rhd(p, q), rhd(conj(p, box(r)), conj(q, box(r))));
    case FixedName::W:  // a |> b -> a |> b & []~a
      return imp(rhd(a, b), rhd(a, conj(b, box(neg(a)))));
    case FixedName::Wstar:  // a |> b -> b & []c |> b & []c & []~a
      return imp(rhd(a, b),
                 rhd(conj(b, box(c)), conj(conj(b, box(c)), box(neg(a)))));
    case FixedName::P0:  // a |> <>b -> [](a |> b)
      return imp(rhd(a, dia(b)), box(rhd(a, b)));
    case FixedName::Rprin:  // a |> b -> ~(a |> ~c) |> b & []c
      return imp(rhd(a, b), rhd(neg(rhd(a, neg(c))), conj(b, box(c))));
    case FixedName::Combined:
      // a |> b -> (c |> a) & <>~(c |> ~d) & (e |> <>f) |> b & []d & (e |> f)
      return imp(rhd(a, b),
                 rhd(conj(conj(rhd(c, a), dia(neg(rhd(c, neg(d))))),
                          rhd(e, dia(f))),
                     conj(conj(b, box(d)), rhd(e, f))));
    case FixedName::PDia:  // a |> <>b -> [](a |> <>b)
      return imp(rhd(a, dia(b)), box(rhd(a, dia(b))));
  }
  throw std::invalid_argument("unknown fixed principle");
}

std::string fixed_name_str(FixedName name) {
  switch (name) {
    case FixedName::L1: return "L1";
    case FixedName::L2: return "L2";
    case FixedName::L3: return "L3";
    case FixedName::J1: return "J1";
    case FixedName::J2: return "J2";
    case FixedName::J3: return "J3";
    case FixedName::J4: return "J4";
    case FixedName::J5: return "J5";
    case FixedName::P: return "P";
    case FixedName::M: return "M";
    case FixedName::W: return "W";
    case FixedName::Wstar: return "Wstar";
    case FixedName::P0: return "P0";
    case FixedName::Rprin: return "Rprin";
    case FixedName::Combined: return "Combined";
    case FixedName::PDia: return "PDia";
  }
  return "?";
}

FixedName parse_fixed_name(const std::string& s) {
  static const std::vector<FixedName> all = {
      FixedName::L1, FixedName::L2, FixedName::L3, FixedName::J1,
      FixedName::J2, FixedName::J3, FixedName::J4, FixedName::J5,
      FixedName::P,  FixedName::M,  FixedName::W,  FixedName::Wstar,
      FixedName::P0, FixedName::Rprin, FixedName::Combined, FixedName::PDia};
  for (FixedName n : all)
    if (fixed_name_str(n) == s) return n;
  throw std::invalid_argument("unknown fixed principle name: '" + s + "'");
}

const std::vector<FixedName>& core_axioms() {
  static const std::vector<FixedName> axioms = {
      FixedName::L1, FixedName::L2, FixedName::L3, FixedName::J1,
      FixedName::J2, FixedName::J3, FixedName::J4, FixedName::J5};
  return axioms;
}

// ── SchemaId ─────────────────────────────────────────────────────────────────

SchemaId SchemaId::parse(const std::string& family, const std::string& arg) {
  SchemaId id;
  auto numeric = [&]() {
    try {
      std::size_t used = 0;
      int n = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return n;
    } catch (const std::exception&) {
      throw std::invalid_argument("schema index must be a number, got '" +
                                  arg + "'");
    }
  };
  if (family == "slim") {
    id.family = Family::SlimR;
    id.n = numeric();
  } else if (family == "slim-x") {
    id.family = Family::SlimX;
    id.n = numeric();
  } else if (family == "slim-y") {
    id.family = Family::SlimY;
    id.n = numeric();
  } else if (family == "slim-z") {
    id.family = Family::SlimZ;
    id.n = numeric();
  } else if (family == "slim-tilde") {
    id.family = Family::SlimTilde;
    id.n = numeric();
  } else if (family == "broad-u") {
    id.family = Family::BroadU;
    id.n = numeric();
  } else if (family == "broad") {
    id.family = Family::BroadR;
    id.n = numeric();
  } else if (family == "fixed") {
    id.family = Family::Fixed;
    id.name = parse_fixed_name(arg);
  } else {
    throw std::invalid_argument(
        "unknown schema family '" + family +
        "' (expected slim, slim-x, slim-y, slim-z, slim-tilde, broad, "
        "broad-u, or fixed)");
  }
  return id;
}

std::string SchemaId::str() const {
  switch (family) {
    case Family::SlimR: return "slim " + std::to_string(n);
    case Family::SlimX: return "slim-x " + std::to_string(n);
    case Family::SlimY: return "slim-y " + std::to_string(n);
    case Family::SlimZ: return "slim-z " + std::to_string(n);
    case Family::SlimTilde: return "slim-tilde " + std::to_string(n);
    case Family::BroadU: return "broad-u " + std::to_string(n);
    case Family::BroadR: return "broad " + std::to_string(n);
    case Family::Fixed: return "fixed " + fixed_name_str(name);
  }
  return "?";
}

Fptr generate(const SchemaId& id) {
  switch (id.family) {
    case SchemaId::Family::SlimR: return slim(id.n);
    case SchemaId::Family::SlimX: return std::get<0>(slim_xyz(id.n));
    case SchemaId::Family::SlimY: return std::get<1>(slim_xyz(id.n));
    case SchemaId::Family::SlimZ: return std::get<2>(slim_xyz(id.n));
    case SchemaId::Family::SlimTilde: return slim_tilde(id.n);
    case SchemaId::Family::BroadU: return broad_u(id.n);
    case SchemaId::Family::BroadR: return broad(id.n);
    case SchemaId::Family::Fixed: return fixed(id.name);
  }
  throw std::invalid_argument("unknown schema family");
}

}  // namespace il
