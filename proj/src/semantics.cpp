// ============================================================================
// semantics.cpp — forcing and frame-validity sweeps
// ============================================================================

#include "il/semantics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace il {

namespace {

int low_bit(std::uint32_t mask) { return std::countr_zero(mask); }

std::uint32_t all_worlds(int n) {
  return n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
}

}  // namespace

// ── Reference evaluator ──────────────────────────────────────────────────────

bool force(const Frame& fr, const Valuation& v, int w, const Fptr& f) {
  switch (f->kind()) {
    case Conn::Bottom:
      return false;
    case Conn::Top:
      return true;
    case Conn::Var:
      return (v.mask(f->var()) >> w) & 1u;
    case Conn::Neg:
      return !force(fr, v, w, f->lhs());
    case Conn::And:
      return force(fr, v, w, f->lhs()) && force(fr, v, w, f->rhs());
    case Conn::Or:
      return force(fr, v, w, f->lhs()) || force(fr, v, w, f->rhs());
    case Conn::Imp:
      return !force(fr, v, w, f->lhs()) || force(fr, v, w, f->rhs());
    case Conn::Box: {
      for (std::uint32_t t = fr.upset(w); t; t &= t - 1)
        if (!force(fr, v, low_bit(t), f->lhs())) return false;
      return true;
    }
    case Conn::Dia: {
      for (std::uint32_t t = fr.upset(w); t; t &= t - 1)
        if (force(fr, v, low_bit(t), f->lhs())) return true;
      return false;
    }
    case Conn::Rhd: {
      for (std::uint32_t t = fr.upset(w); t; t &= t - 1) {
        const int y = low_bit(t);
        if (!force(fr, v, y, f->lhs())) continue;
        bool witnessed = false;
        for (std::uint32_t t2 = fr.s[static_cast<std::size_t>(w)]
                                    [static_cast<std::size_t>(y)];
             t2; t2 &= t2 - 1)
          if (force(fr, v, low_bit(t2), f->rhs())) {
            witnessed = true;
            break;
          }
        if (!witnessed) return false;
      }
      return true;
    }
  }
  return false;
}

bool assuring(const Frame& fr, const Valuation& v, const Fptr& c, int x,
              int y) {
  if (!fr.r_has(x, y)) return false;
  if (!force(fr, v, y, c)) return false;
  for (std::uint32_t t = fr.s[static_cast<std::size_t>(x)]
                             [static_cast<std::size_t>(y)];
       t; t &= t - 1)
    if (!force(fr, v, low_bit(t), c)) return false;
  return true;
}

bool model_valid(const Frame& fr, const Valuation& v, const Fptr& f) {
  for (int w = 0; w < fr.n; ++w)
    if (!force(fr, v, w, f)) return false;
  return true;
}

// ── Compiled evaluator ───────────────────────────────────────────────────────
//
// A formula compiles to a postfix program whose registers hold the truth
// set of one distinct subformula as a world bitmask; shared subformulas
// compile once.  One program run evaluates the formula at all worlds
// simultaneously, so a validity sweep costs |program| · |W| bit operations
// per valuation.

namespace {

struct Instr {
  Conn op;
  int a = -1;     // operand register
  int b = -1;     // second operand register
  int slot = -1;  // variable slot for Conn::Var
};

struct Program {
  std::vector<Instr> code;
  std::vector<VarName> vars;  // slot -> variable, sorted
};

Program compile(const Fptr& f, const std::vector<VarName>& extra_vars) {
  Program p;
  std::set<VarName> var_set = vars(f);
  var_set.insert(extra_vars.begin(), extra_vars.end());
  p.vars.assign(var_set.begin(), var_set.end());
  std::map<VarName, int> slot_of;
  for (std::size_t i = 0; i < p.vars.size(); ++i)
    slot_of[p.vars[i]] = static_cast<int>(i);

  std::map<std::string, int> reg_of;  // printed subformula -> register
  auto emit = [&](auto&& self, const Fptr& g) -> int {
    const std::string key = print(g);
    auto it = reg_of.find(key);
    if (it != reg_of.end()) return it->second;
    Instr ins;
    ins.op = g->kind();
    switch (g->kind()) {
      case Conn::Bottom:
      case Conn::Top:
        break;
      case Conn::Var:
        ins.slot = slot_of.at(g->var());
        break;
      case Conn::Neg:
      case Conn::Box:
      case Conn::Dia:
        ins.a = self(self, g->lhs());
        break;
      case Conn::And:
      case Conn::Or:
      case Conn::Imp:
      case Conn::Rhd:
        ins.a = self(self, g->lhs());
        ins.b = self(self, g->rhs());
        break;
    }
    const int reg = static_cast<int>(p.code.size());
    p.code.push_back(ins);
    reg_of.emplace(key, reg);
    return reg;
  };
  emit(emit, f);
  return p;
}

// Runs the program; returns the truth set of the whole formula.
std::uint32_t run(const Program& p, const Frame& fr,
                  const std::vector<std::uint32_t>& var_masks,
                  std::vector<std::uint32_t>& regs) {
  const int n = fr.n;
  const std::uint32_t full = all_worlds(n);
  regs.resize(p.code.size());
  for (std::size_t i = 0; i < p.code.size(); ++i) {
    const Instr& ins = p.code[i];
    std::uint32_t out = 0;
    switch (ins.op) {
      case Conn::Bottom:
        out = 0;
        break;
      case Conn::Top:
        out = full;
        break;
      case Conn::Var:
        out = var_masks[static_cast<std::size_t>(ins.slot)];
        break;
      case Conn::Neg:
        out = full & ~regs[static_cast<std::size_t>(ins.a)];
        break;
      case Conn::And:
        out = regs[static_cast<std::size_t>(ins.a)] &
              regs[static_cast<std::size_t>(ins.b)];
        break;
      case Conn::Or:
        out = regs[static_cast<std::size_t>(ins.a)] |
              regs[static_cast<std::size_t>(ins.b)];
        break;
      case Conn::Imp:
        out = full & (~regs[static_cast<std::size_t>(ins.a)] |
                      regs[static_cast<std::size_t>(ins.b)]);
        break;
      case Conn::Box: {
        const std::uint32_t a = regs[static_cast<std::size_t>(ins.a)];
        for (int w = 0; w < n; ++w)
          if ((fr.upset(w) & ~a) == 0) out |= 1u << w;
        break;
      }
      case Conn::Dia: {
        const std::uint32_t a = regs[static_cast<std::size_t>(ins.a)];
        for (int w = 0; w < n; ++w)
          if (fr.upset(w) & a) out |= 1u << w;
        break;
      }
      case Conn::Rhd: {
        const std::uint32_t a = regs[static_cast<std::size_t>(ins.a)];
        const std::uint32_t b = regs[static_cast<std::size_t>(ins.b)];
        for (int w = 0; w < n; ++w) {
          bool ok = true;
          for (std::uint32_t t = fr.upset(w) & a; t; t &= t - 1)
            if (!(fr.s[static_cast<std::size_t>(w)]
                      [static_cast<std::size_t>(low_bit(t))] &
                  b)) {
              ok = false;
              break;
            }
          if (ok) out |= 1u << w;
        }
        break;
      }
    }
    regs[i] = out;
  }
  return regs.back();
}

Valuation valuation_from_masks(const Program& p,
                               const std::vector<std::uint32_t>& masks) {
  Valuation v;
  for (std::size_t j = 0; j < p.vars.size(); ++j) v.set(p.vars[j], masks[j]);
  return v;
}

// Counter-based generator: the mask for sample i, variable slot j depends
// only on (seed, i, j), so runs are reproducible regardless of scheduling.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Verdict frame_valid(const Frame& fr, const Fptr& f, const Strategy& strategy,
                    const std::vector<VarName>& extra_vars) {
  const Program p = compile(f, extra_vars);
  const int n = fr.n;
  const int k = static_cast<int>(p.vars.size());
  const std::uint32_t full = all_worlds(n);
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(k), 0);
  std::vector<std::uint32_t> regs;

  if (const auto* ex = std::get_if<Exhaustive>(&strategy)) {
    const int bits = n * k;
    if (bits > ex->budget_bits) throw BudgetError(bits, ex->budget_bits);
    const std::uint64_t total = 1ull << bits;
    for (std::uint64_t val = 0; val < total; ++val) {
      for (int j = 0; j < k; ++j)
        masks[static_cast<std::size_t>(j)] =
            static_cast<std::uint32_t>(val >> (j * n)) & full;
      const std::uint32_t truth = run(p, fr, masks, regs);
      if (truth != full)
        return Countermodel{valuation_from_masks(p, masks),
                            low_bit(full & ~truth)};
    }
    return Valid{};
  }

  const auto& sa = std::get<Sampled>(strategy);
  for (std::uint64_t i = 0; i < sa.samples; ++i) {
    const std::uint64_t row = splitmix64(sa.seed ^ (0xa0761d6478bd642full + i));
    for (int j = 0; j < k; ++j)
      masks[static_cast<std::size_t>(j)] =
          static_cast<std::uint32_t>(
              splitmix64(row + 0x9e3779b97f4a7c15ull *
                                   static_cast<std::uint64_t>(j + 1))) &
          full;
    const std::uint32_t truth = run(p, fr, masks, regs);
    if (truth != full)
      return Countermodel{valuation_from_masks(p, masks),
                          low_bit(full & ~truth)};
  }
  return SampledClean{sa.samples, sa.seed};
}

// ── Countermodel documents ───────────────────────────────────────────────────

std::string serialize_countermodel(const CountermodelDoc& doc) {
  std::ostringstream out;
  if (doc.claim) out << "claim " << *doc.claim << "\n";
  out << serialize_frame(doc.frame);
  for (const auto& [name, mask] : doc.v.truth) {
    out << "V " << name.str() << ":";
    for (std::uint32_t t = mask; t; t &= t - 1) out << " " << low_bit(t);
    out << "\n";
  }
  out << "fail " << doc.world << "\n";
  return out.str();
}

CountermodelDoc parse_countermodel(const std::string& text) {
  detail::FrameBuilder builder;
  CountermodelDoc doc;
  bool have_fail = false;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto world_checked = [&](const std::string& tok) {
    if (!builder.has_header())
      throw FrameParseError("world index before 'worlds' header", line_no);
    std::size_t used = 0;
    int w = -1;
    try {
      w = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size() || w < 0 || w >= builder.world_count())
      throw FrameParseError("bad world index '" + tok + "'", line_no);
    return w;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (builder.consume(line, line_no)) continue;
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string head;
    ls >> head;
    if (head == "claim") {
      std::string rest;
      std::getline(ls, rest);
      const std::size_t at = rest.find_first_not_of(" \t");
      doc.claim = at == std::string::npos ? "" : rest.substr(at);
    } else if (head == "V") {
      std::string vtok;
      if (!(ls >> vtok) || vtok.back() != ':')
        throw FrameParseError("'V' expects a variable followed by ':'",
                              line_no);
      vtok.pop_back();
      VarName name;
      try {
        name = VarName::parse(vtok);
      } catch (const std::exception& e) {
        throw FrameParseError(e.what(), line_no);
      }
      std::uint32_t mask = 0;
      std::string wtok;
      while (ls >> wtok) mask |= 1u << world_checked(wtok);
      doc.v.set(name, mask);
    } else if (head == "fail") {
      std::string wtok;
      if (!(ls >> wtok))
        throw FrameParseError("'fail' expects a world index", line_no);
      doc.world = world_checked(wtok);
      have_fail = true;
    } else {
      throw FrameParseError("unknown directive '" + head + "'", line_no);
    }
  }
  doc.frame = builder.finish(line_no == 0 ? 1 : line_no);
  if (!have_fail)
    throw FrameParseError("missing 'fail' line", line_no == 0 ? 1 : line_no);
  return doc;
}

}  // namespace il
