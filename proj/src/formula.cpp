// ============================================================================
// formula.cpp — AST construction, parser, printer, and rewriting
// ============================================================================

#include "il/formula.hpp"

#include <cctype>
#include <sstream>

namespace il {

// ── VarName ──────────────────────────────────────────────────────────────────

std::string VarName::str() const {
  std::string s(1, base);
  if (index != kNoIndex) s += std::to_string(index);
  return s;
}

VarName VarName::parse(const std::string& text) {
  if (text.empty() || text[0] < 'a' || text[0] > 'z')
    throw std::invalid_argument("variable name must start with a-z: '" + text +
                                "'");
  if (text.size() == 1) return VarName(text[0]);
  int idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("variable name must be [a-z][0-9]*: '" +
                                  text + "'");
    idx = idx * 10 + (text[i] - '0');
  }
  return VarName(text[0], idx);
}

// ── Factories ────────────────────────────────────────────────────────────────

Fptr bot() {
  static const Fptr f =
      std::make_shared<const Formula>(Conn::Bottom, VarName{}, nullptr, nullptr);
  return f;
}

Fptr top() {
  static const Fptr t =
      std::make_shared<const Formula>(Conn::Top, VarName{}, nullptr, nullptr);
  return t;
}

Fptr var(VarName v) {
  return std::make_shared<const Formula>(Conn::Var, v, nullptr, nullptr);
}

Fptr var(char base, int index) { return var(VarName(base, index)); }

Fptr neg(Fptr a) {
  return std::make_shared<const Formula>(Conn::Neg, VarName{}, std::move(a),
                                         nullptr);
}

Fptr conj(Fptr a, Fptr b) {
  return std::make_shared<const Formula>(Conn::And, VarName{}, std::move(a),
                                         std::move(b));
}

Fptr disj(Fptr a, Fptr b) {
  return std::make_shared<const Formula>(Conn::Or, VarName{}, std::move(a),
                                         std::move(b));
}

Fptr imp(Fptr a, Fptr b) {
  return std::make_shared<const Formula>(Conn::Imp, VarName{}, std::move(a),
                                         std::move(b));
}

Fptr box(Fptr a) {
  return std::make_shared<const Formula>(Conn::Box, VarName{}, std::move(a),
                                         nullptr);
}

Fptr dia(Fptr a) {
  return std::make_shared<const Formula>(Conn::Dia, VarName{}, std::move(a),
                                         nullptr);
}

Fptr rhd(Fptr a, Fptr b) {
  return std::make_shared<const Formula>(Conn::Rhd, VarName{}, std::move(a),
                                         std::move(b));
}

// ── Structural equality ──────────────────────────────────────────────────────

bool equal(const Fptr& a, const Fptr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Conn::Bottom:
    case Conn::Top:
      return true;
    case Conn::Var:
      return a->var() == b->var();
    case Conn::Neg:
    case Conn::Box:
    case Conn::Dia:
      return equal(a->lhs(), b->lhs());
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
    case Conn::Rhd:
      return equal(a->lhs(), b->lhs()) && equal(a->rhs(), b->rhs());
  }
  return false;
}

// ── Tokenizer ────────────────────────────────────────────────────────────────

namespace {

enum class Tok : std::uint8_t {
  End, LParen, RParen, TopSym, BotSym, Neg, And, Or, Imp, Box, Dia, Rhd, Ident,
};

struct Token {
  Tok kind;
  std::size_t pos;
  VarName name;  // Ident only
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  // Matches a UTF-8 alias at position i; returns its token kind and length.
  bool utf8_alias(std::size_t i, Tok& kind, std::size_t& len) const {
    static const struct {
      const char* bytes;
      Tok kind;
    } kAliases[] = {
        {"¬", Tok::Neg},  // ¬
        {"∧", Tok::And},  // ∧
        {"∨", Tok::Or},   // ∨
        {"→", Tok::Imp},  // →
        {"□", Tok::Box},  // □
        {"◇", Tok::Dia},  // ◇
        {"▷", Tok::Rhd},  // ▷
        {"⊤", Tok::TopSym},  // ⊤
        {"⊥", Tok::BotSym},  // ⊥
    };
    for (const auto& a : kAliases) {
      std::size_t n = std::char_traits<char>::length(a.bytes);
      if (text_.compare(i, n, a.bytes) == 0) {
        kind = a.kind;
        len = n;
        return true;
      }
    }
    return false;
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    cur_.pos = pos_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': cur_.kind = Tok::LParen; ++pos_; return;
      case ')': cur_.kind = Tok::RParen; ++pos_; return;
      case 'T': cur_.kind = Tok::TopSym; ++pos_; return;
      case 'F': cur_.kind = Tok::BotSym; ++pos_; return;
      case '~': cur_.kind = Tok::Neg; ++pos_; return;
      case '&': cur_.kind = Tok::And; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          cur_.kind = Tok::Imp;
          pos_ += 2;
          return;
        }
        throw ParseError(pos_, "expected '->'");
      case '[':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ']') {
          cur_.kind = Tok::Box;
          pos_ += 2;
          return;
        }
        throw ParseError(pos_, "expected '[]'");
      case '<':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          cur_.kind = Tok::Dia;
          pos_ += 2;
          return;
        }
        throw ParseError(pos_, "expected '<>'");
      case '|':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          cur_.kind = Tok::Rhd;
          pos_ += 2;
          return;
        }
        cur_.kind = Tok::Or;
        ++pos_;
        return;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      cur_.kind = Tok::Ident;
      cur_.name = VarName::parse(text_.substr(start, pos_ - start));
      return;
    }
    Tok kind;
    std::size_t len;
    if (utf8_alias(pos_, kind, len)) {
      cur_.kind = kind;
      pos_ += len;
      return;
    }
    throw ParseError(pos_, "unexpected character");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token cur_{};
};

// ── Recursive-descent parser ─────────────────────────────────────────────────
//
// imp   := rhd ('->' imp)?                        right-associative
// rhd   := andor ('|>' andor)?                    non-associative
// andor := unary (('&' | '|') unary)*             left-associative, one level
// unary := ('~' | '[]' | '<>') unary | atom
// atom  := 'T' | 'F' | ident | '(' imp ')'

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Fptr run() {
    Fptr f = parse_imp();
    if (lex_.peek().kind != Tok::End)
      throw ParseError(lex_.peek().pos, "unexpected trailing input");
    return f;
  }

 private:
  Fptr parse_imp() {
    Fptr l = parse_rhd();
    if (lex_.peek().kind == Tok::Imp) {
      lex_.take();
      return imp(std::move(l), parse_imp());
    }
    return l;
  }

  Fptr parse_rhd() {
    Fptr l = parse_andor();
    if (lex_.peek().kind != Tok::Rhd) return l;
    lex_.take();
    Fptr r = parse_andor();
    if (lex_.peek().kind == Tok::Rhd)
      throw ParseError(lex_.peek().pos,
                       "'|>' is non-associative; parenthesize nested '|>'");
    return rhd(std::move(l), std::move(r));
  }

  Fptr parse_andor() {
    Fptr l = parse_unary();
    while (true) {
      const Tok k = lex_.peek().kind;
      if (k == Tok::And) {
        lex_.take();
        l = conj(std::move(l), parse_unary());
      } else if (k == Tok::Or) {
        lex_.take();
        l = disj(std::move(l), parse_unary());
      } else {
        return l;
      }
    }
  }

  Fptr parse_unary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Neg: lex_.take(); return neg(parse_unary());
      case Tok::Box: lex_.take(); return box(parse_unary());
      case Tok::Dia: lex_.take(); return dia(parse_unary());
      default: return parse_atom();
    }
  }

  Fptr parse_atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::TopSym: return top();
      case Tok::BotSym: return bot();
      case Tok::Ident: return var(t.name);
      case Tok::LParen: {
        Fptr f = parse_imp();
        const Token close = lex_.take();
        if (close.kind != Tok::RParen)
          throw ParseError(close.pos, "expected ')'");
        return f;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "expected a formula");
    }
  }

  Lexer lex_;
};

}  // namespace

Fptr parse(const std::string& text) { return Parser(text).run(); }

// ── Printer ──────────────────────────────────────────────────────────────────

namespace {

// Precedence levels; larger binds tighter.
int prec(Conn k) {
  switch (k) {
    case Conn::Imp: return 1;
    case Conn::Rhd: return 2;
    case Conn::And:
    case Conn::Or:  return 3;
    case Conn::Neg:
    case Conn::Box:
    case Conn::Dia: return 4;
    default:        return 5;  // atoms
  }
}

// `need` is the minimal precedence printable without parentheses here.
void print_rec(const Fptr& f, int need, std::string& out) {
  const int p = prec(f->kind());
  const bool parens = p < need;
  if (parens) out += '(';
  switch (f->kind()) {
    case Conn::Bottom: out += 'F'; break;
    case Conn::Top:    out += 'T'; break;
    case Conn::Var:    out += f->var().str(); break;
    case Conn::Neg:
      out += '~';
      print_rec(f->lhs(), 4, out);
      break;
    case Conn::Box:
      out += "[]";
      print_rec(f->lhs(), 4, out);
      break;
    case Conn::Dia:
      out += "<>";
      print_rec(f->lhs(), 4, out);
      break;
    case Conn::And:
    case Conn::Or:
      // Left-associative shared level: right child needs a strictly
      // tighter level so `p & (q & r)` keeps its parentheses.
      print_rec(f->lhs(), 3, out);
      out += f->kind() == Conn::And ? " & " : " | ";
      print_rec(f->rhs(), 4, out);
      break;
    case Conn::Rhd:
      // Non-associative: both children must be above the |> level.
      print_rec(f->lhs(), 3, out);
      out += " |> ";
      print_rec(f->rhs(), 3, out);
      break;
    case Conn::Imp:
      // Right-associative: only the left child needs the tighter level.
      print_rec(f->lhs(), 2, out);
      out += " -> ";
      print_rec(f->rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print(const Fptr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

// ── Rewriting ────────────────────────────────────────────────────────────────

Fptr substitute(const Fptr& f, const std::map<VarName, Fptr>& m) {
  switch (f->kind()) {
    case Conn::Bottom:
    case Conn::Top:
      return f;
    case Conn::Var: {
      auto it = m.find(f->var());
      return it == m.end() ? f : it->second;
    }
    case Conn::Neg: return neg(substitute(f->lhs(), m));
    case Conn::Box: return box(substitute(f->lhs(), m));
    case Conn::Dia: return dia(substitute(f->lhs(), m));
    case Conn::And:
      return conj(substitute(f->lhs(), m), substitute(f->rhs(), m));
    case Conn::Or:
      return disj(substitute(f->lhs(), m), substitute(f->rhs(), m));
    case Conn::Imp:
      return imp(substitute(f->lhs(), m), substitute(f->rhs(), m));
    case Conn::Rhd:
      return rhd(substitute(f->lhs(), m), substitute(f->rhs(), m));
  }
  return f;
}

namespace {

// Does `needle` occur as a subtree of `hay` (including hay itself)?
bool occurs(const Fptr& needle, const Fptr& hay) {
  if (equal(needle, hay)) return true;
  if (hay->lhs() && occurs(needle, hay->lhs())) return true;
  if (hay->rhs() && occurs(needle, hay->rhs())) return true;
  return false;
}

Fptr replace_rec(const Fptr& f,
                 const std::vector<std::pair<Fptr, Fptr>>& pairs) {
  for (const auto& [pat, rep] : pairs)
    if (equal(f, pat)) return rep;
  switch (f->kind()) {
    case Conn::Bottom:
    case Conn::Top:
    case Conn::Var:
      return f;
    case Conn::Neg: return neg(replace_rec(f->lhs(), pairs));
    case Conn::Box: return box(replace_rec(f->lhs(), pairs));
    case Conn::Dia: return dia(replace_rec(f->lhs(), pairs));
    case Conn::And:
      return conj(replace_rec(f->lhs(), pairs), replace_rec(f->rhs(), pairs));
    case Conn::Or:
      return disj(replace_rec(f->lhs(), pairs), replace_rec(f->rhs(), pairs));
    case Conn::Imp:
      return imp(replace_rec(f->lhs(), pairs), replace_rec(f->rhs(), pairs));
    case Conn::Rhd:
      return rhd(replace_rec(f->lhs(), pairs), replace_rec(f->rhs(), pairs));
  }
  return f;
}

}  // namespace

Fptr replace_all(const Fptr& f,
                 const std::vector<std::pair<Fptr, Fptr>>& pairs) {
  // Reject duplicate patterns and patterns whose occurrences in f could
  // overlap: if one pattern occurs inside another and the larger occurs in
  // f, each occurrence of the larger contains an occurrence of the smaller.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      const Fptr& pi = pairs[i].first;
      const Fptr& pj = pairs[j].first;
      if (j > i && equal(pi, pj))
        throw OverlapError("duplicate replacement pattern: " + print(pi));
      if (occurs(pi, pj) && !equal(pi, pj) && occurs(pj, f))
        throw OverlapError("overlapping replacement patterns: " + print(pi) +
                           " occurs inside " + print(pj));
    }
  }
  return replace_rec(f, pairs);
}

namespace {

void collect_vars(const Fptr& f, std::set<VarName>& out) {
  if (f->kind() == Conn::Var) {
    out.insert(f->var());
    return;
  }
  if (f->lhs()) collect_vars(f->lhs(), out);
  if (f->rhs()) collect_vars(f->rhs(), out);
}

// In-order collection of the maximal &-chain rooted at f.
void collect_conjuncts(const Fptr& f, std::vector<Fptr>& out) {
  if (f->kind() == Conn::And) {
    collect_conjuncts(f->lhs(), out);
    collect_conjuncts(f->rhs(), out);
  } else {
    out.push_back(flatten_and(f));
  }
}

}  // namespace

std::set<VarName> vars(const Fptr& f) {
  std::set<VarName> out;
  collect_vars(f, out);
  return out;
}

Fptr flatten_and(const Fptr& f) {
  switch (f->kind()) {
    case Conn::Bottom:
    case Conn::Top:
    case Conn::Var:
      return f;
    case Conn::Neg: return neg(flatten_and(f->lhs()));
    case Conn::Box: return box(flatten_and(f->lhs()));
    case Conn::Dia: return dia(flatten_and(f->lhs()));
    case Conn::Or:
      return disj(flatten_and(f->lhs()), flatten_and(f->rhs()));
    case Conn::Imp:
      return imp(flatten_and(f->lhs()), flatten_and(f->rhs()));
    case Conn::Rhd:
      return rhd(flatten_and(f->lhs()), flatten_and(f->rhs()));
    case Conn::And: {
      std::vector<Fptr> parts;
      collect_conjuncts(f, parts);
      Fptr acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = conj(std::move(acc), parts[i]);
      return acc;
    }
  }
  return f;
}

bool equal_mod_and(const Fptr& a, const Fptr& b) {
  return equal(flatten_and(a), flatten_and(b));
}

}  // namespace il
