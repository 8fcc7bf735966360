#include "trigproof/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "trigproof/errors.hpp"

namespace trigproof {

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Ring: return "ring";
    case StepKind::Substitute: return "substitute";
    case StepKind::DivideBy: return "divide_by";
    case StepKind::InstantiateLemma: return "lemma";
  }
  return "?";
}

std::string lemma_kind_name(LemmaKind k) {
  switch (k) {
    case LemmaKind::Axiom: return "axiom";
    case LemmaKind::Derived: return "derived";
    case LemmaKind::Theorem: return "theorem";
  }
  return "?";
}

namespace {

enum class Tok { Ident, Int, Str, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 0;
  int col = 0;
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;  // comment to end of line
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), lineno, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      out.push_back({Tok::Int, line.substr(i, j - i), lineno, col});
      i = j;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < line.size() && line[j] != '"') ++j;
      if (j >= line.size())
        throw ParseError(lineno, col, "unterminated string literal");
      out.push_back({Tok::Str, line.substr(i + 1, j - i - 1), lineno, col});
      i = j + 1;
    } else if (c == ':' && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Tok::Sym, ":=", lineno, col});
      i += 2;
    } else {
      std::string sym(1, c);
      if (std::string("+-*/^()=,:").find(c) == std::string::npos)
        throw ParseError(lineno, col, "unexpected character '" + sym + "'");
      out.push_back({Tok::Sym, sym, lineno, col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", lineno, static_cast<int>(line.size()) + 1});
  return out;
}

// Recursive-descent expression parser over a token span. Consumes the
// longest valid expression and leaves the cursor on the first token that
// cannot extend it.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t& pos,
             const std::vector<Atom>& atoms)
      : toks_(toks), pos_(pos), atoms_(atoms) {}

  RatFunc parse() { return parse_sum(); }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool is_sym(const char* s) const {
    return cur().kind == Tok::Sym && cur().text == s;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }

  RatFunc parse_sum() {
    RatFunc v = parse_product();
    while (is_sym("+") || is_sym("-")) {
      bool plus = cur().text == "+";
      ++pos_;
      RatFunc r = parse_product();
      v = plus ? v + r : v - r;
    }
    return v;
  }

  RatFunc parse_product() {
    RatFunc v = parse_unary();
    while (is_sym("*") || is_sym("/")) {
      bool mul = cur().text == "*";
      ++pos_;
      RatFunc r = parse_unary();
      if (mul) {
        v = v * r;
      } else {
        if (r.is_zero()) fail("division by the zero expression");
        v = v / r;
      }
    }
    return v;
  }

  RatFunc parse_unary() {
    if (is_sym("-")) {
      ++pos_;
      return -parse_unary();
    }
    return parse_power();
  }

  RatFunc parse_power() {
    RatFunc base = parse_primary();
    if (is_sym("^")) {
      ++pos_;
      bool neg = false;
      if (is_sym("-")) {
        neg = true;
        ++pos_;
      }
      if (cur().kind != Tok::Int) fail("expected integer exponent after '^'");
      int e = std::stoi(cur().text);
      ++pos_;
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFunc parse_primary() {
    if (cur().kind == Tok::Int) {
      Rational r(BigInt(cur().text), BigInt(1));
      ++pos_;
      return RatFunc::constant(r);
    }
    if (cur().kind == Tok::Ident) {
      const std::string& name = cur().text;
      // Structural keywords never name atoms; seeing one here is a syntax
      // error in the surrounding line, not an undeclared-atom problem.
      for (const char* kw : {"by", "nonzero", "with", "domain", "bind"})
        if (name == kw) fail("expected expression");
      bool known = false;
      for (const auto& a : atoms_)
        if (a.name == name) known = true;
      if (!known) throw UndeclaredAtom(name);
      ++pos_;
      return RatFunc::variable(name);
    }
    if (is_sym("(")) {
      ++pos_;
      RatFunc v = parse_sum();
      if (!is_sym(")")) fail("expected ')'");
      ++pos_;
      return v;
    }
    fail("expected expression");
  }

  const std::vector<Token>& toks_;
  std::size_t& pos_;
  const std::vector<Atom>& atoms_;
};

struct LineParser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;

  const Token& cur() const { return toks[pos]; }
  bool at_end() const { return cur().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }

  bool accept_sym(const char* s) {
    if (cur().kind == Tok::Sym && cur().text == s) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect_sym(const char* s) {
    if (!accept_sym(s)) fail(std::string("expected '") + s + "'");
  }
  bool accept_ident(const char* s) {
    if (cur().kind == Tok::Ident && cur().text == s) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string expect_ident(const char* what) {
    if (cur().kind != Tok::Ident) fail(std::string("expected ") + what);
    std::string t = cur().text;
    ++pos;
    return t;
  }
  void expect_end() {
    if (!at_end()) fail("trailing tokens on line");
  }

  RatFunc expr(const std::vector<Atom>& atoms) {
    ExprParser p(toks, pos, atoms);
    return p.parse();
  }

  MultiPoly poly(const std::vector<Atom>& atoms) {
    const Token& at = cur();
    RatFunc f = expr(atoms);
    if (!f.is_polynomial())
      throw ParseError(at.line, at.col, "expected a polynomial expression");
    return f.num();
  }

  std::vector<MultiPoly> poly_list(const std::vector<Atom>& atoms) {
    std::vector<MultiPoly> out;
    out.push_back(poly(atoms));
    while (accept_sym(",")) out.push_back(poly(atoms));
    return out;
  }
};

}  // namespace

RatFunc parse_expression(const std::string& text,
                         const std::vector<Atom>& atoms) {
  auto toks = lex_line(text, 1);
  LineParser lp{toks};
  RatFunc v = lp.expr(atoms);
  lp.expect_end();
  return v;
}

LemmaFile parse_lemma_text(const std::string& text,
                           const std::string& source_path) {
  LemmaFile lf;
  lf.source_path = source_path;
  bool have_lemma_line = false;
  bool in_script = false;
  std::set<std::string> labels;

  auto check_label = [&](const std::string& l) {
    if (!labels.insert(l).second) throw DuplicateLabel(l);
  };

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto toks = lex_line(line, lineno);
    LineParser lp{toks};
    if (lp.at_end()) continue;
    std::string head = lp.expect_ident("directive");

    if (head == "lemma") {
      if (have_lemma_line) lp.fail("duplicate 'lemma' line");
      have_lemma_line = true;
      lf.id = lp.expect_ident("lemma id");
      if (!lp.accept_ident("kind")) lp.fail("expected 'kind'");
      std::string k = lp.expect_ident("lemma kind");
      if (k == "axiom")
        lf.kind = LemmaKind::Axiom;
      else if (k == "derived")
        lf.kind = LemmaKind::Derived;
      else if (k == "theorem")
        lf.kind = LemmaKind::Theorem;
      else
        lp.fail("unknown lemma kind '" + k + "'");
      while (!lp.at_end()) {
        if (lp.accept_ident("schema")) {
          lf.schema = true;
        } else if (lp.accept_ident("tag")) {
          std::string t = lp.expect_ident("tag name");
          while (lp.accept_sym("-")) t += "-" + lp.expect_ident("tag name");
          lf.tags.push_back(t);
        } else {
          lp.fail("unexpected token after lemma declaration");
        }
      }
    } else if (head == "figure") {
      lf.figure = lp.expect_ident("figure id");
      lp.expect_end();
    } else if (head == "depends") {
      lf.declared_deps.push_back(lp.expect_ident("dependency id"));
      while (lp.accept_sym(","))
        lf.declared_deps.push_back(lp.expect_ident("dependency id"));
      lp.expect_end();
    } else if (head == "note") {
      std::string n;
      while (!lp.at_end()) {
        if (lp.cur().kind == Tok::Sym && lp.cur().text == "-") {
          lp.accept_sym("-");
          n += "-";
        } else {
          if (!n.empty() && n.back() != '-') n += " ";
          n += lp.expect_ident("note text");
        }
      }
      if (n.empty()) lp.fail("empty note");
      lf.notes.push_back(n);
    } else if (head == "atom") {
      Atom a;
      a.name = lp.expect_ident("atom name");
      while (!lp.at_end()) {
        if (lp.accept_ident("domain")) {
          if (lp.cur().kind != Tok::Str) lp.fail("expected quoted domain note");
          a.domain_note = lp.cur().text;
          ++lp.pos;
        } else if (lp.accept_ident("bind")) {
          a.bind = lp.expect_ident("quantity name");
        } else if (lp.accept_ident("nonzero")) {
          a.nonzero = true;
        } else {
          lp.fail("unexpected token in atom declaration");
        }
      }
      if (lf.find_atom(a.name))
        throw ParseError(lineno, 1, "atom '" + a.name + "' declared twice");
      lf.atoms.push_back(a);
    } else if (head == "nonzero") {
      auto polys = lp.poly_list(lf.atoms);
      lp.expect_end();
      auto& dst = in_script ? lf.script->scope_nonzero : lf.scope_nonzero;
      for (auto& p : polys) dst.push_back(std::move(p));
    } else if (head == "statement") {
      Equation eq;
      eq.label = lp.expect_ident("statement label");
      check_label(eq.label);
      lp.expect_sym(":");
      eq.lhs = lp.expr(lf.atoms);
      lp.expect_sym("=");
      eq.rhs = lp.expr(lf.atoms);
      lp.expect_end();
      lf.statements.push_back(std::move(eq));
    } else if (head == "script") {
      if (in_script) lp.fail("duplicate 'script' line");
      std::string sid = lp.expect_ident("script id");
      lp.expect_end();
      if (!have_lemma_line) {
        // Bare script without lemma framing: synthesize a derived lemma.
        have_lemma_line = true;
        lf.id = sid;
        lf.kind = LemmaKind::Derived;
      } else if (sid != lf.id) {
        lp.fail("script id '" + sid + "' does not match lemma id '" + lf.id +
                "'");
      }
      in_script = true;
      lf.script.emplace();
      lf.script->id = sid;
    } else if (head == "given") {
      if (!in_script) lp.fail("'given' outside a script");
      Given g;
      g.eq.label = lp.expect_ident("given label");
      check_label(g.eq.label);
      lp.expect_sym(":");
      g.eq.lhs = lp.expr(lf.atoms);
      lp.expect_sym("=");
      g.eq.rhs = lp.expr(lf.atoms);
      if (!lp.accept_ident("by")) lp.fail("expected 'by'");
      g.justification = lp.expect_ident("justification id");
      lp.expect_end();
      lf.script->givens.emplace_back(std::move(g));
    } else if (head == "hyp") {
      if (!in_script) lp.fail("'hyp' outside a script");
      Hypothesis h;
      h.target = lp.expect_ident("hypothesis target atom");
      if (!lf.find_atom(h.target)) throw UndeclaredAtom(h.target);
      lp.expect_sym(":=");
      h.replacement = lp.expr(lf.atoms);
      if (h.replacement.contains_atom(h.target))
        lp.fail("hypothesis target '" + h.target +
                "' occurs in its replacement");
      if (lp.accept_ident("nonzero")) h.nonvanishing = lp.poly_list(lf.atoms);
      lp.expect_end();
      lf.script->givens.emplace_back(std::move(h));
    } else if (head == "step") {
      if (!in_script) lp.fail("'step' outside a script");
      Step s;
      s.label = lp.expect_ident("step label");
      check_label(s.label);
      lp.expect_sym(":");
      s.eq.label = s.label;
      s.eq.lhs = lp.expr(lf.atoms);
      lp.expect_sym("=");
      s.eq.rhs = lp.expr(lf.atoms);
      if (!lp.accept_ident("by")) lp.fail("expected 'by'");
      std::string kind = lp.expect_ident("step justification");
      if (kind == "ring") {
        s.kind = StepKind::Ring;
      } else if (kind == "substitute") {
        s.kind = StepKind::Substitute;
        lp.expect_sym("(");
        s.ref = lp.expect_ident("substitution reference");
        lp.expect_sym(")");
      } else if (kind == "divide_by") {
        s.kind = StepKind::DivideBy;
        lp.expect_sym("(");
        s.divisor = lp.poly(lf.atoms);
        lp.expect_sym(")");
      } else if (kind == "lemma") {
        s.kind = StepKind::InstantiateLemma;
        lp.expect_sym("(");
        s.lemma_id = lp.expect_ident("lemma id");
        if (lp.accept_ident("with")) {
          do {
            LemmaArg arg;
            arg.atom = lp.expect_ident("binding atom");
            lp.expect_sym("=");
            arg.value = lp.expr(lf.atoms);
            s.bindings.push_back(std::move(arg));
          } while (lp.accept_sym(","));
        }
        lp.expect_sym(")");
      } else {
        lp.fail("unknown step justification '" + kind + "'");
      }
      lp.expect_end();
      lf.script->steps.push_back(std::move(s));
    } else if (head == "conclude") {
      if (!in_script) lp.fail("'conclude' outside a script");
      lf.script->conclude_label = lp.expect_ident("step label");
      lp.expect_end();
    } else {
      lp.fail("unknown directive '" + head + "'");
    }
  }

  if (!have_lemma_line)
    throw ParseError(lineno, 1, "missing 'lemma' or 'script' line");
  if (lf.script) {
    lf.script->atoms = lf.atoms;
    if (lf.script->conclude_label.empty())
      throw ParseError(lineno, 1, "script has no 'conclude' line");
    bool found = false;
    for (const auto& s : lf.script->steps)
      if (s.label == lf.script->conclude_label) found = true;
    if (!found) throw UnresolvedJustification(lf.script->conclude_label);
  }
  if (lf.kind != LemmaKind::Axiom && !lf.script)
    throw ParseError(lineno, 1,
                     "derived/theorem lemma '" + lf.id + "' has no script");
  if (lf.kind == LemmaKind::Axiom && lf.script)
    throw ParseError(lineno, 1,
                     "axiom '" + lf.id + "' must not carry a script");
  return lf;
}

LemmaFile parse_lemma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lemma_text(buf.str(), path);
}

ProofScript parse_script(const std::string& text) {
  LemmaFile lf = parse_lemma_text(text);
  if (!lf.script) throw ParseError(1, 1, "input contains no script");
  return *lf.script;
}

}  // namespace trigproof
