#include "synth/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "synth/ops.hpp"

namespace synth {

Expr e_var(std::string name) {
  Expr e;
  e.kind = ExprKind::Var;
  e.name = std::move(name);
  return e;
}

Expr e_app(Expr fn, Expr arg) {
  Expr e;
  e.kind = ExprKind::App;
  e.kids.push_back(std::move(fn));
  e.kids.push_back(std::move(arg));
  return e;
}

Expr e_hole(int id, Ty ann) {
  Expr e;
  e.kind = ExprKind::Hole;
  e.hole_id = id;
  e.ann = std::move(ann);
  return e;
}

Spine spine_of(const Expr& e) {
  Spine s;
  const Expr* cur = &e;
  while (cur->kind == ExprKind::App) {
    s.args.push_back(&cur->kids[1]);
    cur = &cur->kids[0];
  }
  s.head = cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

int count_op_nodes(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Var: return 1;
    case ExprKind::Hole: return 0;
    case ExprKind::App: return count_op_nodes(e.kids[0]) + count_op_nodes(e.kids[1]);
  }
  return 0;
}

int count_holes(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Var: return 0;
    case ExprKind::Hole: return 1;
    case ExprKind::App: return count_holes(e.kids[0]) + count_holes(e.kids[1]);
  }
  return 0;
}

int max_hole_id(const Expr& e) {
  int m = -1;
  if (e.kind == ExprKind::Hole) m = e.hole_id;
  for (const auto& k : e.kids) m = std::max(m, max_hole_id(k));
  return m;
}

static void collect_holes(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == ExprKind::Hole) {
    out.push_back(&e);
    return;
  }
  if (e.kind == ExprKind::App) {
    // left-to-right reading order matches the spine order
    collect_holes(e.kids[0], out);
    collect_holes(e.kids[1], out);
  }
}

std::vector<const Expr*> holes_of(const Expr& e) {
  std::vector<const Expr*> out;
  collect_holes(e, out);
  return out;
}

const Expr* find_hole(const Expr& e, int hole_id) {
  for (const Expr* h : holes_of(e))
    if (h->hole_id == hole_id) return h;
  return nullptr;
}

// --- printing ----------------------------------------------------------------

static void print_rec(const Expr& e, std::ostream& os, bool arg_pos) {
  switch (e.kind) {
    case ExprKind::Var:
      os << e.name;
      return;
    case ExprKind::Hole:
      if (arg_pos) os << "(";
      os << "undefined :: " << print_ty(e.ann);
      if (arg_pos) os << ")";
      return;
    case ExprKind::App: {
      Spine s = spine_of(e);
      os << "(";
      print_rec(*s.head, os, false);
      for (const Expr* a : s.args) {
        os << " ";
        print_rec(*a, os, true);
      }
      os << ")";
      return;
    }
  }
}

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print_rec(e, os, false);
  return os.str();
}

// --- parsing -------------------------------------------------------------------

namespace {

struct ExprParser {
  const std::string& text;
  const OperatorSet& env;
  size_t pos = 0;
  int next_hole = 0;

  ExprParser(const std::string& t, const OperatorSet& e) : text(t), env(e) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  [[noreturn]] void err(const std::string& msg) { throw SyntaxError(pos, msg); }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    if (pos == start) err("expected identifier");
    return text.substr(start, pos - start);
  }

  // Parses a type with the shared type parser, continuing from `pos`.
  Ty embedded_type() {
    skip_ws();
    // find the extent the type parser may consume: until the parenthesis
    // balance of the enclosing expression would go negative
    size_t end = pos;
    int depth = 0;
    while (end < text.size()) {
      char c = text[end];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      ++end;
    }
    std::string chunk = text.substr(pos, end - pos);
    try {
      Ty t = parse_ty(chunk);
      pos = end;
      return t;
    } catch (const TypeParseError& e) {
      throw SyntaxError(pos + e.offset, e.what());
    }
  }

  Expr hole() {
    // "undefined" already consumed
    skip_ws();
    if (text.compare(pos, 2, "::") == 0) {
      pos += 2;
      Ty ann = embedded_type();
      return e_hole(next_hole++, ann);
    }
    // bare `undefined`: maximally unconstrained hole
    return e_hole(next_hole++, t_var("a"));
  }

  Expr atom() {
    skip_ws();
    if (pos >= text.size()) err("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      Expr e = group();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') err("expected ')'");
      ++pos;
      return e;
    }
    std::string name = ident();
    if (name == "undefined") return hole();
    if (!env.contains(name)) throw UnknownOperator(name);
    return e_var(name);
  }

  // inside parens: one or more expressions, applied left to right
  Expr group() {
    Expr e = atom();
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ')') break;
      Expr arg = atom();
      e = e_app(std::move(e), std::move(arg));
    }
    return e;
  }

  Expr top() {
    Expr e = atom();
    skip_ws();
    if (pos < text.size()) err("trailing input");
    return e;
  }
};

}  // namespace

Expr parse_expr(const std::string& text, const OperatorSet& env) {
  ExprParser p(text, env);
  return p.top();
}

}  // namespace synth
